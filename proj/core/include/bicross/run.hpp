#pragma once

#include "bicross/report.hpp"

#include <cstdint>
#include <string>

namespace bicross {

struct RunOptions {
    std::string command;    // validate | group-cohomology | mp-cohomology |
                            // bidegree | kac-verify | method6 | ez-verify
    std::string input_path;
    std::string target;     // block name; defaults to the unique block
    std::string convention = "a";
    std::string format = "human";
    std::int64_t modulus = 0;
    int max_degree = 2;
    int bound_p = -1, bound_q = -1;
    bool force = false;
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Dispatch one CLI task; never throws, errors become structured output
/// with the documented exit codes (2 parse, 3 validation, 4 size guard,
/// 1 failed verification).
RunResult run(const RunOptions& opt);

} // namespace bicross
