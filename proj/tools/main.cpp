#include "bicross/run.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of matched pairs of finite groups"};
    app.require_subcommand(1);

    bicross::RunOptions opt;
    auto add_common = [&](CLI::App* cmd, bool needs_modulus) {
        cmd->add_option("input", opt.input_path, "input file")->required();
        cmd->add_option("--target", opt.target, "block name (defaults to the unique one)");
        auto* mo = cmd->add_option("--modulus", opt.modulus, "coefficient modulus m");
        if (needs_modulus) mo->required();
        cmd->add_option("--max-degree", opt.max_degree, "highest degree to compute");
        cmd->add_option("--bound", [&](const std::vector<std::string>& v) {
            if (v.size() != 2) return false;
            opt.bound_p = std::stoi(v[0]);
            opt.bound_q = std::stoi(v[1]);
            return true;
        }, "two bounds p q (the bidegree for the bidegree command)")->expected(2);
        cmd->add_option("--convention", opt.convention, "a|b argument-order convention")
            ->check(CLI::IsMember({"a", "b"}));
        cmd->add_flag("--force", opt.force, "override the size guards");
        cmd->add_option("--format", opt.format, "human|structured")
            ->check(CLI::IsMember({"human", "structured"}));
    };

    add_common(app.add_subcommand("validate", "validate all blocks of an input file"), false);
    add_common(app.add_subcommand("group-cohomology", "H^n of a finite group"), true);
    add_common(app.add_subcommand("mp-cohomology", "matched-pair cohomology"), true);
    add_common(app.add_subcommand("bidegree", "bidegree cohomology H^{i,j}"), true);
    add_common(app.add_subcommand("kac-verify", "exactness of the six-term sequence"), true);
    add_common(app.add_subcommand("method6", "low-degree determination via the Lie side"), true);
    add_common(app.add_subcommand("ez-verify", "total-vs-diagonal comparison"), true);

    CLI11_PARSE(app, argc, argv);
    opt.command = app.get_subcommands().front()->get_name();

    bicross::RunResult res = bicross::run(opt);
    std::cout << res.output;
    return res.exit_code;
}
