#pragma once

#include "bicross/fingroup.hpp"
#include "bicross/liecohomology.hpp"

#include <map>
#include <string>
#include <vector>

namespace bicross {

/// Parsed input file: named blocks for groups, matched pairs, exact
/// factorizations, Lie algebras and actions, plus method-6 wiring blocks.
/// Every block is validated as it is parsed; parse errors carry line and
/// column.
struct InputDocument {
    struct LieActionBlock {
        std::string lie, group;
        std::vector<RationalMatrix> matrices;
    };
    struct GroupActionBlock {
        std::string acting, on;
        std::vector<std::vector<int>> table;
    };
    struct Method6Block {
        std::string lie, points, other;
        std::string lieside = "T";
        std::string pointsaction, otheraction, onother;
    };

    std::map<std::string, FiniteGroup> groups;
    std::map<std::string, GroupMatchedPair> pairs;
    std::map<std::string, LieAlgebraData> lies;
    std::map<std::string, LieActionBlock> lieactions;
    std::map<std::string, GroupActionBlock> groupactions;
    std::map<std::string, Method6Block> method6s;
    std::vector<std::pair<std::string, std::string>> declared; // (kind, name)

    const FiniteGroup& group(const std::string& name) const;
    const GroupMatchedPair& pair(const std::string& name) const;

    // the unique block of a kind, or the named one
    std::string resolve(const std::string& kind, const std::string& target) const;
};

InputDocument parse_input(const std::string& text);
InputDocument parse_input_file(const std::string& path);

} // namespace bicross
