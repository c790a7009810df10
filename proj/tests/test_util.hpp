#pragma once

// Small construction helpers shared by the test suites. Tests speak the
// paper's 1-indexed individual names; the helpers translate.

#include <vector>

#include "socrank/ranking.hpp"

namespace testutil {

inline socrank::Coalition coal(std::initializer_list<int> members_1indexed) {
    socrank::Coalition c;
    for (int i : members_1indexed) c = c.with(i - 1);
    return c;
}

/// make_ranking(3, {{{1},{3},{1,2}}, {{2}}, {{1,3},{2,3},{1,2,3},{}}})
inline socrank::PowerRanking make_ranking(
    int n, const std::vector<std::vector<std::vector<int>>>& classes_1indexed) {
    std::vector<std::vector<socrank::Coalition>> classes;
    for (const auto& cls : classes_1indexed) {
        std::vector<socrank::Coalition> c;
        for (const auto& members : cls) {
            socrank::Coalition s;
            for (int i : members) s = s.with(i - 1);
            c.push_back(s);
        }
        classes.push_back(std::move(c));
    }
    return socrank::make_power_ranking(socrank::Universe(n), classes);
}

}  // namespace testutil
