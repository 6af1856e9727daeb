// The parameter grid shared by the property tests and the acceptance suite:
// m in 1..4, s and k counts in 0..3, |r| <= 3, deduplicated by canonical
// form and filtered by normal-form feasibility.
#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "qgentle/atilde.hpp"

inline std::vector<qgentle::BranchParams> feasible_grid() {
    using qgentle::BranchParams;
    std::vector<BranchParams> grid;
    std::set<std::tuple<int, long long, long long, long long, long long, long long>> seen;
    for (int m = 1; m <= 4; ++m)
        for (int s1 = 0; s1 <= 3; ++s1)
            for (int k1 = 0; k1 <= 3; ++k1)
                for (int s2 = 0; s2 <= 3; ++s2)
                    for (int k2 = 0; k2 <= 3; ++k2)
                        for (int r = -3; r <= 3; ++r) {
                            if (s1 + s2 + k1 + k2 < 1) continue;
                            BranchParams c = BranchParams(m, s1, k1, s2, k2, r).canonical();
                            auto key = std::make_tuple(c.m, c.s1, c.k1, c.s2, c.k2, c.r);
                            if (!seen.insert(key).second) continue;
                            if (!qgentle::normal_form_feasible(c).ok) continue;
                            grid.push_back(c);
                        }
    return grid;
}
