#pragma once

#include "qgt/qgt.hpp"

namespace example {

/// The 14-item, 3-node, t = 1 plan from the worked example (0-based items).
inline qgt::TestPlan plan() {
    qgt::BipartiteGraph g(14, {{1, 3, 4, 8, 9, 12, 13}, {2, 3, 6, 7, 9, 11, 12}, {0, 3, 5, 7, 9, 10, 12}});
    return qgt::TestPlan(std::move(g), 1);
}

/// Items 4, 8 and 11 in 1-based numbering.
inline qgt::SupportVector support() { return qgt::SupportVector(14, {3, 7, 10}); }

inline const std::vector<std::int32_t> kResults = {1, 0, 1, 0, 2, 0, 2, 1, 3, 1, 3, 2};

/// The 12 x 14 measurement matrix printed in the example.
inline const int kMatrix[12][14] = {
    {0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1},
    {0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
    {0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
    {1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0},
};

}  // namespace example
