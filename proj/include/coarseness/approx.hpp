#pragma once

#include <chrono>
#include <optional>

#include "coarseness/discrepancy.hpp"
#include "coarseness/partitions.hpp"
#include "coarseness/rational.hpp"

namespace coarseness {

// D2-derived sandwich: lower <= C(S) <= upper, with a constructed partition
// whose disc is at least lower.
struct CoarsenessBounds {
    int d2 = 0;
    Rational lower;            // max{D2/8, D2/4 - |r-b|}
    int upper = 0;             // 16 * D2
    Island wedge_island;       // the D2-maximizing island
    ConvexPartition witness;   // constructed partition achieving >= lower
    int witness_disc = 0;
};

CoarsenessBounds approximate_coarseness(
    const ColoredPointSet& ps,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace coarseness
