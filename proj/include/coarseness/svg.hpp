#pragma once

#include <string>
#include <vector>

#include "coarseness/partitions.hpp"

namespace coarseness {

// Static figure: points (red/blue), certificate lines, block hull outlines.
std::string svg_instance(const ColoredPointSet& ps,
                         const std::vector<Halfplane>& lines = {},
                         const ConvexPartition* partition = nullptr);

struct ScalingRow {
    int n = 0;
    std::uint64_t seed = 0;
    std::string kind;  // random | balanced | optimized
    int d1 = -1;       // -1 marks budget-exceeded
    int d2 = -1;
    int certified_upper = -1;
    double elapsed_ms = 0.0;
};

// Log-log d2 vs n with reference slopes 1/4 and 1/2.
std::string svg_scaling_plot(const std::vector<ScalingRow>& rows);

std::string scaling_csv(const std::vector<ScalingRow>& rows);

}  // namespace coarseness
