#pragma once

#include <cstdint>
#include <vector>

#include "coarseness/geom.hpp"

namespace coarseness {

enum class Shape { Grid, RandomDisc, ConvexGon };

// n points in general position within [-span, span]^2, deterministic in seed.
// Throws std::runtime_error if the retry budget is exhausted.
std::vector<Point> generate_points(Shape shape, int n, std::uint64_t seed,
                                   Coord span = Coord{1} << 19);

}  // namespace coarseness
