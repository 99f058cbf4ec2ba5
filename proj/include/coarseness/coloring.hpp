#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "coarseness/discrepancy.hpp"

namespace coarseness {

enum class Objective { D1, D2 };

struct ColoringSearchConfig {
    std::uint64_t seed = 0;
    int restarts = 1;       // >= 1
    int max_flips = 1000;   // accepted flips per restart
    Objective objective = Objective::D2;
    // Aborts the search (BudgetExceeded) once passed; checked between evaluations.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ColoringSearchResult {
    ColoredPointSet coloring;
    int objective_value = 0;  // D1 or D2 of the returned coloring, per config
    int certified_upper = 0;  // 16 * D2 of the returned coloring
    int best_restart = 0;
    std::uint64_t flips = 0;  // accepted flips across all restarts
};

ColoredPointSet random_coloring(const std::vector<Point>& points, std::uint64_t seed);

// Uniform over colorings with |r - b| <= 1.
ColoredPointSet balanced_coloring(const std::vector<Point>& points, std::uint64_t seed);

// First-improvement local search over single-color flips, deterministic point
// order, restarted from balanced colorings seeded seed, seed+1, ...; best
// restart by (objective, restart index).
ColoringSearchResult minimize_coarseness_coloring(const std::vector<Point>& points,
                                                  const ColoringSearchConfig& config);

}  // namespace coarseness
