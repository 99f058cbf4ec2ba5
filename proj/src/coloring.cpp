#include "coarseness/coloring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace coarseness {

namespace {

void require_general_position(const std::vector<Point>& points) {
    if (!coords_in_range(points))
        throw std::invalid_argument("coordinates out of range");
    if (!in_general_position(points))
        throw std::invalid_argument("points not in general position");
}

int evaluate(const std::vector<Point>& points, const std::vector<Color>& colors,
             const AngularOrders& orders, const ColoringSearchConfig& config) {
    if (config.deadline && std::chrono::steady_clock::now() > *config.deadline)
        throw BudgetExceeded(0);
    ColoredPointSet ps{points, colors};
    return config.objective == Objective::D1
               ? max_disc_halfplane(ps, orders).value
               : max_disc_wedge(ps, orders, config.deadline).value;
}

}  // namespace

ColoredPointSet random_coloring(const std::vector<Point>& points, std::uint64_t seed) {
    require_general_position(points);
    std::mt19937_64 rng(seed);
    std::vector<Color> colors(points.size());
    for (Color& c : colors) c = rng() & 1 ? Color::Red : Color::Blue;
    return ColoredPointSet{points, std::move(colors)};
}

ColoredPointSet balanced_coloring(const std::vector<Point>& points, std::uint64_t seed) {
    require_general_position(points);
    std::mt19937_64 rng(seed);
    const std::size_t n = points.size();
    std::vector<Color> colors(n, Color::Blue);
    std::size_t reds = n / 2;
    if (n % 2 == 1 && (rng() & 1)) ++reds;
    std::fill(colors.begin(), colors.begin() + reds, Color::Red);
    std::shuffle(colors.begin(), colors.end(), rng);
    return ColoredPointSet{points, std::move(colors)};
}

ColoringSearchResult minimize_coarseness_coloring(const std::vector<Point>& points,
                                                  const ColoringSearchConfig& config) {
    require_general_position(points);
    if (config.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (config.max_flips < 0) throw std::invalid_argument("max_flips must be >= 0");
    const int n = static_cast<int>(points.size());
    AngularOrders orders(points);

    ColoringSearchResult result;
    bool have_best = false;
    for (int restart = 0; restart < config.restarts; ++restart) {
        ColoredPointSet ps = balanced_coloring(points, config.seed + restart);
        int cur = evaluate(points, ps.colors, orders, config);
        std::uint64_t flips = 0;
        int i = 0;
        while (i < n && flips < static_cast<std::uint64_t>(config.max_flips)) {
            ps.colors[i] = ps.colors[i] == Color::Red ? Color::Blue : Color::Red;
            int obj = evaluate(points, ps.colors, orders, config);
            if (obj < cur) {
                cur = obj;
                ++flips;
                i = 0;  // first-improvement: rescan from the start
            } else {
                ps.colors[i] = ps.colors[i] == Color::Red ? Color::Blue : Color::Red;
                ++i;
            }
        }
        result.flips += flips;
        if (!have_best || cur < result.objective_value) {
            have_best = true;
            result.coloring = std::move(ps);
            result.objective_value = cur;
            result.best_restart = restart;
        }
    }
    result.certified_upper =
        16 * (config.objective == Objective::D2
                  ? result.objective_value
                  : max_disc_wedge(result.coloring, orders, config.deadline).value);
    return result;
}

}  // namespace coarseness
