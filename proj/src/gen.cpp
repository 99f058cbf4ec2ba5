#include "coarseness/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace coarseness {

namespace {

constexpr int kAttempts = 64;

std::vector<Point> grid_attempt(int n, std::mt19937_64& rng, Coord span) {
    const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const Coord spacing = 2 * span / side;
    if (spacing < 4) throw std::invalid_argument("span too small for grid of this size");
    std::uniform_int_distribution<Coord> jitter(-spacing / 3, spacing / 3);
    std::vector<Point> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        const Coord bx = -span + (k % side) * spacing + spacing / 2;
        const Coord by = -span + (k / side) * spacing + spacing / 2;
        pts.push_back(Point{bx + jitter(rng), by + jitter(rng)});
    }
    return pts;
}

std::vector<Point> disc_attempt(int n, std::mt19937_64& rng, Coord span) {
    std::uniform_int_distribution<Coord> coord(-span, span);
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        Point p{coord(rng), coord(rng)};
        if (p.x * p.x + p.y * p.y <= span * span) pts.push_back(p);
    }
    return pts;
}

std::vector<Point> gon_attempt(int n, std::mt19937_64& rng, Coord span) {
    std::uniform_real_distribution<double> off(0.2, 0.8);
    const double radius = 0.9 * static_cast<double>(span);
    std::vector<Point> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * (k + off(rng)) / n;
        pts.push_back(Point{static_cast<Coord>(std::llround(radius * std::cos(theta))),
                            static_cast<Coord>(std::llround(radius * std::sin(theta)))});
    }
    return pts;
}

bool acceptable(Shape shape, const std::vector<Point>& pts) {
    if (!coords_in_range(pts)) return false;
    if (shape == Shape::ConvexGon) {
        // n strict hull vertices <=> strictly convex position <=> general position.
        return convex_hull(pts).vertices.size() == pts.size();
    }
    return in_general_position(pts);
}

}  // namespace

std::vector<Point> generate_points(Shape shape, int n, std::uint64_t seed, Coord span) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (span < 8 || span > kCoordLimit) throw std::invalid_argument("bad span");
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
        std::vector<Point> pts;
        switch (shape) {
            case Shape::Grid: pts = grid_attempt(n, rng, span); break;
            case Shape::RandomDisc: pts = disc_attempt(n, rng, span); break;
            case Shape::ConvexGon: pts = gon_attempt(n, rng, span); break;
        }
        if (acceptable(shape, pts)) return pts;
    }
    throw std::runtime_error("general position not reached within retry budget");
}

}  // namespace coarseness
