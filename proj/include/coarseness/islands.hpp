#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarseness/geom.hpp"

namespace coarseness {

// Closed {a*x + b*y + c >= 0} or open {> 0}. (a,b) != (0,0), gcd-reduced.
struct Halfplane {
    Coord a = 0;
    Coord b = 0;
    Coord c = 0;
    bool closed = true;

    bool contains(const Point& p) const {
        Coord s = a * p.x + b * p.y + c;
        return closed ? s >= 0 : s > 0;
    }

    // The complementary side: complement of {>=0} is {<0} = {-a,-b,-c > 0}.
    Halfplane complement() const { return Halfplane{-a, -b, -c, !closed}; }

    void reduce();

    auto key() const { return std::tuple{a, b, c, closed}; }
    friend bool operator==(const Halfplane&, const Halfplane&) = default;
    friend bool operator<(const Halfplane& lhs, const Halfplane& rhs) {
        return lhs.key() < rhs.key();
    }
};

// Halfplane bounded by the line through p and q. left=true takes the side to the
// left of the directed line p->q.
Halfplane halfplane_through(const Point& p, const Point& q, bool left, bool closed);

// Halfplane bounded by a line through p with direction dir (dir != 0); the side to
// the left of dir. p itself is on the boundary: membership decided by `closed`.
Halfplane halfplane_at(const Point& p, Coord dir_x, Coord dir_y, bool left, bool closed);

// A halfplane containing every point with |x|,|y| <= kCoordLimit.
Halfplane halfplane_everything();

enum class Color : std::int8_t { Blue = -1, Red = 1 };

inline int color_sign(Color c) { return static_cast<int>(c); }

struct ColoredPointSet {
    std::vector<Point> points;
    std::vector<Color> colors;

    int size() const { return static_cast<int>(points.size()); }
    int red_count() const;
    int blue_count() const;
    // |r - b|
    int imbalance() const;

    // Validates general position, coordinate bounds, matching lengths.
    static ColoredPointSet create(std::vector<Point> points, std::vector<Color> colors);
};

// Point-index subset of a ColoredPointSet plus a witness list of halfplanes whose
// intersection with S equals the members. Certificate may be empty for islands
// whose convex set is simply conv(members) (e.g. partition blocks).
struct Island {
    std::vector<int> members;  // sorted
    std::vector<Halfplane> certificate;
};

struct BudgetExceeded : std::runtime_error {
    std::uint64_t estimated_checks;
    explicit BudgetExceeded(std::uint64_t est)
        : std::runtime_error("enumeration budget exceeded (estimated " +
                             std::to_string(est) + " membership checks)"),
          estimated_checks(est) {}
};

// Elementary-membership-check budget for the enumeration operations.
struct Budget {
    std::uint64_t max_checks = 100'000'000;
};

// I = conv(I) cap S, with members given as a sorted index list.
bool is_island(const ColoredPointSet& ps, std::span<const int> members);

// A finite family of halfplanes such that every subset of S cut off by some
// halfplane is cut off by one in the list. Pair lines (both sides, open/closed)
// plus, per point, lines through it in every combinatorially distinct direction,
// plus the all-containing and all-excluding halfplanes. Deduplicated by induced
// subset, first witness kept, deterministic order.
std::vector<Halfplane> canonical_halfplanes(const ColoredPointSet& ps);

Island island_from_halfplanes(const ColoredPointSet& ps, const std::vector<Halfplane>& hs);

// All distinct member-sets of I_k with some witness certificate, sorted by
// member-set. Includes the empty island and S.
std::vector<Island> enumerate_islands(const ColoredPointSet& ps, int k,
                                      const Budget& budget = {});

// Minimum t <= k_max such that t halfplanes (from the canonical family restricted
// to those containing all members) isolate the members; nullopt if none found.
// Throws std::invalid_argument if members is not an island.
std::optional<int> separability_number(const ColoredPointSet& ps, std::span<const int> members,
                                       int k_max);

// Same search, also returning the witness certificate.
std::optional<std::pair<int, std::vector<Halfplane>>> find_separator(
    const ColoredPointSet& ps, std::span<const int> members, int k_max);

}  // namespace coarseness
