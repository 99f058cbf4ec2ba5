#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace coarseness {

// Coordinates are bounded so that every 3-point orientation determinant and
// every halfplane evaluation fits comfortably in 64-bit integers.
using Coord = std::int64_t;
inline constexpr Coord kCoordLimit = 1 << 20;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Coord cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Sign of the determinant (b-a) x (c-a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point& a, const Point& b, const Point& c);

// Counterclockwise strictly convex vertex list. Degenerate hulls are first-class:
// 0 vertices (empty), 1 (point), 2 (segment).
struct ConvexPolygon {
    std::vector<Point> vertices;

    bool empty() const { return vertices.empty(); }
};

ConvexPolygon convex_hull(std::vector<Point> points);

// Closed-hull membership, exact.
bool hull_contains(const ConvexPolygon& poly, const Point& q);

// True iff the two closed hulls share no point. Handles all degenerate pairs.
bool hulls_disjoint(const ConvexPolygon& p, const ConvexPolygon& q);

// No two points equal, no three collinear.
bool in_general_position(std::span<const Point> points);

bool coords_in_range(std::span<const Point> points);

}  // namespace coarseness
