#include "coarseness/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coarseness {

int orientation(const Point& a, const Point& b, const Point& c) {
    Coord d = cross(a, b, c);
    return (d > 0) - (d < 0);
}

ConvexPolygon convex_hull(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return ConvexPolygon{std::move(points)};

    // Andrew monotone chain, strict turns only (collinear vertices dropped).
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return ConvexPolygon{std::move(hull)};
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& q) {
    if (orientation(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

bool hull_contains(const ConvexPolygon& poly, const Point& q) {
    const auto& v = poly.vertices;
    switch (v.size()) {
        case 0: return false;
        case 1: return v[0] == q;
        case 2: return on_segment(v[0], v[1], q);
        default:
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (orientation(v[i], v[(i + 1) % v.size()], q) < 0) return false;
            }
            return true;
    }
}

bool hulls_disjoint(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.empty() || q.empty()) return true;
    for (const Point& v : p.vertices) {
        if (hull_contains(q, v)) return false;
    }
    for (const Point& v : q.vertices) {
        if (hull_contains(p, v)) return false;
    }
    if (p.vertices.size() < 2 || q.vertices.size() < 2) return true;
    const auto& a = p.vertices;
    const auto& b = q.vertices;
    const std::size_t na = a.size() == 2 ? 1 : a.size();
    const std::size_t nb = b.size() == 2 ? 1 : b.size();
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            if (segments_intersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
                return false;
        }
    }
    return true;
}

bool in_general_position(std::span<const Point> points) {
    const std::size_t n = points.size();
    {
        std::vector<Point> sorted(points.begin(), points.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    if (n < 3) return true;
    // Per pivot, two other points give a collinear triple iff their directions
    // from the pivot coincide modulo pi.
    std::vector<std::pair<Coord, Coord>> dirs;
    dirs.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        dirs.clear();
        for (std::size_t j = i + 1; j < n; ++j) {
            Coord dx = points[j].x - points[i].x;
            Coord dy = points[j].y - points[i].y;
            Coord g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
            dx /= g;
            dy /= g;
            if (dx < 0 || (dx == 0 && dy < 0)) {
                dx = -dx;
                dy = -dy;
            }
            dirs.emplace_back(dx, dy);
        }
        std::sort(dirs.begin(), dirs.end());
        if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end()) return false;
    }
    return true;
}

bool coords_in_range(std::span<const Point> points) {
    for (const Point& p : points) {
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit)
            return false;
    }
    return true;
}

}  // namespace coarseness
