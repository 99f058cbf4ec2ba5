#include <algorithm>
#include <random>

#include "coarseness/geom.hpp"
#include "doctest.h"

using namespace coarseness;

TEST_CASE("orientation signs") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orientation is antisymmetric under argument swaps") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> d(-1000, 1000);
    for (int it = 0; it < 200; ++it) {
        Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
        CHECK(orientation(a, b, c) == -orientation(b, a, c));
        CHECK(orientation(a, b, c) == -orientation(a, c, b));
        CHECK(orientation(a, b, c) == orientation(b, c, a));
    }
}

TEST_CASE("convex hull basics") {
    CHECK(convex_hull({}).vertices.empty());
    CHECK(convex_hull({{3, 4}}).vertices == std::vector<Point>{{3, 4}});
    ConvexPolygon square = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    REQUIRE(square.vertices.size() == 4);
    for (const Point& p : {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}})
        CHECK(hull_contains(square, p));
    // Collinear midpoint is not a vertex but stays inside.
    ConvexPolygon tri = convex_hull({{0, 0}, {2, 0}, {1, 0}, {0, 2}});
    CHECK(tri.vertices.size() == 3);
    CHECK(hull_contains(tri, {1, 0}));
}

TEST_CASE("convex hull is permutation invariant and contains its input") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Coord> d(-50, 50);
    for (int it = 0; it < 100; ++it) {
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back({d(rng), d(rng)});
        ConvexPolygon h1 = convex_hull(pts);
        for (const Point& p : pts) CHECK(hull_contains(h1, p));
        std::shuffle(pts.begin(), pts.end(), rng);
        CHECK(convex_hull(pts).vertices == h1.vertices);
    }
}

TEST_CASE("hulls_disjoint handles degenerate shapes") {
    ConvexPolygon seg = convex_hull({{0, 0}, {1, 1}});
    CHECK(hulls_disjoint(seg, convex_hull({{1, 0}})));
    CHECK_FALSE(hulls_disjoint(seg, convex_hull({{1, 0}, {0, 1}})));
    ConvexPolygon tri = convex_hull({{0, 0}, {4, 0}, {0, 4}});
    CHECK_FALSE(hulls_disjoint(tri, convex_hull({{1, 1}})));
    CHECK(hulls_disjoint(ConvexPolygon{}, tri));
    CHECK_FALSE(hulls_disjoint(tri, tri));
    // Nested hulls share points even with no edge crossings.
    ConvexPolygon big = convex_hull({{-9, -9}, {9, -9}, {0, 9}});
    CHECK_FALSE(hulls_disjoint(big, convex_hull({{-1, -1}, {1, -1}, {0, 1}})));
}

TEST_CASE("hulls_disjoint is symmetric") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Coord> d(-20, 20);
    for (int it = 0; it < 200; ++it) {
        std::vector<Point> a, b;
        for (int i = 0; i < 4; ++i) a.push_back({d(rng), d(rng)});
        for (int i = 0; i < 4; ++i) b.push_back({d(rng), d(rng)});
        ConvexPolygon ha = convex_hull(a), hb = convex_hull(b);
        CHECK(hulls_disjoint(ha, hb) == hulls_disjoint(hb, ha));
    }
}

TEST_CASE("in_general_position") {
    CHECK(in_general_position(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK_FALSE(in_general_position(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {5, 0}}));
    CHECK_FALSE(in_general_position(std::vector<Point>{{0, 0}, {0, 0}, {1, 2}}));
    CHECK(in_general_position(std::vector<Point>{}));
    CHECK(in_general_position(std::vector<Point>{{5, 5}, {7, 2}}));
}
