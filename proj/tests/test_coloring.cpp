#include <cmath>

#include "coarseness/coloring.hpp"
#include "coarseness/gen.hpp"
#include "coarseness/partitions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coarseness;

TEST_CASE("random_coloring determinism and counts") {
    std::vector<Point> pts = generate_points(Shape::RandomDisc, 100, 1, 4096);
    ColoredPointSet a = random_coloring(pts, 7);
    ColoredPointSet b = random_coloring(pts, 7);
    CHECK(a.colors == b.colors);
    CHECK(a.red_count() + a.blue_count() == 100);

    int distinct = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        if (random_coloring(pts, seed).colors != a.colors) ++distinct;
    }
    CHECK(distinct >= 9);
}

TEST_CASE("balanced_coloring keeps the color counts within one") {
    std::vector<Point> p4 = generate_points(Shape::RandomDisc, 4, 2, 64);
    ColoredPointSet c4 = balanced_coloring(p4, 11);
    CHECK(c4.red_count() == 2);
    CHECK(c4.blue_count() == 2);

    std::vector<Point> p5 = generate_points(Shape::RandomDisc, 5, 3, 64);
    ColoredPointSet c5 = balanced_coloring(p5, 11);
    CHECK(c5.imbalance() == 1);
    CHECK(balanced_coloring(p5, 11).colors == c5.colors);
}

TEST_CASE("coloring rejects degenerate inputs") {
    CHECK_THROWS_AS((void)random_coloring({{0, 0}, {1, 1}, {2, 2}}, 1), std::invalid_argument);
}

TEST_CASE("minimize reaches the brute-force optimum on the square") {
    std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    ColoringSearchConfig cfg;
    cfg.seed = 1;
    cfg.restarts = 4;
    cfg.objective = Objective::D2;
    ColoringSearchResult res = minimize_coarseness_coloring(pts, cfg);

    int best_any = 1 << 20;
    for (int m = 0; m < 16; ++m) {
        std::vector<Color> colors;
        for (int i = 0; i < 4; ++i)
            colors.push_back(m >> i & 1 ? Color::Red : Color::Blue);
        ColoredPointSet ps = ColoredPointSet::create(pts, colors);
        best_any = std::min(best_any, max_disc_wedge(ps).value);
    }
    CHECK(res.objective_value == best_any);
    CHECK(res.certified_upper == 16 * max_disc_wedge(res.coloring).value);
}

TEST_CASE("minimize on two points achieves D1 = 1") {
    std::vector<Point> pts{{0, 0}, {7, 3}};
    ColoringSearchConfig cfg;
    cfg.objective = Objective::D1;
    ColoringSearchResult res = minimize_coarseness_coloring(pts, cfg);
    CHECK(res.objective_value == 1);
}

TEST_CASE("certified_upper really bounds exact coarseness") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        std::vector<Point> pts = generate_points(Shape::RandomDisc, 8, seed * 3, 64);
        ColoringSearchConfig cfg;
        cfg.seed = seed;
        cfg.restarts = 2;
        ColoringSearchResult res = minimize_coarseness_coloring(pts, cfg);
        CHECK(exact_coarseness(res.coloring).value <= res.certified_upper);
    }
}

TEST_CASE("search never worsens the starting objective and is deterministic") {
    std::vector<Point> pts = generate_points(Shape::Grid, 16, 5, 256);
    ColoringSearchConfig cfg;
    cfg.seed = 9;
    cfg.restarts = 3;
    cfg.objective = Objective::D1;
    ColoringSearchResult a = minimize_coarseness_coloring(pts, cfg);
    ColoringSearchResult b = minimize_coarseness_coloring(pts, cfg);
    CHECK(a.coloring.colors == b.coloring.colors);
    CHECK(a.objective_value == b.objective_value);

    AngularOrders orders(pts);
    for (int r = 0; r < cfg.restarts; ++r) {
        ColoredPointSet start = balanced_coloring(pts, cfg.seed + r);
        CHECK(a.objective_value <= max_disc_halfplane(start, orders).value);
    }
}
