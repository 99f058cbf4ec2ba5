#include <set>

#include "coarseness/coloring.hpp"
#include "coarseness/gen.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coarseness;

namespace {

ColoredPointSet random_instance(int n, std::uint64_t seed) {
    std::vector<Point> pts = generate_points(Shape::RandomDisc, n, seed, 64);
    return random_coloring(pts, seed ^ 0x5555ULL);
}

std::vector<oracle::Mask> blocks_to_masks(const ConvexPartition& pi) {
    std::vector<oracle::Mask> out;
    for (const Island& b : pi.blocks) {
        oracle::Mask m = 0;
        for (int i : b.members) m |= oracle::Mask{1} << i;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("validate_partition on SQ4") {
    ColoredPointSet ps = oracle::sq4();
    CHECK(validate_partition(ps, {{0}, {1}, {2}, {3}}).ok());
    CHECK(validate_partition(ps, {{0, 3}, {1}, {2}}).ok());

    ValidationResult diagonals = validate_partition(ps, {{0, 3}, {1, 2}});
    REQUIRE_FALSE(diagonals.ok());
    CHECK(diagonals.violation->kind == PartitionViolation::Kind::HullsIntersect);

    ValidationResult missing = validate_partition(ps, {{0}, {1}, {2}});
    REQUIRE_FALSE(missing.ok());
    CHECK(missing.violation->kind == PartitionViolation::Kind::NotAPartition);

    ValidationResult repeated = validate_partition(ps, {{0, 1}, {1, 2, 3}});
    REQUIRE_FALSE(repeated.ok());
    CHECK(repeated.violation->kind == PartitionViolation::Kind::NotAPartition);
}

TEST_CASE("non-island block is rejected") {
    // Triangle with its interior point left out: {0,1,2} is not an island.
    ColoredPointSet ps =
        ColoredPointSet::create({{0, 0}, {4, 0}, {0, 4}, {1, 1}},
                                {Color::Red, Color::Blue, Color::Red, Color::Blue});
    ValidationResult res = validate_partition(ps, {{0, 1, 2}, {3}});
    REQUIRE_FALSE(res.ok());
    CHECK(res.violation->kind == PartitionViolation::Kind::NotAnIsland);
}

TEST_CASE("partition_disc") {
    ColoredPointSet ps = oracle::sq4();
    CHECK(partition_disc(ps, validate_partition(ps, {{0, 1, 2, 3}}).partition.value()) == 0);
    CHECK(partition_disc(ps, validate_partition(ps, {{0}, {1}, {2}, {3}}).partition.value()) == 1);
    ColoredPointSet tri = oracle::red_triangle();
    CHECK(partition_disc(tri, validate_partition(tri, {{0, 1, 2}}).partition.value()) == 3);
}

TEST_CASE("enumerate_convex_partitions counts") {
    CHECK(oracle::convex_partitions(oracle::red_triangle()).size() == 5);

    std::vector<std::vector<oracle::Mask>> seen;
    enumerate_convex_partitions(oracle::red_triangle(), [&](const ConvexPartition& pi) {
        seen.push_back(blocks_to_masks(pi));
        return true;
    });
    CHECK(seen.size() == 5);

    int sq4_count = 0;
    enumerate_convex_partitions(oracle::sq4(), [&](const ConvexPartition&) {
        ++sq4_count;
        return true;
    });
    CHECK(sq4_count == 14);  // Bell(4)=15 minus the two-diagonals partition

    ColoredPointSet single = ColoredPointSet::create({{1, 2}}, {Color::Red});
    int n1 = 0;
    enumerate_convex_partitions(single, [&](const ConvexPartition&) {
        ++n1;
        return true;
    });
    CHECK(n1 == 1);
}

TEST_CASE("enumeration matches the filtered set-partition oracle") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ColoredPointSet ps = random_instance(7, seed * 13);
        std::vector<std::vector<oracle::Mask>> expected = oracle::convex_partitions(ps);
        std::vector<std::vector<oracle::Mask>> got;
        enumerate_convex_partitions(ps, [&](const ConvexPartition& pi) {
            CHECK(validate_partition(ps, [&] {
                      std::vector<std::vector<int>> lists;
                      for (const Island& b : pi.blocks) lists.push_back(b.members);
                      return lists;
                  }()).ok());
            got.push_back(blocks_to_masks(pi));
            return true;
        });
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("enumeration refuses oversized instances") {
    ColoredPointSet ps = random_instance(11, 3);
    CHECK_THROWS_AS(enumerate_convex_partitions(ps, [](const ConvexPartition&) { return true; }),
                    BudgetExceeded);
}

TEST_CASE("exact_coarseness fixed instances") {
    CoarsenessResult tri = exact_coarseness(oracle::red_triangle());
    CHECK(tri.value == 3);
    CHECK(tri.witness.blocks.size() == 1);

    CHECK(exact_coarseness(oracle::sq4()).value == 1);

    ColoredPointSet two = ColoredPointSet::create({{0, 0}, {3, 1}}, {Color::Red, Color::Blue});
    CoarsenessResult res2 = exact_coarseness(two);
    CHECK(res2.value == 1);
    CHECK(res2.witness.blocks.size() == 2);
}

TEST_CASE("exact_coarseness matches brute force") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        ColoredPointSet ps = random_instance(7, seed * 29);
        CoarsenessResult res = exact_coarseness(ps);
        CHECK(res.value == oracle::coarseness_brute(ps));
        CHECK(partition_disc(ps, res.witness) == res.value);
    }
}

TEST_CASE("partition_from_1sep examples and guarantee") {
    ColoredPointSet ps = oracle::sq4();
    MaxDiscResult d1 = max_disc_halfplane(ps);
    ConstructedPartition built = partition_from_1sep(ps, d1.witness);
    CHECK(Rational(partition_disc(ps, built.partition)) >= built.guaranteed_bound);

    ColoredPointSet mono = ColoredPointSet::create(
        {{0, 0}, {5, 1}, {2, 7}, {-4, 3}, {-3, -5}, {6, -2}},
        std::vector<Color>(6, Color::Red));
    Island whole{{0, 1, 2, 3, 4, 5}, {halfplane_everything()}};
    ConstructedPartition mono_built = partition_from_1sep(mono, whole);
    CHECK(mono_built.partition.blocks.size() == 1);
    CHECK(mono_built.guaranteed_bound == Rational(3));  // max{6/2, 6 - 6}
    CHECK(partition_disc(mono, mono_built.partition) == 6);
}

TEST_CASE("lemma bound formulas") {
    // 1-separable: max{t/2, t - |r-b|}; 2-separable: max{t/8, t/4 - |r-b|}.
    CHECK(rational_max(Rational(10, 2), Rational(10 - 3)) == Rational(7));
    CHECK(rational_max(Rational(16, 8), Rational(16 - 4 * 1, 4)) == Rational(3));
}

TEST_CASE("lemma soundness over every island at n<=7") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        ColoredPointSet ps = random_instance(7, seed * 41);
        for (const Island& isl : enumerate_islands(ps, 2)) {
            if (isl.certificate.empty()) continue;
            ConstructedPartition built = isl.certificate.size() == 1
                                             ? partition_from_1sep(ps, isl)
                                             : partition_from_2sep(ps, isl);
            std::vector<std::vector<int>> lists;
            for (const Island& b : built.partition.blocks) lists.push_back(b.members);
            CHECK(validate_partition(ps, lists).ok());
            CHECK(Rational(partition_disc(ps, built.partition)) >= built.guaranteed_bound);
        }
    }
}

TEST_CASE("partition_from_2sep traces the SQ4 strip case") {
    ColoredPointSet ps = oracle::sq4();
    Island strip = island_from_halfplanes(ps, {{2, -2, 1, true}, {-2, 2, 1, true}});
    REQUIRE(strip.members == std::vector<int>{0, 3});
    ConstructedPartition built = partition_from_2sep(ps, strip);
    CHECK(built.guaranteed_bound == Rational(1, 2));  // max{2/8, 2/4 - 0}
    CHECK(Rational(partition_disc(ps, built.partition)) >= built.guaranteed_bound);
}

TEST_CASE("find_5sep_block") {
    ColoredPointSet ps = oracle::sq4();
    auto whole = find_5sep_block(ps, validate_partition(ps, {{0, 1, 2, 3}}).partition.value());
    REQUIRE(whole.has_value());
    CHECK(whole->second == 1);

    auto strip = find_5sep_block(ps, validate_partition(ps, {{0, 3}, {1}, {2}}).partition.value());
    REQUIRE(strip.has_value());
    CHECK(strip->second <= 2);
}

TEST_CASE("every convex partition has a 5-separable block") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        ColoredPointSet ps = random_instance(7, seed * 57);
        enumerate_convex_partitions(ps, [&](const ConvexPartition& pi) {
            CHECK(find_5sep_block(ps, pi).has_value());
            return true;
        });
    }
}
