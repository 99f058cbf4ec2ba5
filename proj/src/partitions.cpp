#include "coarseness/partitions.hpp"

#include <algorithm>

namespace coarseness {

namespace {

std::vector<Point> gather(const ColoredPointSet& ps, const std::vector<int>& members) {
    std::vector<Point> pts;
    pts.reserve(members.size());
    for (int i : members) pts.push_back(ps.points[i]);
    return pts;
}

void normalize_blocks(std::vector<Island>& blocks) {
    for (Island& b : blocks) std::sort(b.members.begin(), b.members.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const Island& a, const Island& b) { return a.members < b.members; });
}

std::vector<std::vector<int>> member_lists(const ConvexPartition& pi) {
    std::vector<std::vector<int>> out;
    out.reserve(pi.blocks.size());
    for (const Island& b : pi.blocks) out.push_back(b.members);
    return out;
}

// Tie-break for witness partitions: higher disc, then fewer blocks, then
// lexicographic on the sorted block member-sets.
bool partition_improves(const ColoredPointSet& ps, const std::optional<ConvexPartition>& best,
                        int best_disc, const ConvexPartition& cand, int cand_disc) {
    if (!best) return true;
    if (cand_disc != best_disc) return cand_disc > best_disc;
    if (cand.blocks.size() != best->blocks.size())
        return cand.blocks.size() < best->blocks.size();
    (void)ps;
    return member_lists(cand) < member_lists(*best);
}

}  // namespace

ValidationResult validate_partition(const ColoredPointSet& ps,
                                    const std::vector<std::vector<int>>& blocks) {
    const int n = ps.size();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            return {std::nullopt,
                    PartitionViolation{PartitionViolation::Kind::NotAPartition,
                                       static_cast<int>(b), -1, "empty block"}};
        }
        for (int i : blocks[b]) {
            if (i < 0 || i >= n || owner[i] != -1) {
                return {std::nullopt,
                        PartitionViolation{PartitionViolation::Kind::NotAPartition,
                                           static_cast<int>(b), i < 0 || i >= n ? -1 : owner[i],
                                           "index " + std::to_string(i) +
                                               " out of range or repeated"}};
            }
            owner[i] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (owner[i] == -1) {
            return {std::nullopt,
                    PartitionViolation{PartitionViolation::Kind::NotAPartition, -1, -1,
                                       "index " + std::to_string(i) + " unassigned"}};
        }
    }
    std::vector<Island> islands;
    std::vector<ConvexPolygon> hulls;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> mem = blocks[b];
        std::sort(mem.begin(), mem.end());
        if (!is_island(ps, mem)) {
            return {std::nullopt,
                    PartitionViolation{PartitionViolation::Kind::NotAnIsland,
                                       static_cast<int>(b), -1,
                                       "block is not an island of S"}};
        }
        hulls.push_back(convex_hull(gather(ps, mem)));
        islands.push_back(Island{std::move(mem), {}});
    }
    for (std::size_t a = 0; a < hulls.size(); ++a) {
        for (std::size_t b = a + 1; b < hulls.size(); ++b) {
            if (!hulls_disjoint(hulls[a], hulls[b])) {
                return {std::nullopt,
                        PartitionViolation{PartitionViolation::Kind::HullsIntersect,
                                           static_cast<int>(a), static_cast<int>(b),
                                           "convex hulls intersect"}};
            }
        }
    }
    ConvexPartition pi{std::move(islands)};
    normalize_blocks(pi.blocks);
    return {std::move(pi), std::nullopt};
}

int partition_disc(const ColoredPointSet& ps, const ConvexPartition& pi) {
    int best = -1;
    for (const Island& b : pi.blocks) {
        int d = disc(ps, b.members);
        if (best < 0 || d < best) best = d;
    }
    return best < 0 ? 0 : best;
}

namespace {

struct PartitionEnumerator {
    const ColoredPointSet& ps;
    const std::function<bool(const ConvexPartition&)>& sink;
    std::vector<std::vector<int>> blocks;
    std::vector<ConvexPolygon> hulls;
    std::vector<int> owner;
    bool stopped = false;

    PartitionEnumerator(const ColoredPointSet& ps_,
                        const std::function<bool(const ConvexPartition&)>& sink_)
        : ps(ps_), sink(sink_), owner(ps_.size(), -1) {}

    bool hull_conflicts(std::size_t grown) const {
        // A grown hull may not swallow points of other blocks nor touch their hulls.
        for (int j = 0; j < ps.size(); ++j) {
            if (owner[j] != -1 && owner[j] != static_cast<int>(grown) &&
                hull_contains(hulls[grown], ps.points[j]))
                return true;
        }
        for (std::size_t b = 0; b < hulls.size(); ++b) {
            if (b != grown && !hulls_disjoint(hulls[grown], hulls[b])) return true;
        }
        return false;
    }

    void emit() {
        std::vector<Island> isl;
        isl.reserve(blocks.size());
        for (const auto& b : blocks) isl.push_back(Island{b, {}});
        ConvexPartition pi{std::move(isl)};
        normalize_blocks(pi.blocks);
        if (!sink(pi)) stopped = true;
    }

    void recurse(int i) {
        if (stopped) return;
        const int n = ps.size();
        if (i == n) {
            emit();
            return;
        }
        // If some existing hull already contains point i, that block is the only
        // legal home (any other choice leaves a foreign point inside the hull).
        int forced = -1;
        for (std::size_t b = 0; b < hulls.size(); ++b) {
            if (hull_contains(hulls[b], ps.points[i])) {
                if (forced != -1) return;  // inside two disjoint hulls: impossible anyway
                forced = static_cast<int>(b);
            }
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (forced != -1 && forced != static_cast<int>(b)) continue;
            blocks[b].push_back(i);
            owner[i] = static_cast<int>(b);
            ConvexPolygon saved = hulls[b];
            std::vector<Point> pts = gather(ps, blocks[b]);
            hulls[b] = convex_hull(std::move(pts));
            if (!hull_conflicts(b)) recurse(i + 1);
            hulls[b] = std::move(saved);
            owner[i] = -1;
            blocks[b].pop_back();
            if (stopped) return;
        }
        if (forced == -1) {
            blocks.push_back({i});
            owner[i] = static_cast<int>(blocks.size()) - 1;
            hulls.push_back(ConvexPolygon{{ps.points[i]}});
            if (!hull_conflicts(hulls.size() - 1)) recurse(i + 1);
            hulls.pop_back();
            owner[i] = -1;
            blocks.pop_back();
        }
    }
};

}  // namespace

void enumerate_convex_partitions(const ColoredPointSet& ps,
                                 const std::function<bool(const ConvexPartition&)>& sink,
                                 const EnumLimits& limits) {
    const int n = ps.size();
    const int limit = std::min(limits.soft_limit, limits.hard_limit);
    if (n > limit) {
        throw BudgetExceeded(std::uint64_t{1} << std::min(n, 60));
    }
    if (n == 0) return;
    PartitionEnumerator en(ps, sink);
    en.recurse(0);
}

CoarsenessResult exact_coarseness(const ColoredPointSet& ps, const EnumLimits& limits) {
    CoarsenessResult result;
    std::optional<ConvexPartition> best;
    int best_disc = -1;
    enumerate_convex_partitions(
        ps,
        [&](const ConvexPartition& pi) {
            ++result.partitions_examined;
            int d = partition_disc(ps, pi);
            if (partition_improves(ps, best, best_disc, pi, d)) {
                best = pi;
                best_disc = d;
            }
            return true;
        },
        limits);
    result.value = best_disc < 0 ? 0 : best_disc;
    if (best) result.witness = std::move(*best);
    return result;
}

namespace {

Island whole_set_island(const ColoredPointSet& ps) {
    Island s;
    s.members.resize(ps.size());
    for (int i = 0; i < ps.size(); ++i) s.members[i] = i;
    s.certificate = {halfplane_everything()};
    return s;
}

void check_certificate(const ColoredPointSet& ps, const Island& island) {
    if (island.certificate.empty())
        throw std::invalid_argument("island must carry a halfplane certificate");
    Island recomputed = island_from_halfplanes(ps, island.certificate);
    std::vector<int> mem = island.members;
    std::sort(mem.begin(), mem.end());
    if (recomputed.members != mem)
        throw std::invalid_argument("certificate does not reproduce the island members");
}

ConvexPartition pick_best(const ColoredPointSet& ps,
                          const std::vector<ConvexPartition>& candidates) {
    std::optional<ConvexPartition> best;
    int best_disc = -1;
    for (const ConvexPartition& cand : candidates) {
        int d = partition_disc(ps, cand);
        if (partition_improves(ps, best, best_disc, cand, d)) {
            best = cand;
            best_disc = d;
        }
    }
    return *best;
}

}  // namespace

ConstructedPartition partition_from_1sep(const ColoredPointSet& ps, const Island& island) {
    check_certificate(ps, island);
    if (island.certificate.size() != 1)
        throw std::invalid_argument("partition_from_1sep needs a 1-halfplane certificate");
    const int t = disc(ps, island.members);
    const Rational bound =
        rational_max(Rational(t, 2), Rational(t - ps.imbalance()));

    std::vector<ConvexPartition> candidates;
    candidates.push_back(ConvexPartition{{whole_set_island(ps)}});
    if (!island.members.empty() &&
        static_cast<int>(island.members.size()) < ps.size()) {
        Island inside{island.members, island.certificate};
        std::sort(inside.members.begin(), inside.members.end());
        Island outside = island_from_halfplanes(ps, {island.certificate[0].complement()});
        candidates.push_back(ConvexPartition{{std::move(inside), std::move(outside)}});
    }
    ConvexPartition best = pick_best(ps, candidates);
    normalize_blocks(best.blocks);
    return ConstructedPartition{std::move(best), bound};
}

ConstructedPartition partition_from_2sep(const ColoredPointSet& ps, const Island& island) {
    check_certificate(ps, island);
    if (island.certificate.size() > 2)
        throw std::invalid_argument("partition_from_2sep needs at most 2 halfplanes");
    const int t = disc(ps, island.members);
    const Rational bound =
        rational_max(Rational(t, 8), Rational(t - 4 * ps.imbalance(), 4));

    if (island.certificate.size() == 1) {
        ConstructedPartition inner = partition_from_1sep(ps, island);
        return ConstructedPartition{std::move(inner.partition), bound};
    }

    const Halfplane h1 = island.certificate[0];
    const Halfplane h2 = island.certificate[1];
    Island i_prime = island_from_halfplanes(ps, {h1.complement(), h2});
    Island i_dblprime = island_from_halfplanes(ps, {h1, h2.complement()});
    Island i_triprime = island_from_halfplanes(ps, {h1.complement(), h2.complement()});

    std::vector<ConvexPartition> candidates;
    candidates.push_back(ConvexPartition{{whole_set_island(ps)}});

    auto one_sep = [&](const Halfplane& h) {
        Island merged = island_from_halfplanes(ps, {h});
        candidates.push_back(partition_from_1sep(ps, merged).partition);
    };

    if (2 * disc(ps, i_prime.members) <= t) {
        one_sep(h2);  // I ∪ I' = S ∩ H2
    } else if (2 * disc(ps, i_dblprime.members) <= t) {
        one_sep(h1);  // I ∪ I'' = S ∩ H1
    } else if (4 * disc(ps, i_triprime.members) >= t) {
        // The four quadrants of the two certificate lines, empties dropped.
        ConvexPartition quads;
        Island core{island.members, {h1, h2}};
        std::sort(core.members.begin(), core.members.end());
        for (Island* blk : {&core, &i_prime, &i_dblprime, &i_triprime}) {
            if (!blk->members.empty()) quads.blocks.push_back(std::move(*blk));
        }
        candidates.push_back(std::move(quads));
    } else {
        one_sep(h1.complement());  // I' ∪ I''' = S ∖ H1
    }

    ConvexPartition best = pick_best(ps, candidates);
    normalize_blocks(best.blocks);
    return ConstructedPartition{std::move(best), bound};
}

std::optional<std::pair<int, int>> find_5sep_block(const ColoredPointSet& ps,
                                                   const ConvexPartition& pi) {
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        auto t = separability_number(ps, pi.blocks[b].members, 5);
        if (t) return {{static_cast<int>(b), *t}};
    }
    return std::nullopt;
}

}  // namespace coarseness
