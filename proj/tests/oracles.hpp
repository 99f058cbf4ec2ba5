#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's search strategies. A subset A is cut off by some halfplane iff
// conv(A) and conv(S \ A) are disjoint; I_k is the k-fold intersection closure
// of those subsets; partitions are filtered from all set partitions.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "coarseness/partitions.hpp"

namespace oracle {

using namespace coarseness;
using Mask = std::uint32_t;

inline std::vector<Point> pts_of(const ColoredPointSet& ps, Mask m) {
    std::vector<Point> out;
    for (int i = 0; i < ps.size(); ++i) {
        if (m >> i & 1) out.push_back(ps.points[i]);
    }
    return out;
}

inline std::vector<int> members_of(Mask m, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (m >> i & 1) out.push_back(i);
    }
    return out;
}

inline int disc_mask(const ColoredPointSet& ps, Mask m) {
    int s = 0;
    for (int i = 0; i < ps.size(); ++i) {
        if (m >> i & 1) s += color_sign(ps.colors[i]);
    }
    return s < 0 ? -s : s;
}

inline bool island_mask(const ColoredPointSet& ps, Mask m) {
    ConvexPolygon hull = convex_hull(pts_of(ps, m));
    for (int i = 0; i < ps.size(); ++i) {
        if (!(m >> i & 1) && hull_contains(hull, ps.points[i])) return false;
    }
    return true;
}

// All subsets separable from their complement by one halfplane.
inline std::vector<Mask> halfplane_subsets(const ColoredPointSet& ps) {
    const int n = ps.size();
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> out;
    for (Mask m = 0; m <= full; ++m) {
        if (hulls_disjoint(convex_hull(pts_of(ps, m)), convex_hull(pts_of(ps, full & ~m))))
            out.push_back(m);
    }
    return out;
}

// Member-sets of I_k: k-fold intersections of halfplane-cut subsets.
inline std::vector<Mask> k_separable_subsets(const ColoredPointSet& ps, int k) {
    std::vector<Mask> base = halfplane_subsets(ps);
    std::vector<Mask> cur = base;
    for (int round = 1; round < k; ++round) {
        std::vector<Mask> next;
        for (Mask a : cur) {
            for (Mask b : base) next.push_back(a & b);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur = std::move(next);
    }
    return cur;
}

inline int max_disc_over(const ColoredPointSet& ps, const std::vector<Mask>& masks) {
    int best = 0;
    for (Mask m : masks) best = std::max(best, disc_mask(ps, m));
    return best;
}

// Minimum k <= k_max with m in I_k, or -1.
inline int separability_mask(const ColoredPointSet& ps, Mask m, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        std::vector<Mask> fam = k_separable_subsets(ps, k);
        if (std::binary_search(fam.begin(), fam.end(), m)) return k;
    }
    return -1;
}

// Every convex partition, as a sorted list of sorted block masks.
inline std::vector<std::vector<Mask>> convex_partitions(const ColoredPointSet& ps) {
    const int n = ps.size();
    std::vector<std::vector<Mask>> out;
    if (n == 0) return out;
    std::vector<int> rgs(n, 0);
    auto emit = [&]() {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Mask> blocks(k, 0);
        for (int i = 0; i < n; ++i) blocks[rgs[i]] |= Mask{1} << i;
        std::vector<ConvexPolygon> hulls;
        for (Mask b : blocks) {
            if (!island_mask(ps, b)) return;
            hulls.push_back(convex_hull(pts_of(ps, b)));
        }
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if (!hulls_disjoint(hulls[a], hulls[b])) return;
            }
        }
        std::sort(blocks.begin(), blocks.end());
        out.push_back(std::move(blocks));
    };
    // Plain restricted-growth-string recursion over all set partitions.
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int b = 0; b <= used; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline int coarseness_brute(const ColoredPointSet& ps) {
    int best = 0;
    bool any = false;
    for (const auto& blocks : convex_partitions(ps)) {
        int mind = -1;
        for (Mask b : blocks) {
            int d = disc_mask(ps, b);
            if (mind < 0 || d < mind) mind = d;
        }
        if (!any || mind > best) best = mind;
        any = true;
    }
    return best;
}

// Fixed tiny instances used across tests.
inline ColoredPointSet sq4() {
    return ColoredPointSet::create(
        {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
        {Color::Red, Color::Blue, Color::Blue, Color::Red});
}

inline ColoredPointSet red_triangle() {
    return ColoredPointSet::create({{0, 0}, {4, 1}, {1, 5}},
                                   {Color::Red, Color::Red, Color::Red});
}

inline ColoredPointSet alt_hexagon() {
    // Convex position, alternating colors.
    return ColoredPointSet::create(
        {{4, 0}, {2, 3}, {-2, 3}, {-4, 0}, {-2, -3}, {2, -3}},
        {Color::Red, Color::Blue, Color::Red, Color::Blue, Color::Red, Color::Blue});
}

}  // namespace oracle
