#include "coarseness/islands.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coarseness {

void Halfplane::reduce() {
    Coord g = std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
}

Halfplane halfplane_at(const Point& p, Coord dir_x, Coord dir_y, bool left, bool closed) {
    // Left of direction d at p: cross(d, x - p) > 0, i.e. normal (-dy, dx).
    Coord a = -dir_y;
    Coord b = dir_x;
    if (!left) {
        a = -a;
        b = -b;
    }
    Halfplane h{a, b, -(a * p.x + b * p.y), closed};
    h.reduce();
    return h;
}

Halfplane halfplane_through(const Point& p, const Point& q, bool left, bool closed) {
    return halfplane_at(p, q.x - p.x, q.y - p.y, left, closed);
}

Halfplane halfplane_everything() { return Halfplane{1, 0, kCoordLimit + 1, true}; }

int ColoredPointSet::red_count() const {
    return static_cast<int>(std::count(colors.begin(), colors.end(), Color::Red));
}

int ColoredPointSet::blue_count() const { return size() - red_count(); }

int ColoredPointSet::imbalance() const {
    int d = red_count() - blue_count();
    return d < 0 ? -d : d;
}

ColoredPointSet ColoredPointSet::create(std::vector<Point> points, std::vector<Color> colors) {
    if (points.size() != colors.size())
        throw std::invalid_argument("points and colors have different lengths");
    if (!coords_in_range(points))
        throw std::invalid_argument("coordinates outside |x|,|y| <= 2^20");
    if (!in_general_position(points))
        throw std::invalid_argument("points not in general position");
    return ColoredPointSet{std::move(points), std::move(colors)};
}

bool is_island(const ColoredPointSet& ps, std::span<const int> members) {
    std::vector<Point> pts;
    pts.reserve(members.size());
    std::vector<char> in(ps.points.size(), 0);
    for (int i : members) {
        if (i < 0 || i >= ps.size() || in[i]) return false;
        in[i] = 1;
        pts.push_back(ps.points[i]);
    }
    ConvexPolygon hull = convex_hull(std::move(pts));
    for (int j = 0; j < ps.size(); ++j) {
        if (!in[j] && hull_contains(hull, ps.points[j])) return false;
    }
    return true;
}

namespace {

using Mask = std::vector<std::uint64_t>;

Mask membership_mask(const ColoredPointSet& ps, const Halfplane& h) {
    Mask m((ps.points.size() + 63) / 64, 0);
    for (int i = 0; i < ps.size(); ++i) {
        if (h.contains(ps.points[i])) m[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return m;
}

// Angularly sorted direction multiset {d_j, -d_j} around a pivot, used for the
// gap (single-contact) halfplanes.
std::vector<std::pair<Coord, Coord>> sorted_directions(const ColoredPointSet& ps, int pivot) {
    std::vector<std::pair<Coord, Coord>> dirs;
    for (int j = 0; j < ps.size(); ++j) {
        if (j == pivot) continue;
        Coord dx = ps.points[j].x - ps.points[pivot].x;
        Coord dy = ps.points[j].y - ps.points[pivot].y;
        dirs.emplace_back(dx, dy);
        dirs.emplace_back(-dx, -dy);
    }
    auto half = [](const std::pair<Coord, Coord>& d) {
        return (d.second < 0 || (d.second == 0 && d.first < 0)) ? 1 : 0;
    };
    std::sort(dirs.begin(), dirs.end(), [&](const auto& u, const auto& v) {
        int hu = half(u), hv = half(v);
        if (hu != hv) return hu < hv;
        return u.first * v.second - u.second * v.first > 0;
    });
    return dirs;
}

}  // namespace

std::vector<Halfplane> canonical_halfplanes(const ColoredPointSet& ps) {
    const int n = ps.size();
    std::vector<Halfplane> out;
    std::map<Mask, char> seen;
    auto add = [&](const Halfplane& h) {
        Mask m = membership_mask(ps, h);
        if (seen.emplace(std::move(m), 1).second) out.push_back(h);
    };
    add(halfplane_everything());
    add(halfplane_everything().complement());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (bool left : {true, false}) {
                for (bool closed : {true, false}) {
                    add(halfplane_through(ps.points[i], ps.points[j], left, closed));
                }
            }
        }
    }
    for (int p = 0; p < n; ++p) {
        auto dirs = sorted_directions(ps, p);
        const std::size_t m = dirs.size();
        for (std::size_t g = 0; g < m; ++g) {
            auto [ax, ay] = dirs[g];
            auto [bx, by] = dirs[(g + 1) % m];
            Coord mx = ax + bx, my = ay + by;
            if (mx == 0 && my == 0) {
                mx = -ay;  // gap endpoints antipodal: take the perpendicular
                my = ax;
            }
            for (bool left : {true, false}) {
                for (bool closed : {true, false}) {
                    add(halfplane_at(ps.points[p], mx, my, left, closed));
                }
            }
        }
    }
    return out;
}

Island island_from_halfplanes(const ColoredPointSet& ps, const std::vector<Halfplane>& hs) {
    if (hs.empty()) throw std::invalid_argument("certificate must contain a halfplane");
    Island isl;
    isl.certificate = hs;
    for (int i = 0; i < ps.size(); ++i) {
        bool in = true;
        for (const Halfplane& h : hs) {
            if (!h.contains(ps.points[i])) {
                in = false;
                break;
            }
        }
        if (in) isl.members.push_back(i);
    }
    return isl;
}

namespace {

// Certificate search shared by separability_number and enumerate_islands.
// Works on <=64 points via bitmasks over a precomputed candidate family.
struct SeparatorSearch {
    const ColoredPointSet& ps;
    std::vector<Halfplane> family;
    std::vector<std::uint64_t> family_mask;  // members of S inside each halfplane
    std::uint64_t full;

    explicit SeparatorSearch(const ColoredPointSet& ps_) : ps(ps_) {
        if (ps.size() > 64)
            throw BudgetExceeded(std::uint64_t{1} << 63);
        family = canonical_halfplanes(ps);
        family_mask.reserve(family.size());
        for (const Halfplane& h : family) {
            std::uint64_t m = 0;
            for (int i = 0; i < ps.size(); ++i) {
                if (h.contains(ps.points[i])) m |= std::uint64_t{1} << i;
            }
            family_mask.push_back(m);
        }
        full = ps.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << ps.size()) - 1;
    }

    std::optional<std::pair<int, std::vector<Halfplane>>> run(std::uint64_t members,
                                                              int k_max) const {
        std::uint64_t outside = full & ~members;
        if (outside == 0) {
            for (std::size_t i = 0; i < family.size(); ++i) {
                if ((members & ~family_mask[i]) == 0) return {{1, {family[i]}}};
            }
            return std::nullopt;
        }
        // Candidates: contain all members; keyed by which outside points they exclude.
        std::vector<int> cand;
        std::vector<std::uint64_t> excl;
        std::map<std::uint64_t, char> seen;
        std::uint64_t coverable = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if ((members & ~family_mask[i]) != 0) continue;
            std::uint64_t e = outside & ~family_mask[i];
            if (e == 0) continue;
            if (!seen.emplace(e, 1).second) continue;
            cand.push_back(static_cast<int>(i));
            excl.push_back(e);
            coverable |= e;
        }
        if ((outside & ~coverable) != 0) return std::nullopt;
        std::vector<int> chosen;
        for (int t = 1; t <= k_max; ++t) {
            chosen.clear();
            if (dfs(outside, t, cand, excl, chosen)) {
                std::vector<Halfplane> cert;
                for (int i : chosen) cert.push_back(family[i]);
                return {{t, std::move(cert)}};
            }
        }
        return std::nullopt;
    }

  private:
    bool dfs(std::uint64_t uncovered, int depth_left, const std::vector<int>& cand,
             const std::vector<std::uint64_t>& excl, std::vector<int>& chosen) const {
        if (uncovered == 0) return true;
        if (depth_left == 0) return false;
        std::uint64_t pick = uncovered & (~uncovered + 1);  // lowest uncovered point
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if ((excl[i] & pick) == 0) continue;
            chosen.push_back(cand[i]);
            if (dfs(uncovered & ~excl[i], depth_left - 1, cand, excl, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

std::uint64_t to_mask64(std::span<const int> members) {
    std::uint64_t m = 0;
    for (int i : members) m |= std::uint64_t{1} << i;
    return m;
}

}  // namespace

std::optional<std::pair<int, std::vector<Halfplane>>> find_separator(
    const ColoredPointSet& ps, std::span<const int> members, int k_max) {
    if (!is_island(ps, members))
        throw std::invalid_argument("member set violates the island property");
    SeparatorSearch search(ps);
    return search.run(to_mask64(members), k_max);
}

std::optional<int> separability_number(const ColoredPointSet& ps, std::span<const int> members,
                                       int k_max) {
    auto r = find_separator(ps, members, k_max);
    if (!r) return std::nullopt;
    return r->first;
}

std::vector<Island> enumerate_islands(const ColoredPointSet& ps, int k, const Budget& budget) {
    const int n = ps.size();
    if (k < 1 || k > 5) throw std::invalid_argument("k must be in 1..5");
    if (n > 62) throw BudgetExceeded(std::uint64_t{1} << 63);
    const std::uint64_t est =
        (std::uint64_t{1} << n) * static_cast<std::uint64_t>(n * n + 12 * n * n + 64);
    if (est > budget.max_checks) throw BudgetExceeded(est);

    SeparatorSearch search(ps);
    std::vector<Island> out;
    std::vector<int> members;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        members.clear();
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) members.push_back(i);
        }
        if (!is_island(ps, members)) continue;
        auto sep = search.run(mask, k);
        if (!sep) continue;
        out.push_back(Island{members, std::move(sep->second)});
    }
    std::sort(out.begin(), out.end(),
              [](const Island& a, const Island& b) { return a.members < b.members; });
    return out;
}

}  // namespace coarseness
