#include "coarseness/discrepancy.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace coarseness {

int disc(const ColoredPointSet& ps, std::span<const int> members) {
    int s = 0;
    for (int i : members) s += color_sign(ps.colors[i]);
    return s < 0 ? -s : s;
}

int disc_of_set(const ColoredPointSet& ps) {
    int s = 0;
    for (Color c : ps.colors) s += color_sign(c);
    return s < 0 ? -s : s;
}

namespace {

inline Coord cross2(Coord ax, Coord ay, Coord bx, Coord by) { return ax * by - ay * bx; }

// Rank when rotating ccw starting just after base: 1 = ccw side (0,pi),
// 2 = opposite, 3 = cw side, 4 = base itself (a full turn away).
inline int angle_class(Coord bx, Coord by, Coord vx, Coord vy) {
    Coord cr = cross2(bx, by, vx, vy);
    if (cr > 0) return 1;
    if (cr < 0) return 3;
    return (bx * vx + by * vy > 0) ? 4 : 2;
}

// True iff a comes strictly before b when rotating ccw starting just after base.
inline bool ccw_first(Coord bx, Coord by, Coord ax, Coord ay, Coord cx, Coord cy) {
    int ca = angle_class(bx, by, ax, ay);
    int cb = angle_class(bx, by, cx, cy);
    if (ca != cb) return ca < cb;
    return cross2(ax, ay, cx, cy) > 0;
}

}  // namespace

AngularOrders::AngularOrders(const std::vector<Point>& points)
    : n_(static_cast<int>(points.size())) {
    if (n_ == 0) return;
    flat_.resize(static_cast<std::size_t>(n_) * (n_ - 1));
    std::vector<std::int32_t> idx;
    for (int u = 0; u < n_; ++u) {
        idx.clear();
        for (int j = 0; j < n_; ++j) {
            if (j != u) idx.push_back(j);
        }
        const Point pu = points[u];
        auto half = [&](std::int32_t j) {
            Coord dx = points[j].x - pu.x, dy = points[j].y - pu.y;
            return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
        };
        std::sort(idx.begin(), idx.end(), [&](std::int32_t a, std::int32_t b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            return cross(pu, points[a], points[b]) > 0;
        });
        std::copy(idx.begin(), idx.end(),
                  flat_.begin() + static_cast<std::size_t>(u) * (n_ - 1));
    }
}

namespace {

struct SweepWorkspace {
    std::vector<std::int32_t> arr;
    std::vector<int> pref;
};

// Enumerates, for one pivot, every halfplane split of the member subset whose
// boundary passes through the pivot (pair lines through a second member and
// gap lines touching the pivot only). emit(signed_value, halfplane) is called
// for every candidate whose |value| reaches `floor`.
template <class Emit>
void sweep_pivot(const ColoredPointSet& ps, const AngularOrders& orders,
                 const std::vector<char>& member, int u, SweepWorkspace& ws,
                 const int& floor, Emit&& emit) {
    const Point pu = ps.points[u];
    const int cu = color_sign(ps.colors[u]);
    auto& arr = ws.arr;
    arr.clear();
    for (std::int32_t j : orders.around(u)) {
        if (member[j]) arr.push_back(j);
    }
    const int m = static_cast<int>(arr.size());
    if (m == 0) {
        if (1 >= floor) emit(cu, halfplane_everything());
        return;
    }
    auto& pref = ws.pref;
    pref.assign(2 * m + 1, 0);
    for (int t = 0; t < 2 * m; ++t) pref[t + 1] = pref[t] + color_sign(ps.colors[arr[t % m]]);
    const int total = pref[m];

    auto dir_x = [&](int t) { return ps.points[arr[t % m]].x - pu.x; };
    auto dir_y = [&](int t) { return ps.points[arr[t % m]].y - pu.y; };

    auto consider = [&](int v, auto make_hp) {
        int a = v < 0 ? -v : v;
        if (a >= floor) emit(v, make_hp());
    };

    int r = 1;
    for (int i = 0; i < m; ++i) {
        const Coord dx = dir_x(i), dy = dir_y(i);
        const int ci = color_sign(ps.colors[arr[i]]);
        if (r < i + 1) r = i + 1;
        while (r < i + m && cross2(dx, dy, dir_x(r), dir_y(r)) > 0) ++r;
        const int si = pref[r] - pref[i];  // signed sum over window [theta_i, theta_i + pi)

        // Pair-line candidates: boundary through u and arr[i].
        consider(si - ci, [&] { return halfplane_at(pu, dx, dy, true, false); });
        consider(si + cu, [&] { return halfplane_at(pu, dx, dy, true, true); });
        consider(total - si, [&] { return halfplane_at(pu, dx, dy, false, false); });
        consider(total - si + ci + cu, [&] { return halfplane_at(pu, dx, dy, false, true); });

        // Gap candidates: boundary through u only, direction strictly inside the
        // angular gap following the event. Mediant of the gap endpoints.
        const Coord e1x = dir_x(i + 1), e1y = dir_y(i + 1);     // next direct event
        const Coord e2x = -dir_x(r), e2y = -dir_y(r);           // next anti event
        Coord nx, ny;
        if (ccw_first(dx, dy, e1x, e1y, e2x, e2y)) {
            nx = e1x;
            ny = e1y;
        } else {
            nx = e2x;
            ny = e2y;
        }
        // After theta_i: content = strict window, u on boundary.
        consider(si - ci + cu, [&] {
            Coord gx = dx + nx, gy = dy + ny;
            if (gx == 0 && gy == 0) {
                gx = -dy;
                gy = dx;
            }
            return halfplane_at(pu, gx, gy, true, true);
        });
        // After theta_i + pi: content = opposite strict window plus arr[i], u out.
        // Direction = antipode of the gap-after-theta_i direction.
        consider(total - si + ci, [&] {
            Coord gx = -(dx + nx), gy = -(dy + ny);
            if (gx == 0 && gy == 0) {
                gx = dy;
                gy = -dx;
            }
            return halfplane_at(pu, gx, gy, true, false);
        });
    }
}

struct BestWitness {
    int value = -1;
    std::vector<int> members;
    std::vector<Halfplane> cert;
};

bool cert_less(const std::vector<Halfplane>& a, const std::vector<Halfplane>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Halfplane& x, const Halfplane& y) { return x.key() < y.key(); });
}

// Deterministic tie-break: larger value, then lexicographically smallest
// member-set, then smallest certificate.
bool improves(const BestWitness& best, int value, const std::vector<int>& members,
              const std::vector<Halfplane>& cert) {
    if (value != best.value) return value > best.value;
    if (members != best.members) return members < best.members;
    return cert_less(cert, best.cert);
}

std::vector<int> materialize(const ColoredPointSet& ps, const std::vector<char>& member,
                             const Halfplane& hp) {
    std::vector<int> out;
    for (int i = 0; i < ps.size(); ++i) {
        if (member[i] && hp.contains(ps.points[i])) out.push_back(i);
    }
    return out;
}

void run_halfplane_sweep(const ColoredPointSet& ps, const AngularOrders& orders,
                         const std::vector<char>& member, BestWitness& best) {
    SweepWorkspace ws;
    int floor = best.value < 0 ? 0 : best.value;
    for (int u = 0; u < ps.size(); ++u) {
        if (!member[u]) continue;
        sweep_pivot(ps, orders, member, u, ws, floor, [&](int v, const Halfplane& hp) {
            std::vector<int> mem = materialize(ps, member, hp);
            int d = disc(ps, mem);
            if (d != (v < 0 ? -v : v))
                throw std::logic_error("sweep candidate disagrees with direct evaluation");
            if (improves(best, d, mem, {hp})) {
                best = BestWitness{d, std::move(mem), {hp}};
                if (best.value > floor) floor = best.value;
            }
        });
    }
}

void atomic_max(std::atomic<int>& target, int v) {
    int cur = target.load(std::memory_order_relaxed);
    while (cur < v && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

}  // namespace

int worker_thread_count() {
    if (const char* env = std::getenv("COARSENESS_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

MaxDiscResult max_disc_halfplane(const ColoredPointSet& ps) {
    AngularOrders orders(ps.points);
    return max_disc_halfplane(ps, orders);
}

MaxDiscResult max_disc_halfplane(const ColoredPointSet& ps, const AngularOrders& orders) {
    if (ps.size() < 1) throw std::invalid_argument("point set must be nonempty");
    std::vector<char> all(ps.points.size(), 1);
    BestWitness best;
    run_halfplane_sweep(ps, orders, all, best);
    return MaxDiscResult{best.value, Island{std::move(best.members), std::move(best.cert)}};
}

MaxDiscResult max_disc_wedge(const ColoredPointSet& ps) {
    AngularOrders orders(ps.points);
    return max_disc_wedge(ps, orders);
}

namespace {

// One wedge task: a contiguous deterministic slice of the outer-halfplane family.
// Task 0 additionally covers the all-containing outer halfplane.
void run_wedge_task(const ColoredPointSet& ps, const AngularOrders& orders, int task,
                    const std::atomic<int>& global_floor, BestWitness& best,
                    std::optional<std::chrono::steady_clock::time_point> deadline,
                    std::atomic<bool>& expired) {
    const int n = ps.size();
    SweepWorkspace ws;
    std::vector<char> member(n, 0);
    std::vector<Halfplane> outers;
    const bool pair_phase = task < n;
    const int anchor = pair_phase ? task : task - n;
    if (pair_phase) {
        if (task == 0) outers.push_back(halfplane_everything());
        for (int j = anchor + 1; j < n; ++j) {
            for (bool left : {true, false}) {
                for (bool closed : {true, false}) {
                    outers.push_back(
                        halfplane_through(ps.points[anchor], ps.points[j], left, closed));
                }
            }
        }
    } else {
        // Single-contact outer halfplanes through the anchor point.
        std::vector<std::pair<Coord, Coord>> dirs;
        for (int j = 0; j < n; ++j) {
            if (j == anchor) continue;
            Coord dx = ps.points[j].x - ps.points[anchor].x;
            Coord dy = ps.points[j].y - ps.points[anchor].y;
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
        for (std::size_t g = 0; g < dirs.size(); ++g) {
            auto [ax, ay] = dirs[g];
            auto [bx, by] = dirs[(g + 1) % dirs.size()];
            Coord mx = ax + bx, my = ay + by;
            if (mx == 0 && my == 0) {
                mx = -ay;
                my = ax;
            }
            for (bool left : {true, false}) {
                for (bool closed : {true, false}) {
                    outers.push_back(halfplane_at(ps.points[anchor], mx, my, left, closed));
                }
            }
        }
    }

    int processed = 0;
    for (const Halfplane& outer : outers) {
        if (deadline && ++processed % 64 == 0) {
            if (std::chrono::steady_clock::now() >= *deadline) {
                expired.store(true, std::memory_order_relaxed);
                return;
            }
            if (expired.load(std::memory_order_relaxed)) return;
        }
        int reds = 0, blues = 0;
        for (int i = 0; i < n; ++i) {
            member[i] = outer.contains(ps.points[i]) ? 1 : 0;
            if (member[i]) (ps.colors[i] == Color::Red ? reds : blues)++;
        }
        int floor = std::max(best.value, global_floor.load(std::memory_order_relaxed));
        if (floor < 0) floor = 0;
        if (std::max(reds, blues) < floor) continue;
        for (int u = 0; u < n; ++u) {
            if (!member[u]) continue;
            sweep_pivot(ps, orders, member, u, ws, floor, [&](int v, const Halfplane& inner) {
                std::vector<int> mem = materialize(ps, member, inner);
                int d = disc(ps, mem);
                if (d != (v < 0 ? -v : v))
                    throw std::logic_error("wedge sweep disagrees with direct evaluation");
                std::vector<Halfplane> cert{outer, inner};
                if (improves(best, d, mem, cert)) {
                    best = BestWitness{d, std::move(mem), std::move(cert)};
                    if (best.value > floor) floor = best.value;
                }
            });
        }
    }
}

}  // namespace

MaxDiscResult max_disc_wedge(const ColoredPointSet& ps, const AngularOrders& orders,
                             std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (ps.size() < 1) throw std::invalid_argument("point set must be nonempty");
    const int n = ps.size();

    MaxDiscResult d1 = max_disc_halfplane(ps, orders);
    BestWitness global{d1.value, d1.witness.members, d1.witness.certificate};

    const int task_count = 2 * n;
    const int threads = std::min(worker_thread_count(), task_count);
    std::vector<BestWitness> task_best(task_count);
    std::atomic<int> floor{global.value};
    std::atomic<int> next{0};
    std::atomic<bool> expired{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto work = [&] {
        try {
            for (;;) {
                int t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= task_count || expired.load(std::memory_order_relaxed)) break;
                BestWitness local;
                run_wedge_task(ps, orders, t, floor, local, deadline, expired);
                task_best[t] = std::move(local);
                if (task_best[t].value >= 0) atomic_max(floor, task_best[t].value);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(error_mu);
            if (!error) error = std::current_exception();
            expired.store(true, std::memory_order_relaxed);
        }
    };

    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    if (expired.load())
        throw BudgetExceeded(static_cast<std::uint64_t>(n) * n * n * n);

    for (int t = 0; t < task_count; ++t) {
        const BestWitness& b = task_best[t];
        if (b.value < 0) continue;
        if (improves(global, b.value, b.members, b.cert)) global = b;
    }
    return MaxDiscResult{global.value, Island{std::move(global.members), std::move(global.cert)}};
}

MaxDiscResult max_disc_k(const ColoredPointSet& ps, int k, const Budget& budget) {
    std::vector<Island> islands = enumerate_islands(ps, k, budget);
    const Island* best = nullptr;
    int best_d = -1;
    for (const Island& isl : islands) {
        int d = disc(ps, isl.members);
        if (d > best_d || (d == best_d && best && isl.members < best->members)) {
            best = &isl;
            best_d = d;
        }
    }
    return MaxDiscResult{best_d, *best};
}

ShatterCount shatter_classes(const ColoredPointSet& ps, const std::vector<Island>& family,
                             int k) {
    if (family.empty()) throw std::invalid_argument("family must be nonempty");
    const int m = static_cast<int>(family.size());
    const std::size_t words = (family.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> vecs(
        ps.points.size(), std::vector<std::uint64_t>(words, 0));
    for (int f = 0; f < m; ++f) {
        for (int i : family[f].members) {
            vecs[i][f / 64] |= std::uint64_t{1} << (f % 64);
        }
    }
    std::sort(vecs.begin(), vecs.end());
    int classes = static_cast<int>(std::unique(vecs.begin(), vecs.end()) - vecs.begin());
    return ShatterCount{m, k, classes};
}

}  // namespace coarseness
