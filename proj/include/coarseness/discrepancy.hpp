#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coarseness/islands.hpp"

namespace coarseness {

struct MaxDiscResult {
    int value = 0;
    Island witness;
};

struct ShatterCount {
    int m = 0;
    int k = 0;
    int classes = 0;
};

// | #red(members) - #blue(members) |
int disc(const ColoredPointSet& ps, std::span<const int> members);

int disc_of_set(const ColoredPointSet& ps);

// Counterclockwise order of all other points around each pivot. Depends on the
// points only, so one instance serves any number of recolorings.
class AngularOrders {
  public:
    explicit AngularOrders(const std::vector<Point>& points);
    std::span<const std::int32_t> around(int pivot) const {
        return {flat_.data() + static_cast<std::size_t>(pivot) * (n_ - 1),
                static_cast<std::size_t>(n_ - 1)};
    }
    int size() const { return n_; }

  private:
    int n_ = 0;
    std::vector<std::int32_t> flat_;
};

// D1 with a 1-separable witness; rotational sweep around every point.
MaxDiscResult max_disc_halfplane(const ColoredPointSet& ps);
MaxDiscResult max_disc_halfplane(const ColoredPointSet& ps, const AngularOrders& orders);

// D2 with a witness of at most two halfplanes; outer canonical halfplane times
// inner sweep on the cut subset. `deadline`, when set, aborts with BudgetExceeded.
MaxDiscResult max_disc_wedge(const ColoredPointSet& ps);
MaxDiscResult max_disc_wedge(
    const ColoredPointSet& ps, const AngularOrders& orders,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

// Exact D_k by maximizing disc over enumerate_islands(ps, k).
MaxDiscResult max_disc_k(const ColoredPointSet& ps, int k, const Budget& budget = {});

// Number of distinct membership vectors of the points of S across the family.
ShatterCount shatter_classes(const ColoredPointSet& ps, const std::vector<Island>& family,
                             int k);

// Worker-thread count: COARSENESS_THREADS env var, else hardware concurrency.
int worker_thread_count();

}  // namespace coarseness
