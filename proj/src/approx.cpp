#include "coarseness/approx.hpp"

namespace coarseness {

CoarsenessBounds approximate_coarseness(
    const ColoredPointSet& ps,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
    CoarsenessBounds out;
    if (ps.size() == 0) return out;
    AngularOrders orders(ps.points);
    MaxDiscResult d2 = max_disc_wedge(ps, orders, deadline);
    out.d2 = d2.value;
    out.lower = rational_max(Rational(d2.value, 8),
                             Rational(d2.value - 4 * ps.imbalance(), 4));
    if (out.lower < Rational(0)) out.lower = Rational(0);
    out.upper = 16 * d2.value;
    out.wedge_island = d2.witness;
    ConstructedPartition built = partition_from_2sep(ps, d2.witness);
    out.witness = std::move(built.partition);
    out.witness_disc = partition_disc(ps, out.witness);
    return out;
}

}  // namespace coarseness
