#include "floodgrid/damage.hpp"

#include <algorithm>

namespace floodgrid {

double evaluate_curve(const DamageCurve &curve, double depth) {
    const auto pts = curve.breakpoints();
    if (depth <= pts.front().depth) return pts.front().fraction;
    if (depth >= pts.back().depth) return pts.back().fraction;

    const auto hi = std::upper_bound(pts.begin(), pts.end(), depth,
                                     [](double d, const CurvePoint &p) { return d < p.depth; });
    const auto lo = hi - 1;
    const double t = (depth - lo->depth) / (hi->depth - lo->depth);
    // Clamp so rounding can never step past the next breakpoint; keeps the
    // curve monotone across segment joins.
    return std::clamp(lo->fraction + t * (hi->fraction - lo->fraction), lo->fraction, hi->fraction);
}

double cell_damage(const CellState &state, double depth, const DamageCurve &curve) {
    if (!(depth > 0.0)) return 0.0;
    const double value = std::max(state.exposed_value, 0.0);
    return std::min(evaluate_curve(curve, depth) * value, value);
}

} // namespace floodgrid
