#pragma once

#include "floodgrid/io/damage_curve.hpp"
#include "floodgrid/terrain.hpp"

namespace floodgrid {

// Piecewise-linear interpolation, clamped to the end fractions outside the
// breakpoint range.
double evaluate_curve(const DamageCurve &curve, double depth);

// Damage in USD: zero when depth <= 0, never above the exposed value.
double cell_damage(const CellState &state, double depth, const DamageCurve &curve);

} // namespace floodgrid
