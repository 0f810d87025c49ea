#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace floodgrid {

struct CurvePoint {
    double depth = 0.0;    // ft
    double fraction = 0.0; // share of exposed value lost

    friend bool operator==(const CurvePoint &, const CurvePoint &) = default;
};

// Monotone depth -> damage-fraction breakpoint table. Always valid once
// constructed: at least two breakpoints, depths strictly increasing,
// fractions nondecreasing and inside [0, 1].
class DamageCurve {
  public:
    // Throws ValidationError on any invariant violation.
    explicit DamageCurve(std::vector<CurvePoint> breakpoints);

    std::span<const CurvePoint> breakpoints() const { return points_; }

    friend bool operator==(const DamageCurve &, const DamageCurve &) = default;

  private:
    std::vector<CurvePoint> points_;
};

// JSON array of [depth, fraction] pairs.
DamageCurve parse_damage_curve(std::string_view text);

std::string write_damage_curve(const DamageCurve &curve);

// Uncalibrated placeholder shape; useful for demos only.
DamageCurve default_damage_curve();

} // namespace floodgrid
