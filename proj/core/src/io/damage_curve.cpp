#include "floodgrid/io/damage_curve.hpp"

#include <cmath>

#include <json.hpp>

#include "floodgrid/error.hpp"
#include "floodgrid/io/text.hpp"

namespace floodgrid {

DamageCurve::DamageCurve(std::vector<CurvePoint> breakpoints) : points_(std::move(breakpoints)) {
    if (points_.size() < 2) throw ValidationError("damage curve needs at least 2 breakpoints");
    for (std::size_t k = 0; k < points_.size(); ++k) {
        const auto &p = points_[k];
        if (!std::isfinite(p.depth) || !std::isfinite(p.fraction))
            throw ValidationError("damage curve breakpoint " + std::to_string(k) + " is not finite");
        if (p.fraction < 0.0 || p.fraction > 1.0)
            throw ValidationError("damage curve breakpoint " + std::to_string(k) + ": fraction outside [0,1]");
        if (k == 0) continue;
        if (!(p.depth > points_[k - 1].depth))
            throw ValidationError("damage curve breakpoint " + std::to_string(k) +
                                  ": depths strictly increasing required");
        if (p.fraction < points_[k - 1].fraction)
            throw ValidationError("damage curve breakpoint " + std::to_string(k) +
                                  ": fractions nondecreasing required");
    }
}

DamageCurve parse_damage_curve(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_array()) throw ParseError("damage curve must be a JSON array of [depth, fraction] pairs");

    std::vector<CurvePoint> points;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const auto &pair = doc[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("damage curve entry " + std::to_string(k) + " must be [depth, fraction]");
        points.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    try {
        return DamageCurve(std::move(points));
    } catch (const ValidationError &e) {
        throw ParseError(e.what());
    }
}

std::string write_damage_curve(const DamageCurve &curve) {
    std::string out = "[";
    bool first = true;
    for (const auto &p : curve.breakpoints()) {
        if (!first) out += ",";
        first = false;
        out += "[" + io::format_number(p.depth) + "," + io::format_number(p.fraction) + "]";
    }
    return out + "]\n";
}

DamageCurve default_damage_curve() {
    return DamageCurve({{0, 0}, {1, 0.15}, {2, 0.22}, {4, 0.30}, {6, 0.40}, {10, 0.60}});
}

} // namespace floodgrid
