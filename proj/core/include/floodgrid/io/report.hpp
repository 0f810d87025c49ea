#pragma once

#include <span>
#include <string>

#include "floodgrid/scenario.hpp"

namespace floodgrid {

// scenario,total_flooding_usd,total_area_flooded_sqft,cost_pct_delta,area_pct_delta
//
// Dollars to cents, deltas as percentages with two decimals, absent deltas as
// empty cells. Results must be strictly ascending in slr.
std::string write_report(std::span<const ScenarioResult> results);

// "base" for slr 0, otherwise "slr_<s>ft".
std::string scenario_label(double slr);

} // namespace floodgrid
