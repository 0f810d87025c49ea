#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floodgrid/damage.hpp"
#include "floodgrid/grid.hpp"
#include "floodgrid/terrain.hpp"

namespace floodgrid {

// What a flooded cell contributes to the flooded-area total: the parcel area
// intersected with the cell, or the whole fishnet cell.
enum class AreaBasis { parcel, cell };

AreaBasis parse_area_basis(std::string_view text);
std::string_view to_string(AreaBasis basis);

struct ScenarioOptions {
    AreaBasis area_basis = AreaBasis::parcel;
    double cell_area = 0.0; // ft², used with AreaBasis::cell
};

struct CellOutcome {
    CellIndex cell;
    double depth = 0.0;  // ft
    double damage = 0.0; // USD
};

struct ScenarioResult {
    double slr = 0.0;                 // ft above base flood
    double total_damage = 0.0;        // USD
    double total_flooded_area = 0.0;  // ft²
    std::optional<double> cost_pct_delta; // fraction of the base total
    std::optional<double> area_pct_delta;
    // Cells with both an elevation and a BFE, in row-major order.
    std::vector<CellOutcome> per_cell;
};

// Evaluates one sea-level offset. Totals are summed in ascending (row, col)
// order.
ScenarioResult run_scenario(std::span<const CellState> cells, const DamageCurve &curve, double slr,
                            const ScenarioOptions &options = {});

// Fills the delta columns: for k >= 1, (C_k - C_{k-1}) / C_0 and likewise for
// area. A zero base total with nonzero later totals leaves that delta absent
// and appends a warning.
void compute_deltas(std::span<ScenarioResult> results, std::vector<std::string> *warnings = nullptr);

// Runs every offset (scenarios in parallel when threads > 1), fills deltas
// and checks that totals never decrease with sea level. slr_list must be
// strictly ascending and start at 0.
std::vector<ScenarioResult> sweep(std::span<const CellState> cells, const DamageCurve &curve,
                                  std::span<const double> slr_list, const ScenarioOptions &options = {},
                                  unsigned threads = 1, std::vector<std::string> *warnings = nullptr);

// FeatureCollection with one square polygon per flooded cell and properties
// slr, depth, damage.
std::string write_flood_geojson(const ScenarioResult &result, const GridSpec &g);

} // namespace floodgrid
