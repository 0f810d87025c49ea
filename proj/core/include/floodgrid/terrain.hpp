#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "floodgrid/grid.hpp"
#include "floodgrid/io/ascii_grid.hpp"
#include "floodgrid/io/geojson.hpp"
#include "floodgrid/overlay.hpp"

namespace floodgrid {

struct CellState {
    CellIndex cell;
    std::optional<double> mean_elevation; // ft
    std::optional<double> bfe;            // ft
    double exposed_value = 0.0;           // USD
    double exposed_area = 0.0;            // ft²
};

// Mean of the non-NODATA DEM samples whose pixel centres fall in each cell.
// Samples are accumulated in DEM row-major order regardless of `threads`.
CellMap<std::optional<double>> zonal_mean_elevation(const Raster &dem, const GridSpec &g,
                                                    unsigned threads = 1);

// BFE of the first zone (input order) containing each cell centroid.
CellMap<std::optional<double>> assign_bfe(const GridSpec &g, std::span<const BfeZone> zones);

// Water surface minus ground; positive means flooded.
inline double flood_depth(double bfe, double slr, double elevation) {
    return (bfe + slr) - elevation;
}

// One state per cell in row-major order. Attributions must be sorted by
// (parcel_id, cell) as returned by apportion_all; exposures are summed in that
// order.
std::vector<CellState> build_cell_states(const GridSpec &g,
                                         const CellMap<std::optional<double>> &elevation,
                                         const CellMap<std::optional<double>> &bfe,
                                         std::span<const CellAttribution> attributions);

// row,col,mean_elevation,bfe,exposed_value,exposed_area
std::string write_cell_states_csv(std::span<const CellState> cells);

} // namespace floodgrid
