#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "floodgrid/geometry.hpp"

namespace floodgrid {

// ESRI ASCII grid raster. Values are row-major with row 0 the northernmost.
struct Raster {
    std::size_t ncols = 0;
    std::size_t nrows = 0;
    double xllcorner = 0.0;
    double yllcorner = 0.0;
    double cellsize = 1.0;
    double nodata_value = -9999.0;
    std::vector<double> values;

    double at(std::size_t row, std::size_t col) const { return values[row * ncols + col]; }

    // Exact comparison against the header sentinel.
    bool is_nodata(double v) const { return v == nodata_value; }

    Point cell_center(std::size_t row, std::size_t col) const {
        return {xllcorner + (static_cast<double>(col) + 0.5) * cellsize,
                yllcorner + (static_cast<double>(nrows - row) - 0.5) * cellsize};
    }

    Rect extent() const {
        return {xllcorner, yllcorner, xllcorner + static_cast<double>(ncols) * cellsize,
                yllcorner + static_cast<double>(nrows) * cellsize};
    }

    // Throws ValidationError when the invariants do not hold.
    void validate() const;

    friend bool operator==(const Raster &, const Raster &) = default;
};

// Parses the 6-line header (keys in any order, case-insensitive) followed by
// ncols*nrows whitespace separated values. Throws ParseError with the line and
// token position of the first problem.
Raster parse_ascii_grid(std::string_view text);

// Canonical form: lowercase keys, single spaces, one raster row per line,
// shortest round-trip decimals.
std::string write_ascii_grid(const Raster &raster);

} // namespace floodgrid
