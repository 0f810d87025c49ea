#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floodgrid/geometry.hpp"

namespace floodgrid {

// Row-major cell address counted from the southwest corner.
struct CellIndex {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const CellIndex &, const CellIndex &) = default;
};

// Square fishnet tessellation. Cell (i, j) covers
// [origin_x + j*s, origin_x + (j+1)*s) x [origin_y + i*s, origin_y + (i+1)*s);
// the outer top and right edges of the grid are closed.
struct GridSpec {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double cell_size = 1.0;
    int n_cols = 1;
    int n_rows = 1;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(n_cols) * static_cast<std::size_t>(n_rows);
    }
    std::size_t linear(CellIndex c) const {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(n_cols) +
               static_cast<std::size_t>(c.col);
    }
    CellIndex unlinear(std::size_t k) const {
        return {static_cast<int>(k / static_cast<std::size_t>(n_cols)),
                static_cast<int>(k % static_cast<std::size_t>(n_cols))};
    }
    double x_edge(int col) const { return origin_x + static_cast<double>(col) * cell_size; }
    double y_edge(int row) const { return origin_y + static_cast<double>(row) * cell_size; }
    Rect extent() const { return {x_edge(0), y_edge(0), x_edge(n_cols), y_edge(n_rows)}; }

    void validate() const;

    friend bool operator==(const GridSpec &, const GridSpec &) = default;
};

// Dense per-cell storage in GridSpec::linear order.
template <typename T> struct CellMap {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<T> data;

    CellMap() = default;
    explicit CellMap(const GridSpec &g, T init = T{})
        : n_rows(g.n_rows), n_cols(g.n_cols), data(g.cell_count(), init) {}

    T &operator[](CellIndex c) { return data[index(c)]; }
    const T &operator[](CellIndex c) const { return data[index(c)]; }

  private:
    std::size_t index(CellIndex c) const {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(n_cols) +
               static_cast<std::size_t>(c.col);
    }
};

// Grid anchored at the bbox southwest corner with ceil() cell counts so the
// whole bbox is covered. Throws ValidationError for a degenerate bbox or a
// non-positive cell size.
GridSpec make_fishnet(const Rect &bbox, double cell_size);

// Throws ValidationError when the index is out of range.
Rect cell_rect(const GridSpec &g, int row, int col);

Point cell_centroid(const GridSpec &g, CellIndex c);

// Cell containing `p` under the half-open convention, or nullopt outside.
std::optional<CellIndex> locate(const GridSpec &g, Point p);

// Index range [lo, hi] of the columns (rows) whose span intersects the closed
// interval [lo_coord, hi_coord]; nullopt when disjoint.
std::optional<std::pair<int, int>> col_span(const GridSpec &g, double lo_coord, double hi_coord);
std::optional<std::pair<int, int>> row_span(const GridSpec &g, double lo_coord, double hi_coord);

// {"origin_x":..,"origin_y":..,"cell_size":..,"n_cols":..,"n_rows":..}
std::string grid_to_json(const GridSpec &g);
GridSpec grid_from_json(std::string_view text);

} // namespace floodgrid
