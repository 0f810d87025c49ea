#include "floodgrid/terrain.hpp"

#include "floodgrid/io/text.hpp"
#include "floodgrid/parallel.hpp"

namespace floodgrid {

CellMap<std::optional<double>> zonal_mean_elevation(const Raster &dem, const GridSpec &g, unsigned threads) {
    dem.validate();
    g.validate();

    // Pixel centres in one DEM row share y, so each DEM row feeds exactly one
    // fishnet row (or none) and each DEM column exactly one fishnet column.
    std::vector<std::optional<int>> col_of(dem.ncols);
    for (std::size_t c = 0; c < dem.ncols; ++c) {
        const auto cell = locate(g, {dem.cell_center(0, c).x, g.origin_y});
        if (cell) col_of[c] = cell->col;
    }
    std::vector<std::vector<std::size_t>> dem_rows_of(static_cast<std::size_t>(g.n_rows));
    for (std::size_t r = 0; r < dem.nrows; ++r) {
        const auto cell = locate(g, {g.origin_x, dem.cell_center(r, 0).y});
        if (cell) dem_rows_of[static_cast<std::size_t>(cell->row)].push_back(r);
    }

    CellMap<std::optional<double>> mean(g);
    parallel_for(dem_rows_of.size(), threads, [&](std::size_t frow) {
        std::vector<double> sum(static_cast<std::size_t>(g.n_cols), 0.0);
        std::vector<std::size_t> count(static_cast<std::size_t>(g.n_cols), 0);
        for (std::size_t r : dem_rows_of[frow]) {
            for (std::size_t c = 0; c < dem.ncols; ++c) {
                if (!col_of[c]) continue;
                const double v = dem.at(r, c);
                if (dem.is_nodata(v)) continue;
                const auto fc = static_cast<std::size_t>(*col_of[c]);
                sum[fc] += v;
                ++count[fc];
            }
        }
        for (int col = 0; col < g.n_cols; ++col) {
            const auto k = static_cast<std::size_t>(col);
            if (count[k] > 0)
                mean[{static_cast<int>(frow), col}] = sum[k] / static_cast<double>(count[k]);
        }
    });
    return mean;
}

CellMap<std::optional<double>> assign_bfe(const GridSpec &g, std::span<const BfeZone> zones) {
    g.validate();
    std::vector<Rect> boxes;
    boxes.reserve(zones.size());
    for (const auto &z : zones) boxes.push_back(bounding_box(z.shape.outer));

    CellMap<std::optional<double>> bfe(g);
    for (std::size_t k = 0; k < g.cell_count(); ++k) {
        const CellIndex c = g.unlinear(k);
        const Point p = cell_centroid(g, c);
        for (std::size_t z = 0; z < zones.size(); ++z) {
            const Rect &b = boxes[z];
            if (p.x < b.xmin || p.x > b.xmax || p.y < b.ymin || p.y > b.ymax) continue;
            if (point_in_polygon(p, zones[z].shape)) {
                bfe[c] = zones[z].static_bfe;
                break;
            }
        }
    }
    return bfe;
}

std::vector<CellState> build_cell_states(const GridSpec &g, const CellMap<std::optional<double>> &elevation,
                                         const CellMap<std::optional<double>> &bfe,
                                         std::span<const CellAttribution> attributions) {
    std::vector<CellState> cells(g.cell_count());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const CellIndex c = g.unlinear(k);
        cells[k].cell = c;
        cells[k].mean_elevation = elevation[c];
        cells[k].bfe = bfe[c];
    }
    for (const auto &a : attributions) {
        auto &s = cells[g.linear(a.cell)];
        s.exposed_value += a.apportioned_value;
        s.exposed_area += a.clipped_area;
    }
    return cells;
}

std::string write_cell_states_csv(std::span<const CellState> cells) {
    std::string out = "row,col,mean_elevation,bfe,exposed_value,exposed_area\n";
    for (const auto &s : cells) {
        out += std::to_string(s.cell.row) + "," + std::to_string(s.cell.col) + ",";
        if (s.mean_elevation) out += io::format_number(*s.mean_elevation);
        out += ",";
        if (s.bfe) out += io::format_number(*s.bfe);
        out += "," + io::format_fixed2(s.exposed_value) + "," + io::format_number(s.exposed_area) + "\n";
    }
    return out;
}

} // namespace floodgrid
