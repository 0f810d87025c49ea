#include "floodgrid/grid.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "floodgrid/error.hpp"

namespace floodgrid {
namespace {

// Smallest count of cells of size s starting at `lo` whose far edge reaches
// `hi`. The ceil() result is corrected so that rounding never adds a cell the
// extent does not need.
int cover_count(double lo, double hi, double s) {
    const double q = std::ceil((hi - lo) / s);
    if (!(q < static_cast<double>(std::numeric_limits<int>::max())))
        throw ValidationError("fishnet would exceed the maximum cell count");
    int n = std::max(1, static_cast<int>(q));
    while (n > 1 && lo + static_cast<double>(n - 1) * s >= hi) --n;
    while (lo + static_cast<double>(n) * s < hi) ++n;
    return n;
}

// Index along one axis under the half-open rule with a closed far edge.
std::optional<int> locate_axis(double v, double origin, double s, int n) {
    auto edge = [&](int k) { return origin + static_cast<double>(k) * s; };
    if (!(v >= edge(0)) || v > edge(n)) return std::nullopt;
    const double guess = std::floor((v - origin) / s);
    int k = guess < 0.0 ? 0 : (guess > n ? n : static_cast<int>(guess));
    while (k > 0 && v < edge(k)) --k;
    while (k < n && v >= edge(k + 1)) ++k;
    if (k == n) k = n - 1; // v on the closed outer edge
    return k;
}

std::optional<std::pair<int, int>> axis_span(double lo, double hi, double origin, double s, int n) {
    auto edge = [&](int k) { return origin + static_cast<double>(k) * s; };
    if (hi < edge(0) || lo > edge(n)) return std::nullopt;
    int first = locate_axis(std::max(lo, edge(0)), origin, s, n).value_or(0);
    int last = locate_axis(std::min(hi, edge(n)), origin, s, n).value_or(n - 1);
    // A closed interval touching the left edge of a cell also touches the
    // previous one.
    if (first > 0 && lo <= edge(first)) --first;
    return std::pair{first, last};
}

} // namespace

void GridSpec::validate() const {
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) throw ValidationError("cell size must be > 0");
    if (n_cols < 1 || n_rows < 1) throw ValidationError("grid needs n_cols >= 1 and n_rows >= 1");
    if (!std::isfinite(origin_x) || !std::isfinite(origin_y)) throw ValidationError("grid origin must be finite");
}

GridSpec make_fishnet(const Rect &bbox, double cell_size) {
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) throw ValidationError("non-positive cell size");
    if (!std::isfinite(bbox.xmin) || !std::isfinite(bbox.ymin) || !std::isfinite(bbox.xmax) ||
        !std::isfinite(bbox.ymax) || !(bbox.xmax > bbox.xmin) || !(bbox.ymax > bbox.ymin))
        throw ValidationError("degenerate bbox");
    GridSpec g;
    g.origin_x = bbox.xmin;
    g.origin_y = bbox.ymin;
    g.cell_size = cell_size;
    g.n_cols = cover_count(bbox.xmin, bbox.xmax, cell_size);
    g.n_rows = cover_count(bbox.ymin, bbox.ymax, cell_size);
    return g;
}

Rect cell_rect(const GridSpec &g, int row, int col) {
    if (row < 0 || row >= g.n_rows || col < 0 || col >= g.n_cols)
        throw ValidationError("cell index (" + std::to_string(row) + "," + std::to_string(col) +
                              ") out of range");
    return {g.x_edge(col), g.y_edge(row), g.x_edge(col + 1), g.y_edge(row + 1)};
}

Point cell_centroid(const GridSpec &g, CellIndex c) {
    const Rect r = cell_rect(g, c.row, c.col);
    return {0.5 * (r.xmin + r.xmax), 0.5 * (r.ymin + r.ymax)};
}

std::optional<CellIndex> locate(const GridSpec &g, Point p) {
    const auto col = locate_axis(p.x, g.origin_x, g.cell_size, g.n_cols);
    if (!col) return std::nullopt;
    const auto row = locate_axis(p.y, g.origin_y, g.cell_size, g.n_rows);
    if (!row) return std::nullopt;
    return CellIndex{*row, *col};
}

std::optional<std::pair<int, int>> col_span(const GridSpec &g, double lo, double hi) {
    return axis_span(lo, hi, g.origin_x, g.cell_size, g.n_cols);
}

std::optional<std::pair<int, int>> row_span(const GridSpec &g, double lo, double hi) {
    return axis_span(lo, hi, g.origin_y, g.cell_size, g.n_rows);
}

std::string grid_to_json(const GridSpec &g) {
    nlohmann::ordered_json j;
    j["origin_x"] = g.origin_x;
    j["origin_y"] = g.origin_y;
    j["cell_size"] = g.cell_size;
    j["n_cols"] = g.n_cols;
    j["n_rows"] = g.n_rows;
    return j.dump();
}

GridSpec grid_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("invalid grid JSON at byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) throw ParseError("grid JSON must be an object");
    auto num = [&](const char *key) {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_number()) throw ParseError(std::string("grid JSON: missing number '") + key + "'");
        return it->get<double>();
    };
    auto count = [&](const char *key) {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_number_integer())
            throw ParseError(std::string("grid JSON: missing integer '") + key + "'");
        return it->get<int>();
    };
    GridSpec g{num("origin_x"), num("origin_y"), num("cell_size"), count("n_cols"), count("n_rows")};
    try {
        g.validate();
    } catch (const ValidationError &e) {
        throw ParseError(std::string("grid JSON: ") + e.what());
    }
    return g;
}

} // namespace floodgrid
