#include "floodgrid/scenario.hpp"

#include <algorithm>
#include <numeric>

#include "floodgrid/error.hpp"
#include "floodgrid/io/text.hpp"
#include "floodgrid/parallel.hpp"

namespace floodgrid {
namespace {

// Delta of one quantity for every non-base scenario, or nullopt for all of
// them when the base total is zero but later totals are not.
template <typename Get, typename Set>
void fill_delta(std::span<ScenarioResult> results, Get get, Set set, const char *name,
                std::vector<std::string> *warnings) {
    const double base = get(results[0]);
    bool all_zero = true;
    for (const auto &r : results) all_zero = all_zero && get(r) == 0.0;
    if (base == 0.0 && !all_zero) {
        if (warnings)
            warnings->push_back(std::string("base scenario ") + name +
                                " is 0 while later scenarios are not; " + name + " deltas left empty");
        for (std::size_t k = 1; k < results.size(); ++k) set(results[k], std::nullopt);
        return;
    }
    for (std::size_t k = 1; k < results.size(); ++k) {
        const double step = get(results[k]) - get(results[k - 1]);
        set(results[k], base == 0.0 ? 0.0 : step / base);
    }
}

} // namespace

AreaBasis parse_area_basis(std::string_view text) {
    if (text == "parcel") return AreaBasis::parcel;
    if (text == "cell") return AreaBasis::cell;
    throw ValidationError("area basis must be 'parcel' or 'cell', got '" + std::string(text) + "'");
}

std::string_view to_string(AreaBasis basis) { return basis == AreaBasis::cell ? "cell" : "parcel"; }

ScenarioResult run_scenario(std::span<const CellState> cells, const DamageCurve &curve, double slr,
                            const ScenarioOptions &options) {
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cells[a].cell < cells[b].cell; });

    ScenarioResult result;
    result.slr = slr;
    for (std::size_t k : order) {
        const CellState &s = cells[k];
        if (!s.mean_elevation || !s.bfe) continue;
        const double depth = flood_depth(*s.bfe, slr, *s.mean_elevation);
        const double damage = cell_damage(s, depth, curve);
        result.per_cell.push_back({s.cell, depth, damage});
        if (depth > 0.0) {
            result.total_damage += damage;
            result.total_flooded_area +=
                options.area_basis == AreaBasis::cell ? options.cell_area : s.exposed_area;
        }
    }
    return result;
}

void compute_deltas(std::span<ScenarioResult> results, std::vector<std::string> *warnings) {
    if (results.empty()) return;
    results[0].cost_pct_delta.reset();
    results[0].area_pct_delta.reset();
    fill_delta(
        results, [](const ScenarioResult &r) { return r.total_damage; },
        [](ScenarioResult &r, std::optional<double> v) { r.cost_pct_delta = v; }, "cost", warnings);
    fill_delta(
        results, [](const ScenarioResult &r) { return r.total_flooded_area; },
        [](ScenarioResult &r, std::optional<double> v) { r.area_pct_delta = v; }, "flooded area", warnings);
}

std::vector<ScenarioResult> sweep(std::span<const CellState> cells, const DamageCurve &curve,
                                  std::span<const double> slr_list, const ScenarioOptions &options,
                                  unsigned threads, std::vector<std::string> *warnings) {
    if (slr_list.empty()) throw ValidationError("slr list is empty");
    if (slr_list.front() != 0.0) throw ValidationError("slr list must start at 0 (the base flood)");
    for (std::size_t k = 1; k < slr_list.size(); ++k)
        if (!(slr_list[k] > slr_list[k - 1])) throw ValidationError("slr list must be strictly ascending");

    std::vector<ScenarioResult> results(slr_list.size());
    parallel_for(slr_list.size(), threads,
                 [&](std::size_t k) { results[k] = run_scenario(cells, curve, slr_list[k], options); });

    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].total_damage < results[k - 1].total_damage ||
            results[k].total_flooded_area < results[k - 1].total_flooded_area)
            throw std::logic_error("scenario totals decreased with rising sea level");
    }
    compute_deltas(results, warnings);
    return results;
}

std::string write_flood_geojson(const ScenarioResult &result, const GridSpec &g) {
    const std::string slr = io::format_number(result.slr);
    std::string out = "{\"type\":\"FeatureCollection\",\"features\":[";
    bool first = true;
    for (const auto &c : result.per_cell) {
        if (!(c.depth > 0.0)) continue;
        const Rect r = cell_rect(g, c.cell.row, c.cell.col);
        const std::string x0 = io::format_number(r.xmin), y0 = io::format_number(r.ymin);
        const std::string x1 = io::format_number(r.xmax), y1 = io::format_number(r.ymax);
        if (!first) out += ",";
        first = false;
        out += "\n{\"type\":\"Feature\",\"geometry\":{\"type\":\"Polygon\",\"coordinates\":[[";
        out += "[" + x0 + "," + y0 + "],[" + x1 + "," + y0 + "],[" + x1 + "," + y1 + "],[" + x0 + "," + y1 +
               "],[" + x0 + "," + y0 + "]]]},";
        out += "\"properties\":{\"row\":" + std::to_string(c.cell.row) + ",\"col\":" + std::to_string(c.cell.col) +
               ",\"slr\":" + slr + ",\"depth\":" + io::format_number(c.depth) +
               ",\"damage\":" + io::format_fixed2(c.damage) + "}}";
    }
    out += "\n]}\n";
    return out;
}

} // namespace floodgrid
