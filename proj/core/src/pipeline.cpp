#include "floodgrid/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "floodgrid/eda.hpp"
#include "floodgrid/error.hpp"
#include "floodgrid/io/ascii_grid.hpp"
#include "floodgrid/io/damage_curve.hpp"
#include "floodgrid/io/geojson.hpp"
#include "floodgrid/io/report.hpp"
#include "floodgrid/io/text.hpp"
#include "floodgrid/overlay.hpp"
#include "floodgrid/terrain.hpp"

namespace floodgrid {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Reads and parses one input, prefixing any failure with the file name.
template <typename Parse> auto load(const fs::path &path, Parse parse) {
    const std::string text = io::read_text_file(path);
    try {
        return parse(text);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const ValidationError &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void note(std::vector<std::string> *log, std::string line) {
    if (log) log->push_back(std::move(line));
}

} // namespace

void RunConfig::validate() const {
    if (dem_path.empty()) throw ConfigError("dem_path is empty");
    if (parcels_path.empty()) throw ConfigError("parcels_path is empty");
    if (bfe_path.empty()) throw ConfigError("bfe_path is empty");
    if (damage_curve_path.empty()) throw ConfigError("damage_curve_path is empty");
    if (output_dir.empty()) throw ConfigError("output_dir is empty");
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) throw ConfigError("cell_size must be > 0");
    if (slr_list.empty()) throw ConfigError("slr_list is empty");
    if (slr_list.front() != 0.0) throw ConfigError("slr_list must start at 0");
    for (std::size_t k = 1; k < slr_list.size(); ++k)
        if (!(slr_list[k] > slr_list[k - 1])) throw ConfigError("slr_list must be strictly ascending");
    for (double s : slr_list)
        if (!std::isfinite(s)) throw ConfigError("slr_list entries must be finite");
    if (bbox && !(bbox->xmax > bbox->xmin && bbox->ymax > bbox->ymin)) throw ConfigError("degenerate bbox");
}

RunConfig load_run_config(const fs::path &path) {
    const std::string text = io::read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(path.string() + ": invalid JSON at byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) throw ConfigError(path.string() + ": config must be a JSON object");

    const fs::path base = path.parent_path();
    auto path_key = [&](const char *key) {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_string()) throw ConfigError(std::string("config: missing string '") + key + "'");
        fs::path p = it->get<std::string>();
        if (p.empty()) return p;
        return p.is_absolute() ? p : base / p;
    };

    RunConfig c;
    c.dem_path = path_key("dem_path");
    c.parcels_path = path_key("parcels_path");
    c.bfe_path = path_key("bfe_path");
    c.damage_curve_path = path_key("damage_curve_path");
    c.output_dir = path_key("output_dir");
    if (auto it = j.find("cell_size"); it != j.end()) {
        if (!it->is_number()) throw ConfigError("config: cell_size must be a number");
        c.cell_size = it->get<double>();
    }
    if (auto it = j.find("slr_list"); it != j.end()) {
        if (!it->is_array()) throw ConfigError("config: slr_list must be an array");
        c.slr_list.clear();
        for (const auto &v : *it) {
            if (!v.is_number()) throw ConfigError("config: slr_list entries must be numbers");
            c.slr_list.push_back(v.get<double>());
        }
    }
    if (auto it = j.find("area_basis"); it != j.end()) {
        if (!it->is_string()) throw ConfigError("config: area_basis must be a string");
        try {
            c.area_basis = parse_area_basis(it->get<std::string>());
        } catch (const ValidationError &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (auto it = j.find("bbox"); it != j.end()) {
        if (!it->is_array() || it->size() != 4 ||
            !std::all_of(it->begin(), it->end(), [](const json &v) { return v.is_number(); }))
            throw ConfigError("config: bbox must be [xmin, ymin, xmax, ymax]");
        c.bbox = Rect{(*it)[0].get<double>(), (*it)[1].get<double>(), (*it)[2].get<double>(),
                      (*it)[3].get<double>()};
    }
    return c;
}

OutputFiles assess(const RunConfig &config, unsigned threads, std::vector<std::string> *log) {
    config.validate();

    const Raster dem = load(config.dem_path, [](const std::string &t) { return parse_ascii_grid(t); });
    const auto parcels = load(config.parcels_path, [](const std::string &t) { return parse_parcels(t); });
    const auto zones = load(config.bfe_path, [](const std::string &t) { return parse_bfe_zones(t); });
    const DamageCurve curve =
        load(config.damage_curve_path, [](const std::string &t) { return parse_damage_curve(t); });
    if (parcels.empty()) throw EmptyInputError(config.parcels_path.string() + ": no parcels");

    Rect bbox;
    if (config.bbox) {
        bbox = *config.bbox;
    } else {
        bbox = bounding_box(parcels.front().shape.outer);
        for (const auto &p : parcels) {
            const Rect b = bounding_box(p.shape.outer);
            bbox = {std::min(bbox.xmin, b.xmin), std::min(bbox.ymin, b.ymin), std::max(bbox.xmax, b.xmax),
                    std::max(bbox.ymax, b.ymax)};
        }
    }
    GridSpec grid;
    try {
        grid = make_fishnet(bbox, config.cell_size);
    } catch (const ValidationError &e) {
        throw EmptyInputError(std::string("empty grid: ") + e.what());
    }
    note(log, "fishnet " + std::to_string(grid.n_rows) + " rows x " + std::to_string(grid.n_cols) + " cols");

    const auto attributions = apportion_all(parcels, grid, threads);
    const auto elevation = zonal_mean_elevation(dem, grid, threads);
    const auto bfe = assign_bfe(grid, zones);
    const auto cells = build_cell_states(grid, elevation, bfe, attributions);
    note(log, std::to_string(parcels.size()) + " parcels -> " + std::to_string(attributions.size()) +
                  " cell attributions");

    const ScenarioOptions options{config.area_basis, config.cell_size * config.cell_size};
    std::vector<std::string> warnings;
    const auto results = sweep(cells, curve, config.slr_list, options, threads, &warnings);
    for (auto &w : warnings) note(log, "warning: " + w);

    OutputFiles files;
    files.emplace_back("report.csv", write_report(results));
    files.emplace_back("cells.csv", write_cell_states_csv(cells));
    for (const auto &r : results)
        files.emplace_back("flood_" + io::format_number(r.slr) + ".geojson", write_flood_geojson(r, grid));
    return files;
}

OutputFiles eda(const fs::path &table_path, std::vector<std::string> *log) {
    const auto records = load(table_path, [](const std::string &t) { return parse_attribute_table(t); });
    const EdaOutcome outcome = run_eda(records);
    const auto &c = outcome.report.counts;
    note(log, "stage counts: " + std::to_string(c.input) + " -> " + std::to_string(c.assessment_over_10k) + " -> " +
                  std::to_string(c.price_per_sqft_over_1) + " -> " + std::to_string(c.base_flood_positive) +
                  " -> " + std::to_string(c.area_cost_positive) + " -> " +
                  std::to_string(outcome.report.after_outliers) + " (after outliers)");

    OutputFiles files;
    files.emplace_back("eda_report.json", eda_report_json(outcome.report));
    files.emplace_back("scatter.csv", scatter_export(outcome.kept));
    return files;
}

} // namespace floodgrid
