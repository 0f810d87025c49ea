#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floodgrid/geometry.hpp"
#include "floodgrid/scenario.hpp"

namespace floodgrid {

struct RunConfig {
    std::filesystem::path dem_path;
    std::filesystem::path parcels_path;
    std::filesystem::path bfe_path;
    std::filesystem::path damage_curve_path;
    double cell_size = 98.0;
    std::vector<double> slr_list{0.0, 1.0, 2.0, 3.0};
    AreaBasis area_basis = AreaBasis::parcel;
    std::filesystem::path output_dir;
    // Study-area box; defaults to the parcel layer's bounding box.
    std::optional<Rect> bbox;

    // Throws ConfigError.
    void validate() const;
};

// Reads a JSON run configuration. Relative paths resolve against the
// directory holding the config file. Throws ParseError for malformed JSON and
// ConfigError for missing or ill-typed keys.
RunConfig load_run_config(const std::filesystem::path &path);

using OutputFiles = std::vector<std::pair<std::string, std::string>>;

// The assess pipeline up to serialisation: report.csv, cells.csv and one
// flood_<slr>.geojson per scenario. Output bytes do not depend on `threads`.
// Throws ParseError naming the offending file, ConfigError or
// EmptyInputError.
OutputFiles assess(const RunConfig &config, unsigned threads, std::vector<std::string> *log = nullptr);

// eda_report.json and scatter.csv for an attribute table file.
OutputFiles eda(const std::filesystem::path &table_path, std::vector<std::string> *log = nullptr);

} // namespace floodgrid
