// floodgrid
//
// Grid-based coastal flood risk assessment from the command line.
//
//   floodgrid fishnet --bbox xmin,ymin,xmax,ymax --cell-size 98
//   floodgrid assess  --config run.json [--slr 0,1,2,3] [--area-basis parcel|cell]
//   floodgrid eda     --table attributes.csv --out dir
//
// Exit codes: 0 ok, 1 parse error, 2 invalid configuration or arguments,
// 3 nothing to analyse.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floodgrid/error.hpp"
#include "floodgrid/grid.hpp"
#include "floodgrid/io/text.hpp"
#include "floodgrid/parallel.hpp"
#include "floodgrid/pipeline.hpp"

namespace {

using namespace floodgrid;

enum Exit : int { kOk = 0, kParse = 1, kConfig = 2, kEmpty = 3 };

std::vector<double> parse_list(const std::string &text, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        if (!io::parse_double(item, v)) throw ConfigError(std::string(what) + ": bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void print_log(const std::vector<std::string> &log) {
    for (const auto &line : log) std::cerr << line << "\n";
}

int run_fishnet(const std::string &bbox_text, double cell_size) {
    const auto v = parse_list(bbox_text, "--bbox");
    if (v.size() != 4) throw ConfigError("--bbox needs xmin,ymin,xmax,ymax");
    try {
        std::cout << grid_to_json(make_fishnet({v[0], v[1], v[2], v[3]}, cell_size)) << "\n";
    } catch (const ValidationError &e) {
        throw ConfigError(e.what());
    }
    return kOk;
}

int run_assess(const std::string &config_path, const std::string &slr, const std::string &area_basis,
               const std::string &out_dir) {
    RunConfig config = load_run_config(config_path);
    if (!slr.empty()) config.slr_list = parse_list(slr, "--slr");
    if (!area_basis.empty()) {
        try {
            config.area_basis = parse_area_basis(area_basis);
        } catch (const ValidationError &e) {
            throw ConfigError(e.what());
        }
    }
    if (!out_dir.empty()) config.output_dir = out_dir;

    std::vector<std::string> log;
    const auto files = assess(config, default_thread_count(), &log);
    io::write_files_atomically(config.output_dir, files);
    print_log(log);
    std::cerr << "wrote " << files.size() << " files to " << config.output_dir.string() << "\n";
    return kOk;
}

int run_eda(const std::string &table, const std::string &out_dir) {
    std::vector<std::string> log;
    const auto files = eda(table, &log);
    io::write_files_atomically(out_dir, files);
    print_log(log);
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"floodgrid: grid-based coastal flood risk assessment"};
    app.require_subcommand(1);

    std::string bbox;
    double cell_size = 98.0;
    auto *fishnet = app.add_subcommand("fishnet", "Print the fishnet GridSpec covering a bbox as JSON");
    fishnet->add_option("--bbox", bbox, "xmin,ymin,xmax,ymax in feet")->required();
    fishnet->add_option("--cell-size", cell_size, "Cell size in feet")->capture_default_str();

    std::string config_path, slr, area_basis, assess_out;
    auto *assess_cmd = app.add_subcommand("assess", "Run the flood risk pipeline over SLR scenarios");
    assess_cmd->add_option("--config", config_path, "Run configuration JSON")->required();
    assess_cmd->add_option("--slr", slr, "Comma separated sea-level offsets in feet, starting at 0");
    assess_cmd->add_option("--area-basis", area_basis, "parcel or cell");
    assess_cmd->add_option("--out", assess_out, "Output directory (overrides output_dir)");

    std::string table, eda_out;
    auto *eda_cmd = app.add_subcommand("eda", "Exploratory analysis of a parcel attribute table");
    eda_cmd->add_option("--table", table, "Attribute CSV")->required();
    eda_cmd->add_option("--out", eda_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*fishnet) return run_fishnet(bbox, cell_size);
        if (*assess_cmd) return run_assess(config_path, slr, area_basis, assess_out);
        if (*eda_cmd) return run_eda(table, eda_out);
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const EmptyInputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEmpty;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
