#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "floodgrid/io/ascii_grid.hpp"
#include "floodgrid/overlay.hpp"
#include "floodgrid/terrain.hpp"

using namespace floodgrid;

namespace {

Raster plane(std::size_t ncols, std::size_t nrows) {
    Raster r;
    r.ncols = ncols;
    r.nrows = nrows;
    r.cellsize = 2.0;
    r.nodata_value = -9999;
    r.values.resize(ncols * nrows);
    for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] = 0.02 * (2.0 * static_cast<double>(k % ncols) + 1.0);
    return r;
}

std::vector<Parcel> parcels(int n, double extent) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(0, extent - 150), size(20, 150);
    std::vector<Parcel> out;
    for (int k = 0; k < n; ++k) {
        const double x = pos(rng), y = pos(rng), w = size(rng), h = size(rng);
        Parcel p;
        p.parcel_id = p.group_id = std::to_string(k);
        p.shape.outer = {{x, y}, {x + w, y}, {x + w, y + h}, {x + w / 2, y + 1.5 * h}, {x, y + h}};
        p.current_assessment = 1e5;
        out.push_back(std::move(p));
    }
    return out;
}

void BM_Apportion(benchmark::State &state) {
    const auto ps = parcels(static_cast<int>(state.range(0)), 4900);
    const GridSpec g = make_fishnet({0, 0, 4900, 4900}, 98);
    for (auto _ : state) benchmark::DoNotOptimize(apportion_all(ps, g, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Apportion)->Arg(100)->Arg(1000);

void BM_ZonalMean(benchmark::State &state) {
    const Raster dem = plane(2450, 490);
    const GridSpec g = make_fishnet({0, 0, 4900, 980}, 98);
    for (auto _ : state) benchmark::DoNotOptimize(zonal_mean_elevation(dem, g, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(dem.values.size()));
}
BENCHMARK(BM_ZonalMean);

void BM_AsciiGridParse(benchmark::State &state) {
    const std::string text = write_ascii_grid(plane(1000, 500));
    for (auto _ : state) benchmark::DoNotOptimize(parse_ascii_grid(text));
    state.SetBytesProcessed(state.iterations() * static_cast<long>(text.size()));
}
BENCHMARK(BM_AsciiGridParse);

} // namespace

BENCHMARK_MAIN();
