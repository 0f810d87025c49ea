#include <gtest/gtest.h>

#include <random>

#include "floodgrid/terrain.hpp"
#include "support/oracles.hpp"

using namespace floodgrid;
using floodgrid::testing::uniform;

namespace {

Raster constant_raster(std::size_t ncols, std::size_t nrows, double cellsize, double v) {
    Raster r;
    r.ncols = ncols;
    r.nrows = nrows;
    r.cellsize = cellsize;
    r.values.assign(ncols * nrows, v);
    return r;
}

BfeZone zone(Ring outer, double bfe) { return {{std::move(outer), {}}, bfe}; }

} // namespace

TEST(Zonal, ConstantField) {
    const Raster dem = constant_raster(49, 49, 2, 7);
    const GridSpec g{0, 0, 98, 1, 1};
    EXPECT_EQ(*zonal_mean_elevation(dem, g)[CellIndex(0, 0)], 7.0);

    const GridSpec wide{0, 0, 30, 4, 4};
    const auto m = zonal_mean_elevation(dem, wide);
    for (const auto &v : m.data) EXPECT_EQ(*v, 7.0);
}

TEST(Zonal, ArithmeticMeanOfFourPixels) {
    Raster dem = constant_raster(2, 2, 2, 0);
    dem.values = {2, 4, 6, 8};
    EXPECT_EQ(*zonal_mean_elevation(dem, GridSpec{0, 0, 98, 1, 1})[CellIndex(0, 0)], 5.0);
}

TEST(Zonal, NodataExcludedAndEmptyCellsAbsent) {
    Raster dem = constant_raster(2, 1, 10, 0);
    dem.values = {-9999, 3};
    const auto m = zonal_mean_elevation(dem, GridSpec{0, 0, 10, 2, 1});
    EXPECT_FALSE(m[CellIndex(0, 0)].has_value());
    EXPECT_EQ(*m[CellIndex(0, 1)], 3.0);

    const auto disjoint = zonal_mean_elevation(dem, GridSpec{1000, 1000, 10, 2, 2});
    for (const auto &v : disjoint.data) EXPECT_FALSE(v.has_value());
}

TEST(ZonalProperty, MatchesBruteForceExactlyAndStaysInRange) {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        Raster dem = constant_raster(5 + rng() % 40, 5 + rng() % 40, uniform(rng, 0.5, 5), 0);
        dem.xllcorner = uniform(rng, -50, 50);
        dem.yllcorner = uniform(rng, -50, 50);
        for (auto &v : dem.values) v = (rng() % 10 == 0) ? dem.nodata_value : uniform(rng, -10, 40);
        const GridSpec g{uniform(rng, -60, 40), uniform(rng, -60, 40), uniform(rng, 3, 30),
                         1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 8)};
        const auto expected = floodgrid::testing::brute_force_zonal(dem, g);
        for (unsigned threads : {1u, 3u}) {
            const auto got = zonal_mean_elevation(dem, g, threads);
            ASSERT_EQ(got.data.size(), expected.size());
            for (std::size_t k = 0; k < expected.size(); ++k) {
                ASSERT_EQ(got.data[k].has_value(), expected[k].has_value()) << k;
                if (expected[k]) EXPECT_EQ(*got.data[k], *expected[k]);
            }
        }
    }
}

TEST(Bfe, CentroidRule) {
    const GridSpec g{0, 0, 10, 2, 2};
    const auto all = assign_bfe(g, std::vector<BfeZone>{zone({{-1, -1}, {21, -1}, {21, 21}, {-1, 21}}, 9)});
    for (const auto &v : all.data) EXPECT_EQ(*v, 9.0);

    // Covers only the left column's centroids.
    const auto left = assign_bfe(g, std::vector<BfeZone>{zone({{0, 0}, {8, 0}, {8, 20}, {0, 20}}, 4)});
    EXPECT_EQ(*left[CellIndex(0, 0)], 4.0);
    EXPECT_EQ(*left[CellIndex(1, 0)], 4.0);
    EXPECT_FALSE(left[CellIndex(0, 1)].has_value());
    EXPECT_FALSE(left[CellIndex(1, 1)].has_value());
}

TEST(Bfe, FirstZoneWins) {
    const GridSpec g{0, 0, 10, 1, 1};
    const auto m = assign_bfe(g, std::vector<BfeZone>{zone({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, 3),
                                                      zone({{-5, -5}, {15, -5}, {15, 15}, {-5, 15}}, 8)});
    EXPECT_EQ(*m[CellIndex(0, 0)], 3.0);
}

TEST(FloodDepth, SignConvention) {
    EXPECT_EQ(flood_depth(10, 0, 7), 3.0);
    EXPECT_EQ(flood_depth(10, 0, 12), -2.0);
    EXPECT_EQ(flood_depth(10, 1, 10.5), 0.5);
}

TEST(FloodDepthProperty, UnitSlopeInSeaLevel) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10000; ++k) {
        // Values on a 1/64 ft lattice are exact in binary, so the step is
        // exactly one foot.
        const double bfe = static_cast<double>(static_cast<int>(rng() % 12800) - 6400) / 64.0;
        const double elev = static_cast<double>(static_cast<int>(rng() % 12800) - 6400) / 64.0;
        const double s = static_cast<double>(rng() % 10);
        EXPECT_EQ(flood_depth(bfe, s + 1, elev) - flood_depth(bfe, s, elev), 1.0);
        // Arbitrary reals: unit slope up to rounding.
        const double b2 = uniform(rng, -50, 50), e2 = uniform(rng, -50, 50), s2 = uniform(rng, 0, 10);
        EXPECT_NEAR(flood_depth(b2, s2 + 1, e2) - flood_depth(b2, s2, e2), 1.0, 1e-12);
    }
}

TEST(CellStates, SumsAttributionsPerCell) {
    const GridSpec g{0, 0, 10, 2, 1};
    CellMap<std::optional<double>> elev(g), bfe(g);
    elev[CellIndex(0, 0)] = 1.0;
    bfe[CellIndex(0, 1)] = 2.0;
    const std::vector<CellAttribution> attrs{{{0, 0}, "a", 10, 100}, {{0, 1}, "a", 5, 50}, {{0, 0}, "b", 1, 7}};
    const auto cells = build_cell_states(g, elev, bfe, attrs);
    ASSERT_EQ(cells.size(), 2u);
    EXPECT_EQ(cells[0].exposed_area, 11.0);
    EXPECT_EQ(cells[0].exposed_value, 107.0);
    EXPECT_EQ(*cells[0].mean_elevation, 1.0);
    EXPECT_FALSE(cells[0].bfe);
    EXPECT_EQ(write_cell_states_csv(cells),
              "row,col,mean_elevation,bfe,exposed_value,exposed_area\n0,0,1,,107.00,11\n0,1,,2,50.00,5\n");
}
