#include <gtest/gtest.h>

#include <random>

#include "floodgrid/error.hpp"
#include "floodgrid/io/ascii_grid.hpp"
#include "support/oracles.hpp"

using namespace floodgrid;

namespace {

const char *kMinimal = "ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 98\nNODATA_value -9999\n1 2\n3 4\n";

std::string error_of(std::string_view text) {
    try {
        parse_ascii_grid(text);
    } catch (const ParseError &e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(AsciiGrid, ParsesMinimalGrid) {
    const Raster r = parse_ascii_grid(kMinimal);
    EXPECT_EQ(r.ncols, 2u);
    EXPECT_EQ(r.nrows, 2u);
    EXPECT_EQ(r.cellsize, 98.0);
    EXPECT_EQ(r.nodata_value, -9999.0);
    EXPECT_EQ(r.values, (std::vector<double>{1, 2, 3, 4}));
}

TEST(AsciiGrid, HeaderKeysAreCaseInsensitiveAndUnordered) {
    const Raster r =
        parse_ascii_grid("CELLSIZE 2\nNCOLS 1\nnRows 1\nXLLCORNER 5\nyllcorner 6\nnodata_value -1\n7.25\n");
    EXPECT_EQ(r.xllcorner, 5.0);
    EXPECT_EQ(r.yllcorner, 6.0);
    EXPECT_EQ(r.values.front(), 7.25);
}

TEST(AsciiGrid, ValueCountMismatch) {
    const std::string msg =
        error_of("ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 98\nnodata_value -9999\n1 2 3\n");
    EXPECT_NE(msg.find("value count mismatch"), std::string::npos) << msg;

    const std::string extra =
        error_of("ncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value -9999\n1\n2\n");
    EXPECT_NE(extra.find("line 8, token 1"), std::string::npos) << extra;
}

TEST(AsciiGrid, ReportsPositionOfBadToken) {
    const std::string msg =
        error_of("ncols 2\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value -9999\n1 x2\n");
    EXPECT_NE(msg.find("line 7, token 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("non-numeric"), std::string::npos) << msg;
}

TEST(AsciiGrid, MissingAndDuplicateHeaderKeys) {
    EXPECT_NE(error_of("ncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\n5\n").find("missing header key "
                                                                                             "'nodata_value'"),
              std::string::npos);
    EXPECT_NE(error_of("ncols 1\nncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value 0\n5\n")
                  .find("duplicate header key"),
              std::string::npos);
    EXPECT_NE(error_of("ncols 0\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value 0\n").find("ncols"),
              std::string::npos);
}

TEST(AsciiGrid, NodataSentinel) {
    const Raster r =
        parse_ascii_grid("ncols 2\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value -9999\n-9999 3\n");
    EXPECT_TRUE(r.is_nodata(r.at(0, 0)));
    EXPECT_FALSE(r.is_nodata(r.at(0, 1)));
}

TEST(AsciiGrid, CanonicalWriteOfMinimalGrid) {
    EXPECT_EQ(write_ascii_grid(parse_ascii_grid(kMinimal)),
              "ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 98\nnodata_value -9999\n1 2\n3 4\n");
}

TEST(AsciiGrid, NodataCellsSerializeAsHeaderValue) {
    Raster r = parse_ascii_grid("ncols 2\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value -9999.0\n"
                                "-9999.000 1.5\n");
    EXPECT_EQ(write_ascii_grid(r), "ncols 2\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value -9999\n"
                                   "-9999 1.5\n");
}

TEST(AsciiGrid, PreservesFullPrecision) {
    const Raster r = parse_ascii_grid("ncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nnodata_value -9999\n"
                                      "0.1000000000000000055511151231257827\n");
    EXPECT_EQ(r.values.front(), 0.1);
}

TEST(AsciiGrid, CellCentersAreNorthFirst) {
    const Raster r = parse_ascii_grid(kMinimal);
    EXPECT_EQ(r.cell_center(0, 0).x, 49.0);
    EXPECT_EQ(r.cell_center(0, 0).y, 147.0);
    EXPECT_EQ(r.cell_center(1, 1).y, 49.0);
}

// parse(write(r)) == r and write is a fixed point, over fuzzed rasters.
TEST(AsciiGridProperty, RoundTripIsIdentity) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const Raster r = floodgrid::testing::random_raster(rng);
        const std::string text = write_ascii_grid(r);
        const Raster back = parse_ascii_grid(text);
        ASSERT_EQ(back, r) << text;
        ASSERT_EQ(write_ascii_grid(back), text);
    }
}
