#include <gtest/gtest.h>

#include <random>

#include "floodgrid/damage.hpp"
#include "support/oracles.hpp"

using namespace floodgrid;
using floodgrid::testing::uniform;

namespace {

CellState exposed(double value) {
    CellState s;
    s.exposed_value = value;
    return s;
}

DamageCurve random_curve(std::mt19937_64 &rng) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<CurvePoint> pts;
    double d = uniform(rng, -2, 1), f = uniform(rng, 0, 0.3);
    for (int k = 0; k < n; ++k) {
        pts.push_back({d, f});
        d += uniform(rng, 0.01, 4);
        f = std::min(1.0, f + uniform(rng, 0, 0.4));
    }
    return DamageCurve(pts);
}

} // namespace

TEST(EvaluateCurve, InterpolatesAndClamps) {
    const DamageCurve c({{0, 0}, {10, 1}});
    EXPECT_EQ(evaluate_curve(c, 5), 0.5);
    EXPECT_EQ(evaluate_curve(c, -3), 0.0);
    EXPECT_EQ(evaluate_curve(c, 99), 1.0);
    EXPECT_EQ(evaluate_curve(c, 10), 1.0);
}

TEST(CellDamage, Examples) {
    const DamageCurve unit({{0, 0}, {10, 1}});
    EXPECT_EQ(cell_damage(exposed(1e6), -1, unit), 0.0);
    EXPECT_EQ(cell_damage(exposed(1e6), 0, unit), 0.0);
    EXPECT_EQ(cell_damage(exposed(80000), 12, unit), 80000.0);
    // 2 ft on a 0.6-at-4-ft ramp: 0.5 * 0.6 * 100000.
    EXPECT_DOUBLE_EQ(cell_damage(exposed(100000), 2, DamageCurve({{0, 0}, {4, 0.6}})), 30000.0);
}

TEST(CellDamage, NegativeCurveDepthsStillZeroWhenDry) {
    const DamageCurve c({{-5, 0.2}, {5, 0.8}});
    EXPECT_EQ(cell_damage(exposed(100), -0.5, c), 0.0);
    EXPECT_DOUBLE_EQ(cell_damage(exposed(100), 0.5, c), 53.0);
}

TEST(DamageProperty, BoundedMonotoneAndHomogeneous) {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 10000; ++trial) {
        const DamageCurve curve = random_curve(rng);
        const double value = uniform(rng, 0, 1e7);
        const double d1 = uniform(rng, -5, 25);
        const double d2 = d1 + uniform(rng, 0, 5);
        const double c1 = cell_damage(exposed(value), d1, curve);
        const double c2 = cell_damage(exposed(value), d2, curve);
        ASSERT_GE(c1, 0.0);
        ASSERT_LE(c1, value);
        ASSERT_LE(c1, c2);
        if (d1 <= 0) ASSERT_EQ(c1, 0.0);
        // Doubling is exact in binary floating point and the cap (fraction <= 1)
        // does not change the ratio.
        ASSERT_EQ(cell_damage(exposed(2 * value), d1, curve), 2 * c1);
    }
}

TEST(DamageProperty, MonotoneAcrossBreakpointJoins) {
    const DamageCurve c({{0, 0.1}, {0.3, 0.3}, {0.7, 0.7}, {1.1, 0.9}});
    double prev = 0.0;
    for (int k = 0; k <= 20000; ++k) {
        const double f = evaluate_curve(c, k * 1.2 / 20000);
        ASSERT_GE(f, prev);
        prev = f;
    }
}
