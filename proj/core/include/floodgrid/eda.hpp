#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace floodgrid {

struct EdaRecord {
    std::string parcel_id;
    double current_assessment = 0.0; // USD
    double land_area = 0.0;          // ft²
    double shape_area = 0.0;         // ft²
    double base_flood = 0.0;         // ft
};

// Survivors after each filter stage, in the order the filters are applied.
struct StageCounts {
    std::size_t input = 0;
    std::size_t assessment_over_10k = 0;
    std::size_t price_per_sqft_over_1 = 0;
    std::size_t base_flood_positive = 0;
    std::size_t area_cost_positive = 0;
};

struct FilterResult {
    std::vector<EdaRecord> records;
    StageCounts counts;
};

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct BreuschPagan {
    double statistic = 0.0;
    bool heteroskedastic = false;
};

// Chi-square(1) 5% critical value.
inline constexpr double kBreuschPaganCritical = 3.8415;

struct EdaReport {
    StageCounts counts;
    std::size_t after_outliers = 0;
    OlsFit fit;
    BreuschPagan bp;
};

// shape_area / land_area * current_assessment. Throws ValidationError when
// land_area <= 0.
double area_cost(const EdaRecord &r);

FilterResult filter_records(std::span<const EdaRecord> records);

// Quantile by linear interpolation at 0-based position p*(n-1) of the sorted
// values.
double quantile(std::span<const double> values, double p);

// true where the value lies outside [Q1 - 1.5 IQR, Q3 + 1.5 IQR]. Throws
// ValidationError for fewer than 4 values.
std::vector<bool> tukey_outlier_mask(std::span<const double> values);

// Least squares y = intercept + slope * x. Throws ValidationError for
// mismatched lengths, fewer than 3 points or a constant regressor.
OlsFit ols_fit(std::span<const double> x, std::span<const double> y);

// Koenker's n*R^2 form: squared OLS residuals regressed on x.
BreuschPagan breusch_pagan(std::span<const double> x, std::span<const double> y);

// parcel_id,shape_area,area_cost
std::string scatter_export(std::span<const EdaRecord> records);

// Header parcel_id,current_assessment,land_area,shape_area,base_flood.
std::vector<EdaRecord> parse_attribute_table(std::string_view text);

struct EdaOutcome {
    EdaReport report;
    std::vector<EdaRecord> kept; // filtered and outlier-free
};

// Filters, drops Tukey outliers on area_cost or shape_area, then fits
// area_cost against shape_area. Throws EmptyInputError when fewer than 3
// records survive the filters.
EdaOutcome run_eda(std::span<const EdaRecord> records);

std::string eda_report_json(const EdaReport &report);

} // namespace floodgrid
