#include "floodgrid/eda.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <json.hpp>

#include "floodgrid/error.hpp"
#include "floodgrid/io/text.hpp"

namespace floodgrid {
namespace {

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

struct Moments {
    double mean_x = 0.0, mean_y = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
};

Moments moments(std::span<const double> x, std::span<const double> y) {
    Moments m;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        m.mean_x += x[i];
        m.mean_y += y[i];
    }
    m.mean_x /= n;
    m.mean_y /= n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - m.mean_x, dy = y[i] - m.mean_y;
        m.sxx += dx * dx;
        m.sxy += dx * dy;
        m.syy += dy * dy;
    }
    return m;
}

} // namespace

double area_cost(const EdaRecord &r) {
    if (!(r.land_area > 0.0)) throw ValidationError("undefined area cost for '" + r.parcel_id + "': land_area <= 0");
    return r.shape_area / r.land_area * r.current_assessment;
}

FilterResult filter_records(std::span<const EdaRecord> records) {
    FilterResult out;
    out.counts.input = records.size();
    for (const auto &r : records) {
        if (!(r.current_assessment > 10'000.0)) continue;
        ++out.counts.assessment_over_10k;
        if (!(r.land_area > 0.0) || !(r.current_assessment / r.land_area > 1.0)) continue;
        ++out.counts.price_per_sqft_over_1;
        if (!(r.base_flood > 0.0)) continue;
        ++out.counts.base_flood_positive;
        if (!(area_cost(r) > 0.0)) continue;
        ++out.counts.area_cost_positive;
        out.records.push_back(r);
    }
    return out;
}

double quantile(std::span<const double> values, double p) {
    if (values.empty()) throw ValidationError("quantile of an empty sequence");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= v.size()) return v.back();
    const double frac = pos - static_cast<double>(lo);
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

std::vector<bool> tukey_outlier_mask(std::span<const double> values) {
    if (values.size() < 4) throw ValidationError("outlier test needs at least 4 values");
    const double q1 = quantile(values, 0.25);
    const double q3 = quantile(values, 0.75);
    const double iqr = q3 - q1;
    const double lo = q1 - 1.5 * iqr;
    const double hi = q3 + 1.5 * iqr;
    std::vector<bool> mask(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) mask[i] = values[i] < lo || values[i] > hi;
    return mask;
}

OlsFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("ols: x and y lengths differ");
    if (x.size() < 3) throw ValidationError("ols: need at least 3 points");
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; }))
        throw ValidationError("degenerate regressor: x is constant");

    const Moments m = moments(x, y);
    OlsFit fit;
    fit.slope = m.sxy / m.sxx;
    fit.intercept = m.mean_y - fit.slope * m.mean_x;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += e * e;
    }
    if (m.syy == 0.0) {
        if (ss_res != 0.0) throw ValidationError("ols: zero total variance with nonzero residuals");
        fit.r_squared = 1.0;
    } else {
        fit.r_squared = std::clamp(1.0 - ss_res / m.syy, 0.0, 1.0);
    }
    return fit;
}

BreuschPagan breusch_pagan(std::span<const double> x, std::span<const double> y) {
    const OlsFit fit = ols_fit(x, y);
    std::vector<double> e2(x.size());
    double ss_res = 0.0, ss_tot = 0.0, mean_y = 0.0;
    for (double v : y) mean_y += v;
    mean_y /= static_cast<double>(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        e2[i] = e * e;
        ss_res += e2[i];
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }

    BreuschPagan bp;
    // Residuals at rounding-noise level carry no variance structure.
    if (ss_res == 0.0 || ss_res <= 1e-20 * ss_tot) return bp;
    if (std::all_of(e2.begin(), e2.end(), [&](double v) { return v == e2[0]; })) return bp;

    const OlsFit aux = ols_fit(x, e2);
    bp.statistic = static_cast<double>(x.size()) * aux.r_squared;
    bp.heteroskedastic = bp.statistic > kBreuschPaganCritical;
    return bp;
}

std::string scatter_export(std::span<const EdaRecord> records) {
    std::string out = "parcel_id,shape_area,area_cost\n";
    for (const auto &r : records)
        out += r.parcel_id + "," + io::format_number(r.shape_area) + "," + io::format_number(area_cost(r)) + "\n";
    return out;
}

std::vector<EdaRecord> parse_attribute_table(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty() || lines[0].empty()) throw ParseError("line 1: missing header");

    static constexpr std::array<std::string_view, 5> kColumns{"parcel_id", "current_assessment", "land_area",
                                                              "shape_area", "base_flood"};
    const auto header = split_csv_line(lines[0], 1);
    std::array<std::size_t, 5> pos{};
    for (std::size_t k = 0; k < kColumns.size(); ++k) {
        const auto it = std::find(header.begin(), header.end(), kColumns[k]);
        if (it == header.end()) throw ParseError("line 1: missing column '" + std::string(kColumns[k]) + "'");
        pos[k] = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<EdaRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::size_t line_no = i + 1;
        const auto fields = split_csv_line(lines[i], line_no);
        if (fields.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                             " fields, found " + std::to_string(fields.size()));
        auto number = [&](std::size_t k) {
            double v = 0.0;
            if (!io::parse_double(fields[pos[k]], v))
                throw ParseError("line " + std::to_string(line_no) + ", column '" + std::string(kColumns[k]) +
                                 "': non-numeric value '" + fields[pos[k]] + "'");
            return v;
        };
        records.push_back({fields[pos[0]], number(1), number(2), number(3), number(4)});
    }
    return records;
}

EdaOutcome run_eda(std::span<const EdaRecord> records) {
    FilterResult filtered = filter_records(records);
    EdaOutcome out;
    out.report.counts = filtered.counts;
    if (filtered.records.size() < 3)
        throw EmptyInputError("only " + std::to_string(filtered.records.size()) +
                              " records survive filtering; regression needs 3");

    std::vector<EdaRecord> kept = std::move(filtered.records);
    if (kept.size() >= 4) {
        std::vector<double> cost, shape;
        for (const auto &r : kept) {
            cost.push_back(area_cost(r));
            shape.push_back(r.shape_area);
        }
        const auto cost_mask = tukey_outlier_mask(cost);
        const auto shape_mask = tukey_outlier_mask(shape);
        std::vector<EdaRecord> inliers;
        for (std::size_t i = 0; i < kept.size(); ++i)
            if (!cost_mask[i] && !shape_mask[i]) inliers.push_back(kept[i]);
        kept = std::move(inliers);
    }
    out.report.after_outliers = kept.size();
    if (kept.size() < 3)
        throw EmptyInputError("only " + std::to_string(kept.size()) + " records remain after outlier removal");

    std::vector<double> x, y;
    for (const auto &r : kept) {
        x.push_back(r.shape_area);
        y.push_back(area_cost(r));
    }
    try {
        out.report.fit = ols_fit(x, y);
        out.report.bp = breusch_pagan(x, y);
    } catch (const ValidationError &e) {
        throw EmptyInputError(std::string("regression impossible: ") + e.what());
    }
    out.kept = std::move(kept);
    return out;
}

std::string eda_report_json(const EdaReport &report) {
    nlohmann::ordered_json j;
    j["counts"] = {{"input", report.counts.input},
                   {"assessment_over_10k", report.counts.assessment_over_10k},
                   {"price_per_sqft_over_1", report.counts.price_per_sqft_over_1},
                   {"base_flood_positive", report.counts.base_flood_positive},
                   {"area_cost_positive", report.counts.area_cost_positive},
                   {"after_outliers", report.after_outliers}};
    j["slope"] = report.fit.slope;
    j["intercept"] = report.fit.intercept;
    j["r_squared"] = report.fit.r_squared;
    j["bp_statistic"] = report.bp.statistic;
    j["heteroskedastic"] = report.bp.heteroskedastic;
    return j.dump(2) + "\n";
}

} // namespace floodgrid
