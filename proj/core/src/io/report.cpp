#include "floodgrid/io/report.hpp"

#include "floodgrid/error.hpp"
#include "floodgrid/io/text.hpp"

namespace floodgrid {

std::string scenario_label(double slr) {
    if (slr == 0.0) return "base";
    return "slr_" + io::format_number(slr) + "ft";
}

std::string write_report(std::span<const ScenarioResult> results) {
    if (results.empty()) throw ValidationError("report needs at least one scenario");
    for (std::size_t k = 1; k < results.size(); ++k)
        if (!(results[k].slr > results[k - 1].slr)) throw ValidationError("scenarios must be ascending");

    auto pct = [](const std::optional<double> &v) { return v ? io::format_fixed2(*v * 100.0) : std::string(); };

    std::string out = "scenario,total_flooding_usd,total_area_flooded_sqft,cost_pct_delta,area_pct_delta\n";
    for (const auto &r : results) {
        out += scenario_label(r.slr) + "," + io::format_fixed2(r.total_damage) + "," +
               io::format_number(r.total_flooded_area) + "," + pct(r.cost_pct_delta) + "," +
               pct(r.area_pct_delta) + "\n";
    }
    return out;
}

} // namespace floodgrid
