#include "floodgrid/io/geojson.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "floodgrid/error.hpp"
#include "floodgrid/overlay.hpp"

namespace floodgrid {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::string feature_ctx(std::size_t k) { return "feature " + std::to_string(k); }

const json &features_of(const json &doc) {
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection")
        throw ParseError("expected a GeoJSON FeatureCollection");
    const auto it = doc.find("features");
    if (it == doc.end() || !it->is_array()) throw ParseError("FeatureCollection has no 'features' array");
    return *it;
}

Ring parse_ring(const json &j, const std::string &ctx) {
    if (!j.is_array()) throw ParseError(ctx + ": ring must be an array of positions");
    Ring ring;
    ring.reserve(j.size());
    for (const auto &pos : j) {
        if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number())
            throw ParseError(ctx + ": position must be [x, y]");
        const Point p{pos[0].get<double>(), pos[1].get<double>()};
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParseError(ctx + ": non-finite coordinate");
        ring.push_back(p);
    }
    // GeoJSON repeats the first position; closure is implicit here.
    if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3) throw ParseError(ctx + ": ring with < 3 vertices");
    return ring;
}

Polygon parse_polygon(const json &rings, const std::string &ctx) {
    if (!rings.is_array() || rings.empty()) throw ParseError(ctx + ": polygon needs at least one ring");
    Polygon poly;
    poly.outer = parse_ring(rings[0], ctx);
    for (std::size_t k = 1; k < rings.size(); ++k) poly.holes.push_back(parse_ring(rings[k], ctx));

    double hole_area = 0.0;
    for (const auto &h : poly.holes) hole_area += ring_area(h);
    if (!(ring_area(poly.outer) > hole_area))
        throw ParseError(ctx + ": outer ring area must exceed the hole area");
    return poly;
}

std::vector<Polygon> parse_geometry(const json &feature, const std::string &ctx) {
    const auto g = feature.find("geometry");
    if (g == feature.end() || !g->is_object()) throw ParseError(ctx + ": missing geometry");
    const std::string type = g->value("type", "");
    const auto coords = g->find("coordinates");
    if (type == "Polygon") {
        if (coords == g->end()) throw ParseError(ctx + ": missing coordinates");
        return {parse_polygon(*coords, ctx)};
    }
    if (type == "MultiPolygon") {
        if (coords == g->end() || !coords->is_array() || coords->empty())
            throw ParseError(ctx + ": MultiPolygon needs at least one member");
        std::vector<Polygon> out;
        for (std::size_t m = 0; m < coords->size(); ++m)
            out.push_back(parse_polygon((*coords)[m], ctx + " member " + std::to_string(m)));
        return out;
    }
    throw ParseError(ctx + ": non-polygon geometry '" + type + "'");
}

const json &properties_of(const json &feature, const std::string &ctx) {
    const auto p = feature.find("properties");
    if (p == feature.end() || !p->is_object()) throw ParseError(ctx + ": missing properties");
    return *p;
}

double number_property(const json &props, const char *key, const std::string &ctx) {
    const auto it = props.find(key);
    if (it == props.end() || it->is_null())
        throw ParseError(ctx + ": missing required property '" + key + "'");
    if (!it->is_number()) throw ParseError(ctx + ": property '" + std::string(key) + "' must be a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) throw ParseError(ctx + ": property '" + std::string(key) + "' is not finite");
    return v;
}

std::string id_property(const json &props, const std::string &ctx) {
    const auto it = props.find("parcel_id");
    if (it == props.end() || it->is_null()) throw ParseError(ctx + ": missing required property 'parcel_id'");
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return it->dump();
    throw ParseError(ctx + ": property 'parcel_id' must be a string or integer");
}

} // namespace

std::vector<Parcel> parse_parcels(std::string_view text) {
    const json doc = parse_json(text);
    const json &features = features_of(doc);

    std::vector<Parcel> parcels;
    for (std::size_t k = 0; k < features.size(); ++k) {
        const std::string ctx = feature_ctx(k);
        const json &f = features[k];
        if (!f.is_object()) throw ParseError(ctx + ": feature must be an object");
        const json &props = properties_of(f, ctx);
        const std::string id = id_property(props, ctx);
        const double assessment = number_property(props, "current_assessment", ctx);
        const double land_area = number_property(props, "land_area", ctx);
        double base_flood = 0.0;
        if (auto it = props.find("base_flood"); it != props.end() && !it->is_null())
            base_flood = number_property(props, "base_flood", ctx);
        if (assessment < 0.0) throw ParseError(ctx + ": current_assessment must be >= 0");
        if (land_area < 0.0) throw ParseError(ctx + ": land_area must be >= 0");

        std::vector<Polygon> members = parse_geometry(f, ctx);
        const bool multi = f["geometry"]["type"] == "MultiPolygon";
        if (!multi) {
            parcels.push_back({id, std::move(members.front()), assessment, land_area, base_flood, id});
            continue;
        }

        double total = 0.0;
        std::vector<double> areas;
        for (const auto &m : members) {
            areas.push_back(polygon_area(m));
            total += areas.back();
        }
        for (std::size_t m = 0; m < members.size(); ++m) {
            const double share = areas[m] / total;
            parcels.push_back({id + "#" + std::to_string(m), std::move(members[m]), assessment * share,
                               land_area * share, base_flood, id});
        }
    }
    return parcels;
}

std::vector<BfeZone> parse_bfe_zones(std::string_view text) {
    const json doc = parse_json(text);
    const json &features = features_of(doc);

    std::vector<BfeZone> zones;
    for (std::size_t k = 0; k < features.size(); ++k) {
        const std::string ctx = feature_ctx(k);
        const json &f = features[k];
        if (!f.is_object()) throw ParseError(ctx + ": feature must be an object");
        const double bfe = number_property(properties_of(f, ctx), "static_bfe", ctx);
        for (auto &poly : parse_geometry(f, ctx)) zones.push_back({std::move(poly), bfe});
    }
    return zones;
}

} // namespace floodgrid
