#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "floodgrid/geometry.hpp"

namespace floodgrid {

struct Parcel {
    std::string parcel_id;
    Polygon shape;
    double current_assessment = 0.0; // USD
    double land_area = 0.0;          // ft², as recorded
    double base_flood = 0.0;         // ft, 0 when absent

    // Feature id shared by all members of a split MultiPolygon; equal to
    // parcel_id otherwise.
    std::string group_id;
};

struct BfeZone {
    Polygon shape;
    double static_bfe = 0.0; // ft
};

// Parses a GeoJSON FeatureCollection of Polygon/MultiPolygon parcels with
// properties parcel_id, current_assessment, land_area and optional base_flood.
//
// A MultiPolygon feature with id "A" yields parcels "A#0", "A#1", ... whose
// assessment and land area are the feature's totals split by member geometric
// area, so the feature's value is conserved.
std::vector<Parcel> parse_parcels(std::string_view text);

// Same FeatureCollection subset with a required numeric static_bfe property.
// MultiPolygon members become separate zones in feature order.
std::vector<BfeZone> parse_bfe_zones(std::string_view text);

} // namespace floodgrid
