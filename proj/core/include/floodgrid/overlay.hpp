#pragma once

#include <span>
#include <string>
#include <vector>

#include "floodgrid/geometry.hpp"
#include "floodgrid/grid.hpp"
#include "floodgrid/io/geojson.hpp"

namespace floodgrid {

// Clipped areas below this are treated as slivers and dropped.
inline constexpr double kSliverArea = 1e-6; // ft²

// One parcel's slice of one fishnet cell.
struct CellAttribution {
    CellIndex cell;
    std::string parcel_id;
    double clipped_area = 0.0;      // ft²
    double apportioned_value = 0.0; // USD
};

// Signed area, positive for counter-clockwise rings. Throws ValidationError
// for fewer than 3 vertices.
double shoelace_area(std::span<const Point> ring);

// Unsigned area of a possibly degenerate clip output (0 for < 3 vertices).
double ring_area(std::span<const Point> ring);

// Outer area minus hole areas.
double polygon_area(const Polygon &poly);

// Sutherland-Hodgman against the four half-planes of `rect`. May return an
// empty ring or a zero-area sliver.
Ring clip_ring_to_rect(std::span<const Point> ring, const Rect &rect);

// Even-odd rule over all rings, so points inside holes are outside.
bool point_in_polygon(Point p, const Polygon &poly);
bool point_in_rings(Point p, std::span<const Ring> rings);

// Area-weighted split of a parcel's assessment across the cells it overlaps.
// The fraction denominator is the parcel's geometric area; area outside the
// grid is dropped. Output is in row-major cell order.
std::vector<CellAttribution> apportion(const Parcel &parcel, const GridSpec &g);

// Apportions every parcel (in parallel when threads > 1) and returns all
// attributions sorted by (parcel_id, cell).
std::vector<CellAttribution> apportion_all(std::span<const Parcel> parcels, const GridSpec &g,
                                           unsigned threads = 1);

// row,col,parcel_id,clipped_area,apportioned_value
std::string write_attributions_csv(std::span<const CellAttribution> attributions);

} // namespace floodgrid
