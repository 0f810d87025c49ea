#include "floodgrid/overlay.hpp"

#include <algorithm>
#include <cmath>

#include "floodgrid/error.hpp"
#include "floodgrid/io/text.hpp"
#include "floodgrid/parallel.hpp"

namespace floodgrid {
namespace {

// Shoelace sum taken relative to the first vertex; keeps precision for
// projected coordinates in the millions of feet.
double signed_area_unchecked(std::span<const Point> ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    const Point o = ring[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double ax = ring[i].x - o.x, ay = ring[i].y - o.y;
        const double bx = ring[i + 1].x - o.x, by = ring[i + 1].y - o.y;
        twice += ax * by - bx * ay;
    }
    return 0.5 * twice;
}

enum class Side { left, right, bottom, top };

bool inside(const Point &p, Side side, const Rect &r) {
    switch (side) {
    case Side::left: return p.x >= r.xmin;
    case Side::right: return p.x <= r.xmax;
    case Side::bottom: return p.y >= r.ymin;
    case Side::top: return p.y <= r.ymax;
    }
    return false;
}

Point crossing(const Point &a, const Point &b, Side side, const Rect &r) {
    if (side == Side::left || side == Side::right) {
        const double x = side == Side::left ? r.xmin : r.xmax;
        const double t = (x - a.x) / (b.x - a.x);
        return {x, a.y + t * (b.y - a.y)};
    }
    const double y = side == Side::bottom ? r.ymin : r.ymax;
    const double t = (y - a.y) / (b.y - a.y);
    return {a.x + t * (b.x - a.x), y};
}

void clip_half_plane(const Ring &in, Ring &out, Side side, const Rect &r) {
    out.clear();
    const std::size_t n = in.size();
    if (n == 0) return;
    Point prev = in[n - 1];
    bool prev_in = inside(prev, side, r);
    for (const Point &cur : in) {
        const bool cur_in = inside(cur, side, r);
        if (cur_in) {
            if (!prev_in) out.push_back(crossing(prev, cur, side, r));
            out.push_back(cur);
        } else if (prev_in) {
            out.push_back(crossing(prev, cur, side, r));
        }
        prev = cur;
        prev_in = cur_in;
    }
}

// Ray cast towards +x; true when the ray crosses the ring an odd number of
// times.
bool odd_crossings(const Point &p, const Ring &ring) {
    bool odd = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point &a = ring[i];
        const Point &b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) odd = !odd;
        }
    }
    return odd;
}

} // namespace

Rect bounding_box(const Ring &ring) {
    Rect b{ring.front().x, ring.front().y, ring.front().x, ring.front().y};
    for (const auto &p : ring) {
        b.xmin = std::min(b.xmin, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.xmax = std::max(b.xmax, p.x);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

double shoelace_area(std::span<const Point> ring) {
    if (ring.size() < 3) throw ValidationError("ring needs at least 3 vertices");
    return signed_area_unchecked(ring);
}

double ring_area(std::span<const Point> ring) { return std::abs(signed_area_unchecked(ring)); }

double polygon_area(const Polygon &poly) {
    double a = ring_area(poly.outer);
    for (const auto &h : poly.holes) a -= ring_area(h);
    return a;
}

Ring clip_ring_to_rect(std::span<const Point> ring, const Rect &rect) {
    Ring a(ring.begin(), ring.end());
    Ring b;
    b.reserve(a.size() + 4);
    for (Side side : {Side::left, Side::right, Side::bottom, Side::top}) {
        clip_half_plane(a, b, side, rect);
        std::swap(a, b);
        if (a.empty()) break;
    }
    return a;
}

bool point_in_rings(Point p, std::span<const Ring> rings) {
    bool in = false;
    for (const auto &ring : rings) in ^= odd_crossings(p, ring);
    return in;
}

bool point_in_polygon(Point p, const Polygon &poly) {
    bool in = odd_crossings(p, poly.outer);
    for (const auto &h : poly.holes) in ^= odd_crossings(p, h);
    return in;
}

std::vector<CellAttribution> apportion(const Parcel &parcel, const GridSpec &g) {
    const double total = polygon_area(parcel.shape);
    if (!(total > 0.0)) throw ValidationError("degenerate parcel '" + parcel.parcel_id + "'");

    const Rect box = bounding_box(parcel.shape.outer);
    const auto cols = col_span(g, box.xmin, box.xmax);
    const auto rows = row_span(g, box.ymin, box.ymax);
    std::vector<CellAttribution> out;
    if (!cols || !rows) return out;

    for (int row = rows->first; row <= rows->second; ++row) {
        for (int col = cols->first; col <= cols->second; ++col) {
            const Rect cell = cell_rect(g, row, col);
            double area = ring_area(clip_ring_to_rect(parcel.shape.outer, cell));
            if (area < kSliverArea) continue;
            for (const auto &h : parcel.shape.holes) area -= ring_area(clip_ring_to_rect(h, cell));
            area = std::max(area, 0.0);
            if (area < kSliverArea) continue;
            out.push_back({{row, col}, parcel.parcel_id, area, parcel.current_assessment * (area / total)});
        }
    }
    return out;
}

std::vector<CellAttribution> apportion_all(std::span<const Parcel> parcels, const GridSpec &g,
                                           unsigned threads) {
    std::vector<std::vector<CellAttribution>> per_parcel(parcels.size());
    parallel_for(parcels.size(), threads, [&](std::size_t i) { per_parcel[i] = apportion(parcels[i], g); });

    std::vector<CellAttribution> all;
    for (auto &v : per_parcel) std::move(v.begin(), v.end(), std::back_inserter(all));
    std::stable_sort(all.begin(), all.end(), [](const CellAttribution &a, const CellAttribution &b) {
        if (a.parcel_id != b.parcel_id) return a.parcel_id < b.parcel_id;
        return a.cell < b.cell;
    });
    return all;
}

std::string write_attributions_csv(std::span<const CellAttribution> attributions) {
    std::string out = "row,col,parcel_id,clipped_area,apportioned_value\n";
    for (const auto &a : attributions) {
        out += std::to_string(a.cell.row) + "," + std::to_string(a.cell.col) + "," + a.parcel_id + "," +
               io::format_number(a.clipped_area) + "," + io::format_number(a.apportioned_value) + "\n";
    }
    return out;
}

} // namespace floodgrid
