#pragma once

#include <vector>

namespace floodgrid {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point &, const Point &) = default;
};

// Ring vertices in order; closure is implicit (last vertex != first).
using Ring = std::vector<Point>;

// Axis-aligned rectangle, planar feet.
struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }

    friend bool operator==(const Rect &, const Rect &) = default;
};

struct Polygon {
    Ring outer;
    std::vector<Ring> holes;
};

Rect bounding_box(const Ring &ring);

} // namespace floodgrid
