#pragma once

#include <cmath>
#include <vector>

namespace ffsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    double length() const { return std::hypot(x, y); }
    constexpr double length_sq() const { return x * x + y * y; }
    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }

    Vec2 normalized() const {
        const double len = length();
        return len > 0.0 ? Vec2{x / len, y / len} : Vec2{};
    }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).length(); }
inline constexpr double distance_sq(Vec2 a, Vec2 b) { return (a - b).length_sq(); }

/// Axis-aligned rectangle, origin at the min corner.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    constexpr double x1() const { return x + w; }
    constexpr double y1() const { return y + h; }
    constexpr Vec2 center() const { return {x + w * 0.5, y + h * 0.5}; }
    constexpr bool contains(Vec2 p) const {
        return p.x >= x && p.x <= x1() && p.y >= y && p.y <= y1();
    }
    constexpr bool contains_rect(const Rect& o) const {
        return o.x >= x && o.y >= y && o.x1() <= x1() && o.y1() <= y1();
    }
};

using Polygon = std::vector<Vec2>;

/// Unsigned area of a simple polygon (shoelace).
double polygon_area(const Polygon& poly);

/// True when no two non-adjacent edges intersect and no edge is degenerate.
bool polygon_is_simple(const Polygon& poly);

/// Strict interior test (boundary points are outside). Crossing-number rule.
bool point_in_polygon(Vec2 p, const Polygon& poly);

/// Euclidean distance from a point to a segment.
double distance_point_segment(Vec2 p, Vec2 a, Vec2 b);

/// Clip a polygon against an axis-aligned rectangle (Sutherland-Hodgman).
Polygon clip_polygon_to_rect(const Polygon& poly, const Rect& rect);

/// Area of the intersection between a simple polygon and a rectangle.
/// Exact for convex polygons; used for the grid blocking rule where the
/// scenario obstacles are convex or rectangular.
double polygon_rect_overlap_area(const Polygon& poly, const Rect& rect);

/// Proper or improper intersection of closed segments [a,b] and [c,d].
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

} // namespace ffsim
