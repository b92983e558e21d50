#include "ffsim/geometry.hpp"

#include <algorithm>

namespace ffsim {

double polygon_area(const Polygon& poly) {
    if (poly.size() < 3) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % poly.size()];
        acc += a.cross(b);
    }
    return std::abs(acc) * 0.5;
}

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const double v = (b - a).cross(c - a);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return orientation(a, b, p) == 0 &&
           std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool polygon_is_simple(const Polygon& poly) {
    const size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        if (distance_sq(poly[i], poly[(i + 1) % n]) == 0.0) return false;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share an endpoint by construction).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(poly[i], poly[(i + 1) % n],
                                   poly[j], poly[(j + 1) % n])) {
                return false;
            }
        }
    }
    return true;
}

bool point_in_polygon(Vec2 p, const Polygon& poly) {
    const size_t n = poly.size();
    if (n < 3) return false;
    // Boundary points count as outside.
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(poly[i], poly[(i + 1) % n], p)) return false;
    }
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xi = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < xi) inside = !inside;
        }
    }
    return inside;
}

double distance_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len_sq = ab.length_sq();
    if (len_sq == 0.0) return distance(p, a);
    const double t = std::clamp((p - a).dot(ab) / len_sq, 0.0, 1.0);
    return distance(p, a + ab * t);
}

namespace {

// Clip against one half-plane keep(p) with boundary intersection cross(s, e).
template <typename Keep, typename Cross>
Polygon clip_half_plane(const Polygon& in, Keep keep, Cross cross) {
    Polygon out;
    const size_t n = in.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 cur = in[i];
        const Vec2 prev = in[(i + n - 1) % n];
        const bool cur_in = keep(cur);
        const bool prev_in = keep(prev);
        if (cur_in) {
            if (!prev_in) out.push_back(cross(prev, cur));
            out.push_back(cur);
        } else if (prev_in) {
            out.push_back(cross(prev, cur));
        }
    }
    return out;
}

} // namespace

Polygon clip_polygon_to_rect(const Polygon& poly, const Rect& rect) {
    Polygon p = poly;
    const double x0 = rect.x, x1 = rect.x1(), y0 = rect.y, y1 = rect.y1();
    auto lerp_x = [](Vec2 s, Vec2 e, double x) {
        const double t = (x - s.x) / (e.x - s.x);
        return Vec2{x, s.y + t * (e.y - s.y)};
    };
    auto lerp_y = [](Vec2 s, Vec2 e, double y) {
        const double t = (y - s.y) / (e.y - s.y);
        return Vec2{s.x + t * (e.x - s.x), y};
    };
    p = clip_half_plane(p, [&](Vec2 v) { return v.x >= x0; },
                        [&](Vec2 s, Vec2 e) { return lerp_x(s, e, x0); });
    if (p.empty()) return p;
    p = clip_half_plane(p, [&](Vec2 v) { return v.x <= x1; },
                        [&](Vec2 s, Vec2 e) { return lerp_x(s, e, x1); });
    if (p.empty()) return p;
    p = clip_half_plane(p, [&](Vec2 v) { return v.y >= y0; },
                        [&](Vec2 s, Vec2 e) { return lerp_y(s, e, y0); });
    if (p.empty()) return p;
    p = clip_half_plane(p, [&](Vec2 v) { return v.y <= y1; },
                        [&](Vec2 s, Vec2 e) { return lerp_y(s, e, y1); });
    return p;
}

double polygon_rect_overlap_area(const Polygon& poly, const Rect& rect) {
    const Polygon clipped = clip_polygon_to_rect(poly, rect);
    return polygon_area(clipped);
}

} // namespace ffsim
