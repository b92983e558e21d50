#include "ffsim/pathplan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "ffsim/error.hpp"

namespace ffsim {

Path Path::from_points(std::vector<Vec2> pts) {
    Path p;
    for (const auto& v : pts) {
        if (!p.waypoints_.empty() && distance(p.waypoints_.back(), v) < 1e-12) continue;
        p.waypoints_.push_back(v);
    }
    p.rebuild_lengths();
    return p;
}

void Path::rebuild_lengths() {
    cum_.resize(waypoints_.size());
    double acc = 0.0;
    for (size_t i = 0; i < waypoints_.size(); ++i) {
        if (i > 0) acc += distance(waypoints_[i - 1], waypoints_[i]);
        cum_[i] = acc;
    }
}

Vec2 Path::point_at_distance(double d) const {
    if (waypoints_.empty()) return {};
    if (d <= 0.0) return waypoints_.front();
    if (d >= length()) return waypoints_.back();
    // First segment whose end arc length exceeds d.
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), d);
    const size_t i = static_cast<size_t>(it - cum_.begin());
    const Vec2 a = waypoints_[i - 1];
    const Vec2 b = waypoints_[i];
    const double seg = cum_[i] - cum_[i - 1];
    const double t = (d - cum_[i - 1]) / seg;
    return a + (b - a) * t;
}

double Path::distance_to(Vec2 p) const {
    if (waypoints_.empty()) return std::numeric_limits<double>::infinity();
    if (waypoints_.size() == 1) return distance(p, waypoints_[0]);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < waypoints_.size(); ++i) {
        best = std::min(best, distance_point_segment(p, waypoints_[i], waypoints_[i + 1]));
    }
    return best;
}

Path Path::advanced_to(Vec2 new_position, double tol) const {
    if (waypoints_.empty()) throw SimError(Errc::off_path, "advance on empty path");
    if (waypoints_.size() == 1) {
        if (distance(new_position, waypoints_[0]) > tol) {
            throw SimError(Errc::off_path, "position not on path polyline");
        }
        return *this;
    }
    // Arc length of the projection of new_position onto the polyline.
    double best_d = std::numeric_limits<double>::infinity();
    double best_arc = 0.0;
    size_t best_seg = 0;
    for (size_t i = 0; i + 1 < waypoints_.size(); ++i) {
        const Vec2 a = waypoints_[i];
        const Vec2 b = waypoints_[i + 1];
        const Vec2 ab = b - a;
        const double len_sq = ab.length_sq();
        const double t = len_sq > 0 ? std::clamp((new_position - a).dot(ab) / len_sq, 0.0, 1.0) : 0.0;
        const Vec2 q = a + ab * t;
        const double d = distance(new_position, q);
        if (d < best_d) {
            best_d = d;
            best_seg = i;
            best_arc = cum_[i] + t * std::sqrt(len_sq);
        }
    }
    if (best_d > tol) {
        throw SimError(Errc::off_path, "position not on path polyline");
    }
    std::vector<Vec2> pts;
    pts.push_back(new_position);
    for (size_t i = best_seg + 1; i < waypoints_.size(); ++i) {
        if (cum_[i] <= best_arc) continue; // skipped sub-goal
        pts.push_back(waypoints_[i]);
    }
    if (pts.size() == 1 && distance(pts[0], waypoints_.back()) > tol) {
        pts.push_back(waypoints_.back());
    }
    return from_points(std::move(pts));
}

Path Path::suffix_from(size_t i) const {
    std::vector<Vec2> pts(waypoints_.begin() + static_cast<long>(std::min(i, waypoints_.size() - 1)),
                          waypoints_.end());
    return from_points(std::move(pts));
}

Vec2 Path::steering_target() const {
    if (waypoints_.empty()) return {};
    return waypoints_.size() >= 2 ? waypoints_[1] : waypoints_[0];
}

namespace {

struct OpenNode {
    double f;
    double g;
    int cell;
    bool operator>(const OpenNode& o) const { return f > o.f; }
};

// Shared A*/search core. Euclidean heuristic is admissible and consistent for
// center-distance edge costs; passing heuristic=false gives plain Dijkstra.
double grid_search(const Grid& grid, int start, int goal, bool heuristic,
                   std::vector<int>* out_parents) {
    const int cols = grid.cols;
    const int rows = grid.rows;
    const int n = cols * rows;
    std::vector<double> gscore(static_cast<size_t>(n), std::numeric_limits<double>::infinity());
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::priority_queue<OpenNode, std::vector<OpenNode>, std::greater<>> open;

    const int gx = goal % cols;
    const int gy = goal / cols;
    auto h = [&](int cell) {
        if (!heuristic) return 0.0;
        const int cx = cell % cols;
        const int cy = cell / cols;
        return std::hypot((cx - gx) * grid.cell_size, (cy - gy) * grid.cell_size);
    };

    gscore[start] = 0.0;
    open.push({h(start), 0.0, start});
    while (!open.empty()) {
        const OpenNode cur = open.top();
        open.pop();
        if (cur.g > gscore[cur.cell]) continue; // stale entry
        if (cur.cell == goal) break;
        const int cx = cur.cell % cols;
        const int cy = cur.cell / cols;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int nx = cx + dx;
                const int ny = cy + dy;
                if (nx < 0 || nx >= cols || ny < 0 || ny >= rows) continue;
                if (grid.is_blocked(nx, ny)) continue;
                if (dx != 0 && dy != 0) {
                    // Diagonal forbidden when both orthogonal neighbors are blocked.
                    if (grid.is_blocked(cx + dx, cy) && grid.is_blocked(cx, cy + dy)) continue;
                }
                const double step = (dx != 0 && dy != 0) ? grid.cell_size * std::numbers::sqrt2
                                                         : grid.cell_size;
                const double ng = cur.g + step;
                const int ncell = ny * cols + nx;
                if (ng < gscore[ncell]) {
                    gscore[ncell] = ng;
                    parent[ncell] = cur.cell;
                    open.push({ng + h(ncell), ng, ncell});
                }
            }
        }
    }
    if (out_parents) *out_parents = std::move(parent);
    return gscore[goal];
}

} // namespace

double plan_cost(const Grid& grid, Vec2 start, Vec2 goal) {
    const int sc = grid.cell_of(start);
    const int gc = grid.cell_of(goal);
    if (grid.blocked[sc] || grid.blocked[gc]) return -1.0;
    const double cost = grid_search(grid, sc, gc, true, nullptr);
    return std::isfinite(cost) ? cost : -1.0;
}

Path plan_path(const Grid& grid, Vec2 start, Vec2 goal) {
    const int sc = grid.cell_of(start);
    const int gc = grid.cell_of(goal);
    if (grid.blocked[sc] || grid.blocked[gc]) {
        throw SimError(Errc::blocked_endpoint, "path endpoint lies in a blocked cell");
    }
    if (sc == gc) {
        return Path::from_points({start, goal});
    }
    std::vector<int> parent;
    const double cost = grid_search(grid, sc, gc, true, &parent);
    if (!std::isfinite(cost)) {
        throw SimError(Errc::no_path, "goal cell unreachable from start cell");
    }
    std::vector<int> route;
    for (int c = gc; c != -1; c = parent[c]) route.push_back(c);
    std::reverse(route.begin(), route.end());

    // Start/goal cell centers stay in the polyline so that every segment is
    // contained in the union of its endpoint cells (keeps segments out of
    // blocked-cell interiors regardless of where start/goal sit in the cell).
    std::vector<Vec2> pts;
    pts.push_back(start);
    for (const int c : route) pts.push_back(grid.cell_center(c % grid.cols, c / grid.cols));
    pts.push_back(goal);
    return Path::from_points(std::move(pts));
}

} // namespace ffsim
