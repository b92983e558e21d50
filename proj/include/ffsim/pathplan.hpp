#pragma once

#include <vector>

#include "ffsim/geometry.hpp"
#include "ffsim/scenario.hpp"

namespace ffsim {

/// Arc-length-parameterized polyline: the agent's global route. Waypoints are
/// grid cell centers bracketed by the exact start and goal points.
class Path {
public:
    Path() = default;

    /// Builds a path, dropping consecutive duplicate points.
    static Path from_points(std::vector<Vec2> pts);

    bool empty() const { return waypoints_.empty(); }
    size_t size() const { return waypoints_.size(); }
    const std::vector<Vec2>& waypoints() const { return waypoints_; }
    const std::vector<double>& cumulative_length() const { return cum_; }
    Vec2 front() const { return waypoints_.front(); }
    Vec2 back() const { return waypoints_.back(); }
    double length() const { return cum_.empty() ? 0.0 : cum_.back(); }

    /// The point at arc length d; d >= length() yields the final waypoint.
    Vec2 point_at_distance(double d) const;

    /// Suffix path starting at new_position, which must lie on the polyline
    /// within tol (throws Errc::off_path otherwise). Waypoints at arc length
    /// <= the projection are dropped; new_position becomes the first waypoint.
    Path advanced_to(Vec2 new_position, double tol = 1e-6) const;

    /// Suffix starting at waypoint index i (engine waypoint trimming).
    Path suffix_from(size_t i) const;

    /// Steering target: the waypoint after the anchor, or the anchor itself
    /// for a degenerate single-point path.
    Vec2 steering_target() const;

    /// Distance from p to the nearest point of the polyline.
    double distance_to(Vec2 p) const;

private:
    void rebuild_lengths();

    std::vector<Vec2> waypoints_;
    std::vector<double> cum_;
};

/// A* over the 8-connected unblocked-cell graph. Edge cost is the Euclidean
/// center distance; a diagonal move is forbidden when both orthogonal
/// neighbors are blocked. The result prepends the exact start and appends the
/// exact goal, and is cost-optimal among grid paths.
/// Throws Errc::blocked_endpoint / Errc::no_path.
Path plan_path(const Grid& grid, Vec2 start, Vec2 goal);

/// Cost of the optimal cell route between the cells containing start and
/// goal, or a negative value when unreachable. Exposed for the planner's
/// optimality checks (Dijkstra runs on the same graph in the tests).
double plan_cost(const Grid& grid, Vec2 start, Vec2 goal);

} // namespace ffsim
