#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffsim/geometry.hpp"

namespace ffsim {

struct OceanVector {
    double o = 0.5;
    double c = 0.5;
    double e = 0.5;
    double a = 0.5;
    double n = 0.5;
    bool operator==(const OceanVector&) const = default;
};

struct Obstacle {
    Polygon polygon;
    bool operator==(const Obstacle&) const = default;
};

struct Goal {
    std::string id;
    Vec2 position;
    bool operator==(const Goal&) const = default;
};

struct GroupSpec {
    int count = 1;
    Rect spawn_region;
    std::string goal_id;
    std::optional<OceanVector> ocean;
    bool operator==(const GroupSpec&) const = default;
};

/// Interaction-with-People penalty parameters (Weibull survival form).
struct IpParams {
    double k = 1.5;
    double lambda = 6.0;
    double radius = 2.0; // neighborhood radius in meters
    bool operator==(const IpParams&) const = default;
};

/// Vision source for the fog-of-war subsystem.
struct VisionSource {
    enum class Kind { tower, dynamic };
    enum class Shape { circle, rectangle };
    Kind kind = Kind::tower;
    Shape shape = Shape::circle;
    Vec2 center;       // circle
    double radius = 0; // circle
    Rect bounds;       // rectangle
    bool active = true;
    bool operator==(const VisionSource&) const = default;
};

struct FogConfig {
    int subdivision = 2;
    std::vector<VisionSource> sources;
    bool operator==(const FogConfig&) const = default;
};

struct Scenario {
    double width = 0.0;
    double height = 0.0;
    double cell_size = 2.0;
    double marker_density = 5.0; // markers per m^2
    double frame_dt = 0.02;      // seconds per frame
    std::uint64_t seed = 1;
    std::vector<Obstacle> obstacles;
    std::vector<Goal> goals;
    std::vector<GroupSpec> groups;
    int stop_frame = 600;
    int target_frame = 1000;
    IpParams ip;
    FogConfig fog;

    bool operator==(const Scenario&) const = default;

    const Goal* find_goal(const std::string& id) const;
    int total_agents() const;
};

struct Grid {
    int cols = 0;
    int rows = 0;
    double cell_size = 0.0;
    double width = 0.0;  // world bounds (cells may overhang)
    double height = 0.0;
    std::vector<std::uint8_t> blocked; // row-major, rows*cols

    bool is_blocked(int cx, int cy) const { return blocked[cy * cols + cx] != 0; }
    bool in_bounds(int cx, int cy) const {
        return cx >= 0 && cx < cols && cy >= 0 && cy < rows;
    }
    int cell_of(Vec2 p) const;
    /// Full cell square (may extend past the world for edge cells).
    Rect cell_rect(int cx, int cy) const;
    /// Cell square clipped to the world bounds.
    Rect cell_rect_clipped(int cx, int cy) const;
    /// Cell center nudged inside the world for overhanging edge cells.
    Vec2 cell_center(int cx, int cy) const;
    int blocked_count() const;
};

/// Parse a scenario document. Reports syntax errors with the line number and
/// semantic errors naming the violated invariant. Defaults: cell_size 2.0 m,
/// marker_density 5 / m^2, frame_dt 0.02 s.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario_file(const std::string& path);

/// Canonical serialization; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Re-check all scenario invariants (parse_scenario already does this).
void validate_scenario(const Scenario& s);

/// Discretize: a cell is blocked iff its (world-clipped) square intersects an
/// obstacle polygon with positive area, or lies fully outside the world.
Grid build_grid(const Scenario& s);

bool point_in_any_obstacle(Vec2 p, const std::vector<Obstacle>& obstacles);

} // namespace ffsim
