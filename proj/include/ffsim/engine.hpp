#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffsim/pathplan.hpp"
#include "ffsim/personality.hpp"
#include "ffsim/rng.hpp"
#include "ffsim/scenario.hpp"

namespace ffsim {

enum class AgentState : std::uint8_t { active, suspended, arrived };

const char* to_string(AgentState s);

struct Agent {
    int id = 0;
    int group_id = 0;
    Vec2 position;
    Vec2 velocity;
    double max_speed = 1.5;      // m/s; overwritten by Psi_g when OCEAN is set
    double personal_radius = 1.0; // marker reach in meters
    double body_radius = 0.3;
    std::string goal_id;
    Vec2 goal;
    Path path;
    AgentState state = AgentState::active;

    double speed() const { return velocity.length(); }
};

/// Space markers scattered once at startup; ownership is recomputed per frame.
struct MarkerField {
    std::vector<Vec2> markers;
    // Markers are scattered cell by cell; ranges index into `markers`.
    std::vector<std::pair<int, int>> cell_ranges; // [begin, end) per cell
    std::vector<int> owner;                       // agent id or -1, per frame

    int count() const { return static_cast<int>(markers.size()); }
};

struct TrajectoryRecord {
    int frame;
    int agent_id;
    double x;
    double y;
    double speed;
    AgentState state;
};

enum class RunOutcome { all_arrived, frame_limit };

/// Mutable simulation state: the single object the tick loop advances.
struct SimState {
    std::shared_ptr<const Scenario> scenario;
    std::shared_ptr<const Grid> grid;
    std::vector<Agent> agents;
    MarkerField marker_field;
    std::vector<std::optional<GroupProfile>> profiles; // per group; empty = no OCEAN
    int frame = 0;
    std::vector<TrajectoryRecord> trajectory;

    // Work counters: the observable cost of a run.
    long steps_executed = 0;
    long motion_evaluations = 0;
    long marker_assignments = 0;

    bool all_arrived() const;
    int active_count() const;
    const Agent* find_agent(int id) const;
};

/// Build the initial state: discretize, scatter markers, spawn agents inside
/// their regions (rejecting obstacle hits), plan initial paths, derive and
/// apply personality features. Deterministic in scenario.seed.
SimState init_state(const Scenario& scenario);

/// Scatter round(density * free_cell_area) uniform markers per unblocked cell.
MarkerField scatter_markers(const Grid& grid, double density, Rng& rng,
                            const std::vector<Obstacle>& obstacles);

/// Competitive assignment: each marker within reach of at least one active
/// agent is owned by the nearest such agent; exact ties go to the lower id.
void assign_markers(SimState& state);

/// BioCrowds motion vector from owned markers, capped at max_speed.
Vec2 motion_vector(const Agent& agent, const std::vector<Vec2>& owned_markers,
                   double frame_dt);

/// Advance one frame: assign markers, move active agents, trim reached
/// waypoints, mark arrivals, log trajectory records.
void step(SimState& state);

/// Step until all agents arrived or the frame limit is hit.
RunOutcome run_until_arrived(SimState& state, int frame_limit);

/// Step until state.frame == frame (arrived agents simply hold position).
void run_until_frame(SimState& state, int frame);

/// Derive GroupProfiles and write max_speed / personal_radius per agent.
/// Idempotent; groups without an OCEAN vector keep engine defaults.
void apply_features(SimState& state);

inline constexpr double kWaypointEps = 0.5; // waypoint reached radius, m
inline constexpr double kArrivalEps = 0.5;  // goal reached radius, m

} // namespace ffsim
