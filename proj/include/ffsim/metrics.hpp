#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ffsim/engine.hpp"

namespace ffsim {

/// The comparison-table statistics of one run.
struct RunStats {
    double total_time = 0.0;   // seconds until all arrived (final frame * dt)
    double avg_speed = 0.0;    // m/s over moving agents
    double avg_ang_var = 0.0;  // mean |heading change| per frame, degrees
    std::optional<double> avg_dist; // mean same-group pairwise distance, m
    long frames_simulated = 0; // engine steps actually executed
};

using PositionMap = std::map<int, Vec2>; // agent id -> position

/// Mean Euclidean displacement between two position sets at the same frame.
/// Throws Errc::mismatched_agents when the id sets differ.
double avg_error(const PositionMap& bc_positions, const PositionMap& ffa_positions);

struct DifResult {
    double mean = 0.0;                 // mean over non-degenerate agents
    std::vector<double> per_agent;     // Dif per included agent
    std::vector<int> degenerate_agents; // excluded: zero continuous travel
};

/// Relative error in position per agent:
/// Dif = d(bc_target, ffa_target) / d(bc_t, bc_target).
/// Agents whose continuous position did not change between t and t+dt are
/// excluded from the mean and reported by id.
DifResult relative_dif(const PositionMap& bc_t, const PositionMap& bc_target,
                       const PositionMap& ffa_target);

/// Statistics over a trajectory log. group_of maps agent id -> group id;
/// avg_dist is absent when no group has two simultaneously-logged agents.
RunStats simulation_stats(const std::vector<TrajectoryRecord>& trajectory,
                          const std::map<int, int>& group_of, double frame_dt,
                          long frames_simulated);

PositionMap positions_of(const SimState& state);

} // namespace ffsim
