#pragma once

#include <vector>

#include "ffsim/engine.hpp"

namespace ffsim {

struct JumpRequest {
    int stop_frame = 0;
    int target_frame = 0;
};

/// Per-agent audit record of one fast-forward jump.
struct JumpRecord {
    int agent_id = 0;
    Vec2 pos_t;          // position at the stop frame
    Vec2 pdr_estimate;   // dead-reckoned straight-line position
    double ip = 1.0;     // Interaction-with-People multiplier, (0, 1]
    double magnitude = 0.0; // projected travel distance in meters
    Vec2 pos_projected;  // final on-path position at the target frame
};

/// Straight-line dead reckoning toward the agent's final goal:
/// pos_t + u * s_t * dt_frames * frame_dt. A standing agent falls back to its
/// max_speed. The estimate is not clamped to obstacles; projection handles
/// that.
Vec2 pdr_estimate(const Agent& agent, int dt_frames, double frame_dt);

/// Weibull survival multiplier exp(-(rho/lambda)^k) where rho counts other
/// agents within `radius` of `agent` at the stop frame.
double ip_factor(const Agent& agent, const std::vector<Agent>& agents_at_t,
                 const IpParams& params);

/// Multiplier applied to a raw neighbor count (exposed for tests/tools).
double ip_multiplier(int neighbor_count, const IpParams& params);

/// ip * |pdr_pos - pos_t|.
double jump_magnitude(Vec2 pos_t, Vec2 pdr_pos, double ip);

/// Fast Forward Adaptation: per active agent (ascending id), estimate the
/// travel magnitude, project it onto the global path, resolve occupied spots
/// by sliding backward along the path, reposition, and update the path.
/// Frames in (stop, target) are never simulated. Returns one JumpRecord per
/// repositioned agent.
std::vector<JumpRecord> fast_forward(SimState& state, const JumpRequest& request);

inline constexpr double kSlideStep = 0.1; // repositioning slide decrement, m

} // namespace ffsim
