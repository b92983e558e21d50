#include "ffsim/ffa.hpp"

#include <algorithm>
#include <cmath>

#include "ffsim/error.hpp"

namespace ffsim {

Vec2 pdr_estimate(const Agent& agent, int dt_frames, double frame_dt) {
    if (dt_frames <= 0) return agent.position;
    const Vec2 to_goal = agent.goal - agent.position;
    if (to_goal.length_sq() < 1e-18) return agent.position;
    const Vec2 u = to_goal.normalized();
    double speed = agent.speed();
    if (speed <= 0.0) speed = agent.max_speed;
    return agent.position + u * (speed * dt_frames * frame_dt);
}

double ip_multiplier(int neighbor_count, const IpParams& params) {
    if (neighbor_count <= 0) return 1.0;
    return std::exp(-std::pow(neighbor_count / params.lambda, params.k));
}

double ip_factor(const Agent& agent, const std::vector<Agent>& agents_at_t,
                 const IpParams& params) {
    int rho = 0;
    for (const auto& other : agents_at_t) {
        if (other.id == agent.id) continue;
        if (distance(other.position, agent.position) <= params.radius) rho++;
    }
    return ip_multiplier(rho, params);
}

double jump_magnitude(Vec2 pos_t, Vec2 pdr_pos, double ip) {
    return ip * distance(pdr_pos, pos_t);
}

namespace {

/// The projection polyline: the agent's live position followed by the
/// remaining route (the stored path anchor goes stale between replans).
Path projection_path(const Agent& agent) {
    std::vector<Vec2> pts;
    pts.push_back(agent.position);
    const auto& wp = agent.path.waypoints();
    for (size_t i = 1; i < wp.size(); ++i) pts.push_back(wp[i]);
    if (pts.size() == 1) pts.push_back(agent.goal);
    return Path::from_points(std::move(pts));
}

bool spot_free(Vec2 candidate, const Agent& self, const std::vector<Agent>& agents,
               const std::vector<std::uint8_t>& placed) {
    for (const auto& other : agents) {
        if (other.id == self.id) continue;
        if (!placed[static_cast<size_t>(other.id)]) continue;
        if (distance(candidate, other.position) < self.body_radius + other.body_radius) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<JumpRecord> fast_forward(SimState& state, const JumpRequest& request) {
    if (request.target_frame < request.stop_frame) {
        throw SimError(Errc::semantic, "fast_forward: target frame before stop frame");
    }
    if (state.frame != request.stop_frame) {
        throw SimError(Errc::semantic, "fast_forward: state is not at the stop frame");
    }
    for (const auto& agent : state.agents) {
        if (agent.state == AgentState::active && agent.path.empty()) {
            throw SimError(Errc::missing_path, "fast_forward: active agent lacks a path");
        }
    }
    if (request.target_frame == request.stop_frame) {
        return {}; // zero-length jump: agents and paths untouched
    }

    const int dt_frames = request.target_frame - request.stop_frame;
    const double frame_dt = state.scenario->frame_dt;
    const IpParams& ip_params = state.scenario->ip;

    // IP neighborhoods are measured once, from the stop-frame snapshot.
    const std::vector<Agent> snapshot = state.agents;

    // Agents that are not repositioned (arrived before the stop frame) hold
    // their spot and already count as placed for the separation rule.
    std::vector<std::uint8_t> placed(state.agents.size(), 0);
    for (const auto& agent : state.agents) {
        if (agent.state != AgentState::active) placed[static_cast<size_t>(agent.id)] = 1;
    }

    std::vector<JumpRecord> records;
    for (auto& agent : state.agents) {
        if (agent.state != AgentState::active) continue;

        JumpRecord rec;
        rec.agent_id = agent.id;
        rec.pos_t = agent.position;
        rec.pdr_estimate = pdr_estimate(agent, dt_frames, frame_dt);
        rec.ip = ip_factor(agent, snapshot, ip_params);
        rec.magnitude = jump_magnitude(agent.position, rec.pdr_estimate, rec.ip);

        const Path proj = projection_path(agent);
        double arc = std::min(rec.magnitude, proj.length());

        // Repositioning: slide backward along the path until the spot is free
        // of already-placed agents. If the whole stretch back to the stop
        // position is occupied, sweep forward past the projected point.
        double chosen = arc;
        bool found = false;
        for (double d = arc; d >= 0.0; d -= kSlideStep) {
            if (spot_free(proj.point_at_distance(d), agent, state.agents, placed)) {
                chosen = d;
                found = true;
                break;
            }
        }
        if (!found) {
            for (double d = arc + kSlideStep; d <= proj.length(); d += kSlideStep) {
                if (spot_free(proj.point_at_distance(d), agent, state.agents, placed)) {
                    chosen = d;
                    found = true;
                    break;
                }
            }
        }
        rec.pos_projected = proj.point_at_distance(chosen);

        agent.position = rec.pos_projected;
        agent.velocity = {};
        agent.path = proj.advanced_to(rec.pos_projected);
        if (distance(agent.position, agent.goal) < kArrivalEps) {
            agent.state = AgentState::arrived;
        }
        placed[static_cast<size_t>(agent.id)] = 1;
        records.push_back(rec);
    }

    state.frame = request.target_frame;
    return records;
}

} // namespace ffsim
