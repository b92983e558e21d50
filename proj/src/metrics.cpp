#include "ffsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ffsim/error.hpp"

namespace ffsim {

PositionMap positions_of(const SimState& state) {
    PositionMap m;
    for (const auto& a : state.agents) m[a.id] = a.position;
    return m;
}

double avg_error(const PositionMap& bc_positions, const PositionMap& ffa_positions) {
    if (bc_positions.size() != ffa_positions.size()) {
        throw SimError(Errc::mismatched_agents, "avg_error: agent sets differ in size");
    }
    if (bc_positions.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& [id, bc] : bc_positions) {
        const auto it = ffa_positions.find(id);
        if (it == ffa_positions.end()) {
            throw SimError(Errc::mismatched_agents, "avg_error: agent sets differ");
        }
        acc += distance(bc, it->second);
    }
    return acc / static_cast<double>(bc_positions.size());
}

DifResult relative_dif(const PositionMap& bc_t, const PositionMap& bc_target,
                       const PositionMap& ffa_target) {
    if (bc_t.size() != bc_target.size() || bc_t.size() != ffa_target.size()) {
        throw SimError(Errc::mismatched_agents, "relative_dif: agent sets differ in size");
    }
    DifResult result;
    double acc = 0.0;
    for (const auto& [id, pos_t] : bc_t) {
        const auto target_it = bc_target.find(id);
        const auto ffa_it = ffa_target.find(id);
        if (target_it == bc_target.end() || ffa_it == ffa_target.end()) {
            throw SimError(Errc::mismatched_agents, "relative_dif: agent sets differ");
        }
        const double travel = distance(pos_t, target_it->second);
        if (travel <= 0.0) {
            result.degenerate_agents.push_back(id);
            continue;
        }
        const double dif = distance(target_it->second, ffa_it->second) / travel;
        result.per_agent.push_back(dif);
        acc += dif;
    }
    if (!result.per_agent.empty()) {
        result.mean = acc / static_cast<double>(result.per_agent.size());
    }
    return result;
}

namespace {

double heading_deg(Vec2 v) {
    return std::atan2(v.y, v.x) * 180.0 / std::numbers::pi;
}

double angle_diff_deg(double a, double b) {
    double d = std::abs(a - b);
    while (d > 360.0) d -= 360.0;
    return d > 180.0 ? 360.0 - d : d;
}

} // namespace

RunStats simulation_stats(const std::vector<TrajectoryRecord>& trajectory,
                          const std::map<int, int>& group_of, double frame_dt,
                          long frames_simulated) {
    RunStats stats;
    stats.frames_simulated = frames_simulated;
    if (trajectory.empty()) return stats;

    int final_frame = 0;
    for (const auto& rec : trajectory) final_frame = std::max(final_frame, rec.frame);
    stats.total_time = final_frame * frame_dt;

    // Per-frame index: frame -> (agent -> record).
    std::map<int, std::map<int, const TrajectoryRecord*>> frames;
    for (const auto& rec : trajectory) frames[rec.frame][rec.agent_id] = &rec;

    double speed_acc = 0.0;
    long speed_n = 0;
    double ang_acc = 0.0;
    long ang_n = 0;
    std::map<int, Vec2> prev_pos;
    std::map<int, double> prev_heading;

    double dist_acc = 0.0;
    long dist_frames = 0;

    for (const auto& [frame, agents] : frames) {
        // Moving-agent speed and heading-change samples.
        for (const auto& [id, rec] : agents) {
            const Vec2 pos{rec->x, rec->y};
            const auto prev = prev_pos.find(id);
            if (prev != prev_pos.end()) {
                const Vec2 delta = pos - prev->second;
                const double d = delta.length();
                if (d > 0.0) {
                    speed_acc += d / frame_dt;
                    speed_n++;
                    const double h = heading_deg(delta);
                    const auto ph = prev_heading.find(id);
                    if (ph != prev_heading.end()) {
                        ang_acc += angle_diff_deg(h, ph->second);
                        ang_n++;
                    }
                    prev_heading[id] = h;
                }
            }
            prev_pos[id] = pos;
        }

        // Same-group pairwise distances for this frame.
        double pair_acc = 0.0;
        long pair_n = 0;
        for (auto it = agents.begin(); it != agents.end(); ++it) {
            const auto git = group_of.find(it->first);
            if (git == group_of.end()) continue;
            auto jt = it;
            for (++jt; jt != agents.end(); ++jt) {
                const auto gjt = group_of.find(jt->first);
                if (gjt == group_of.end() || gjt->second != git->second) continue;
                pair_acc += std::hypot(it->second->x - jt->second->x,
                                       it->second->y - jt->second->y);
                pair_n++;
            }
        }
        if (pair_n > 0) {
            dist_acc += pair_acc / static_cast<double>(pair_n);
            dist_frames++;
        }
    }

    if (speed_n > 0) stats.avg_speed = speed_acc / static_cast<double>(speed_n);
    if (ang_n > 0) stats.avg_ang_var = ang_acc / static_cast<double>(ang_n);
    if (dist_frames > 0) stats.avg_dist = dist_acc / static_cast<double>(dist_frames);
    return stats;
}

} // namespace ffsim
