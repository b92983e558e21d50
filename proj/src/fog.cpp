#include "ffsim/fog.hpp"

#include <algorithm>
#include <cmath>

#include "ffsim/error.hpp"

namespace ffsim {

int FogGrid::cell_index(Vec2 p) const {
    int cx = static_cast<int>(std::floor(p.x / cell_size));
    int cy = static_cast<int>(std::floor(p.y / cell_size));
    cx = std::clamp(cx, 0, cols - 1);
    cy = std::clamp(cy, 0, rows - 1);
    return cy * cols + cx;
}

Vec2 FogGrid::cell_center(int index) const {
    const int cx = index % cols;
    const int cy = index / cols;
    return {(cx + 0.5) * cell_size, (cy + 0.5) * cell_size};
}

FogGrid build_fog(const Grid& grid, int subdivision) {
    if (subdivision < 1) throw SimError(Errc::semantic, "fog subdivision must be >= 1");
    FogGrid fog;
    fog.subdivision = subdivision;
    fog.cols = grid.cols * subdivision;
    fog.rows = grid.rows * subdivision;
    fog.cell_size = grid.cell_size / subdivision;
    fog.visible.assign(static_cast<size_t>(fog.cols) * fog.rows, 0);
    return fog;
}

void update_visibility(FogGrid& fog, const std::vector<VisionSource>& sources) {
    for (int i = 0; i < fog.cols * fog.rows; ++i) {
        const Vec2 c = fog.cell_center(i);
        bool vis = false;
        for (const auto& src : sources) {
            if (!src.active) continue;
            if (src.shape == VisionSource::Shape::circle) {
                vis = distance(c, src.center) <= src.radius;
            } else {
                vis = src.bounds.contains(c);
            }
            if (vis) break;
        }
        fog.visible[static_cast<size_t>(i)] = vis ? 1 : 0;
    }
}

std::vector<Callback> register_callbacks(const FogGrid& fog, int agent_id,
                                         const Path& path, double speed_estimate,
                                         int current_frame, double frame_dt) {
    std::vector<Callback> result;
    if (path.size() < 2 || speed_estimate <= 0.0) {
        if (path.size() == 1 && speed_estimate > 0.0) {
            // Degenerate single-point path: one zero-span callback at the spot.
            Callback cb;
            cb.agent_id = agent_id;
            cb.fog_cell = fog.cell_index(path.front());
            cb.enter_frame = cb.leave_frame = current_frame;
            cb.enter_pos = cb.leave_pos = path.front();
            result.push_back(cb);
        }
        return result;
    }

    // Breakpoints: every arc length where the polyline crosses a fog grid
    // line, plus the segment joints themselves.
    const auto& wp = path.waypoints();
    const auto& cum = path.cumulative_length();
    std::vector<double> breaks;
    breaks.push_back(0.0);
    for (size_t i = 0; i + 1 < wp.size(); ++i) {
        const Vec2 a = wp[i];
        const Vec2 b = wp[i + 1];
        const double seg_len = cum[i + 1] - cum[i];
        breaks.push_back(cum[i + 1]);
        auto add_axis_crossings = [&](double a_val, double b_val) {
            if (a_val == b_val) return;
            const double lo = std::min(a_val, b_val);
            const double hi = std::max(a_val, b_val);
            int first = static_cast<int>(std::ceil(lo / fog.cell_size));
            for (int k = first; k * fog.cell_size < hi; ++k) {
                const double v = k * fog.cell_size;
                if (v <= lo) continue;
                const double t = (v - a_val) / (b_val - a_val);
                if (t > 0.0 && t < 1.0) breaks.push_back(cum[i] + t * seg_len);
            }
        };
        add_axis_crossings(a.x, b.x);
        add_axis_crossings(a.y, b.y);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 breaks.end());

    // Merge consecutive sub-intervals lying in the same fog cell.
    const double frames_per_meter = 1.0 / (speed_estimate * frame_dt);
    int open_cell = -1;
    double open_arc = 0.0;
    auto close_interval = [&](double end_arc) {
        if (open_cell < 0) return;
        Callback cb;
        cb.agent_id = agent_id;
        cb.fog_cell = open_cell;
        cb.arc_enter = open_arc;
        cb.arc_leave = end_arc;
        cb.enter_pos = path.point_at_distance(open_arc);
        cb.leave_pos = path.point_at_distance(end_arc);
        cb.enter_frame = current_frame + static_cast<int>(std::llround(open_arc * frames_per_meter));
        cb.leave_frame = current_frame + static_cast<int>(std::llround(end_arc * frames_per_meter));
        result.push_back(cb);
    };
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i];
        const double hi = breaks[i + 1];
        if (hi - lo < 1e-12) continue;
        const int cell = fog.cell_index(path.point_at_distance((lo + hi) * 0.5));
        if (cell != open_cell) {
            close_interval(lo);
            open_cell = cell;
            open_arc = lo;
        }
    }
    close_interval(path.length());
    return result;
}

FogSim::FogSim(SimState state, int subdivision, std::vector<VisionSource> sources)
    : state_(std::move(state)),
      fog_(build_fog(*state_.grid, subdivision)),
      sources_(std::move(sources)),
      callbacks_(state_.agents.size()),
      suspensions_(state_.agents.size()) {
    update_visibility(fog_, sources_);
}

void FogSim::suspend(Agent& agent) {
    // Estimated travel speed while hidden: the IP-penalized current speed,
    // with the agent's max speed as the standing fallback.
    const double ip = ip_factor(agent, state_.agents, state_.scenario->ip);
    double speed = agent.speed();
    if (speed <= 0.0) speed = agent.max_speed;
    speed *= ip;

    std::vector<Vec2> pts;
    pts.push_back(agent.position);
    const auto& wp = agent.path.waypoints();
    for (size_t i = 1; i < wp.size(); ++i) pts.push_back(wp[i]);
    if (pts.size() == 1) pts.push_back(agent.goal);
    Path projection = Path::from_points(std::move(pts));

    auto& susp = suspensions_[static_cast<size_t>(agent.id)];
    susp.projection = projection;
    susp.speed = speed;
    susp.frame = state_.frame;

    callbacks_[static_cast<size_t>(agent.id)] = register_callbacks(
        fog_, agent.id, projection, speed, state_.frame, state_.scenario->frame_dt);

    agent.state = AgentState::suspended;
    agent.velocity = {};
    events_.push_back({state_.frame, agent.id, "suspend", agent.position,
                       fog_.cell_index(agent.position)});
}

void FogSim::try_activate(Agent& agent) {
    auto& cbs = callbacks_[static_cast<size_t>(agent.id)];
    for (auto& cb : cbs) {
        if (!cb.active) continue;
        if (!fog_.is_visible(cb.fog_cell)) continue;
        if (state_.frame < cb.enter_frame || state_.frame > cb.leave_frame) continue;

        // Interpolate by arc length so the position stays on the path even
        // when the crossing bends inside the cell.
        const int span = cb.leave_frame - cb.enter_frame;
        const double frac = span > 0 ? static_cast<double>(state_.frame - cb.enter_frame) / span : 0.0;
        const double arc = cb.arc_enter + frac * (cb.arc_leave - cb.arc_enter);
        const auto& susp = suspensions_[static_cast<size_t>(agent.id)];
        agent.position = susp.projection.point_at_distance(arc);
        agent.path = susp.projection.advanced_to(agent.position);
        agent.state = distance(agent.position, agent.goal) < kArrivalEps
                          ? AgentState::arrived
                          : AgentState::active;
        for (auto& other : cbs) other.active = false;
        events_.push_back({state_.frame, agent.id, "activate", agent.position, cb.fog_cell});
        return;
    }
}

void FogSim::finalize(Agent& agent) {
    const auto& susp = suspensions_[static_cast<size_t>(agent.id)];
    const int dt_frames = state_.scenario->target_frame - susp.frame;
    const double arc = susp.speed * dt_frames * state_.scenario->frame_dt;
    agent.position = susp.projection.point_at_distance(std::min(arc, susp.projection.length()));
    agent.path = susp.projection.advanced_to(agent.position);
    agent.state = distance(agent.position, agent.goal) < kArrivalEps ? AgentState::arrived
                                                                     : AgentState::active;
    for (auto& cb : callbacks_[static_cast<size_t>(agent.id)]) cb.active = false;
    events_.push_back({state_.frame, agent.id, "finalize", agent.position,
                       fog_.cell_index(agent.position)});
}

void FogSim::step_frame() {
    const auto& scenario = *state_.scenario;

    // Suspension engages once the continuous run reaches the stop frame.
    if (state_.frame >= scenario.stop_frame) {
        for (auto& agent : state_.agents) {
            if (agent.state == AgentState::active &&
                !fog_.is_visible(fog_.cell_index(agent.position))) {
                suspend(agent);
            }
        }
        for (auto& agent : state_.agents) {
            if (agent.state == AgentState::suspended) try_activate(agent);
        }
    }

    step(state_);

    if (state_.frame >= scenario.target_frame) {
        for (auto& agent : state_.agents) {
            if (agent.state == AgentState::suspended) finalize(agent);
        }
    }
}

void FogSim::run_to_target() {
    while (state_.frame < state_.scenario->target_frame) step_frame();
}

} // namespace ffsim
