#include "ffsim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "ffsim/error.hpp"

namespace ffsim {

const char* to_string(AgentState s) {
    switch (s) {
        case AgentState::active: return "active";
        case AgentState::suspended: return "suspended";
        case AgentState::arrived: return "arrived";
    }
    return "?";
}

bool SimState::all_arrived() const {
    for (const auto& a : agents) {
        if (a.state != AgentState::arrived) return false;
    }
    return true;
}

int SimState::active_count() const {
    int n = 0;
    for (const auto& a : agents) n += a.state == AgentState::active;
    return n;
}

const Agent* SimState::find_agent(int id) const {
    for (const auto& a : agents) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

MarkerField scatter_markers(const Grid& grid, double density, Rng& rng,
                            const std::vector<Obstacle>& obstacles) {
    MarkerField field;
    field.cell_ranges.assign(static_cast<size_t>(grid.cols) * grid.rows, {0, 0});
    for (int cy = 0; cy < grid.rows; ++cy) {
        for (int cx = 0; cx < grid.cols; ++cx) {
            const int cell = cy * grid.cols + cx;
            const int begin = field.count();
            if (!grid.is_blocked(cx, cy)) {
                const Rect r = grid.cell_rect_clipped(cx, cy);
                const int n = static_cast<int>(std::lround(density * r.w * r.h));
                // Jittered-grid sampling: one uniform sample per stratum.
                // Plain iid sampling leaves meter-scale voids often enough to
                // strand agents whose whole front cone lands in one.
                const int sx = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
                const int sy = std::max(1, (n + sx - 1) / sx);
                for (int i = 0; i < n; ++i) {
                    const int stratum = static_cast<int>(static_cast<long>(i) * sx * sy / n);
                    const int ix = stratum % sx;
                    const int iy = stratum / sx;
                    Vec2 p{r.x + (ix + rng.uniform()) * r.w / sx,
                           r.y + (iy + rng.uniform()) * r.h / sy};
                    // Unblocked cells never overlap obstacles; guard anyway.
                    if (point_in_any_obstacle(p, obstacles)) continue;
                    field.markers.push_back(p);
                }
            }
            field.cell_ranges[cell] = {begin, field.count()};
        }
    }
    field.owner.assign(field.markers.size(), -1);
    return field;
}

void assign_markers(SimState& state) {
    auto& field = state.marker_field;
    std::fill(field.owner.begin(), field.owner.end(), -1);
    std::vector<double> best_dist(field.markers.size(), 0.0);

    const Grid& grid = *state.grid;
    // Agents are visited in ascending id order, so an exact distance tie keeps
    // the earlier (lower-id) owner.
    for (const auto& agent : state.agents) {
        if (agent.state != AgentState::active) continue;
        const double reach = agent.personal_radius;
        const int span = static_cast<int>(std::ceil(reach / grid.cell_size));
        const int acx = std::clamp(static_cast<int>(agent.position.x / grid.cell_size), 0, grid.cols - 1);
        const int acy = std::clamp(static_cast<int>(agent.position.y / grid.cell_size), 0, grid.rows - 1);
        for (int cy = std::max(0, acy - span); cy <= std::min(grid.rows - 1, acy + span); ++cy) {
            for (int cx = std::max(0, acx - span); cx <= std::min(grid.cols - 1, acx + span); ++cx) {
                const auto [begin, end] = field.cell_ranges[cy * grid.cols + cx];
                for (int m = begin; m < end; ++m) {
                    const double d = distance(field.markers[m], agent.position);
                    state.marker_assignments++;
                    if (d > reach) continue;
                    if (field.owner[m] == -1 || d < best_dist[m]) {
                        field.owner[m] = agent.id;
                        best_dist[m] = d;
                    }
                }
            }
        }
    }
}

Vec2 motion_vector(const Agent& agent, const std::vector<Vec2>& owned_markers,
                   double frame_dt) {
    if (owned_markers.empty()) return {};
    Vec2 target_dir = agent.path.empty() ? (agent.goal - agent.position)
                                         : (agent.path.steering_target() - agent.position);
    if (target_dir.length_sq() < 1e-18) target_dir = agent.goal - agent.position;
    const Vec2 u = target_dir.normalized();

    double weight_sum = 0.0;
    std::vector<double> weights(owned_markers.size(), 0.0);
    for (size_t k = 0; k < owned_markers.size(); ++k) {
        const Vec2 offset = owned_markers[k] - agent.position;
        const double len = offset.length();
        if (len < 1e-12) continue;
        const double f = std::max(0.0, offset.dot(u) / len); // max(0, cos theta)
        weights[k] = f;
        weight_sum += f;
    }
    if (weight_sum <= 0.0) return {};

    Vec2 m{};
    for (size_t k = 0; k < owned_markers.size(); ++k) {
        m += (owned_markers[k] - agent.position) * (weights[k] / weight_sum);
    }
    const double mag = m.length();
    if (mag < 1e-12) return {};
    const double speed = std::min(agent.max_speed, mag / frame_dt);
    return m * (speed / mag);
}

void step(SimState& state) {
    std::vector<std::uint8_t> stepped(state.agents.size(), 0);
    for (const auto& agent : state.agents) {
        stepped[static_cast<size_t>(agent.id)] = agent.state == AgentState::active;
    }

    assign_markers(state);

    auto& field = state.marker_field;
    // Gather owned markers per agent (ids are dense by construction).
    std::vector<std::vector<Vec2>> owned(state.agents.size());
    for (int m = 0; m < field.count(); ++m) {
        const int id = field.owner[m];
        if (id >= 0) owned[static_cast<size_t>(id)].push_back(field.markers[m]);
    }

    const double dt = state.scenario->frame_dt;
    for (auto& agent : state.agents) {
        if (agent.state != AgentState::active) continue;
        agent.velocity = motion_vector(agent, owned[static_cast<size_t>(agent.id)], dt);
        state.motion_evaluations++;
    }

    for (auto& agent : state.agents) {
        if (agent.state != AgentState::active) continue;
        agent.position += agent.velocity * dt;

        // Trim sub-goals the agent has reached (the goal stays last). A
        // waypoint also counts as reached once the agent crosses the plane
        // into the next leg; steering back to a missed waypoint against the
        // marker competition deadlocks whole groups otherwise.
        while (agent.path.size() > 2) {
            const Vec2 wp1 = agent.path.waypoints()[1];
            const Vec2 wp2 = agent.path.waypoints()[2];
            const bool reached = distance(agent.position, wp1) < kWaypointEps ||
                                 (agent.position - wp1).dot(wp2 - wp1) > 0.0;
            if (!reached) break;
            agent.path = agent.path.suffix_from(1);
        }
        if (distance(agent.position, agent.goal) < kArrivalEps) {
            agent.state = AgentState::arrived;
            agent.velocity = {};
        }
    }

    state.frame++;
    state.steps_executed++;
    // One record per agent that was active at frame start.
    for (const auto& agent : state.agents) {
        if (!stepped[static_cast<size_t>(agent.id)]) continue;
        state.trajectory.push_back({state.frame, agent.id, agent.position.x, agent.position.y,
                                    agent.velocity.length(), agent.state});
    }
}

RunOutcome run_until_arrived(SimState& state, int frame_limit) {
    while (!state.all_arrived()) {
        if (state.frame >= frame_limit) return RunOutcome::frame_limit;
        step(state);
    }
    return RunOutcome::all_arrived;
}

void run_until_frame(SimState& state, int frame) {
    while (state.frame < frame) step(state);
}

void apply_features(SimState& state) {
    for (auto& agent : state.agents) {
        const auto& profile = state.profiles[static_cast<size_t>(agent.group_id)];
        if (!profile) continue;
        agent.max_speed = profile->desired_speed;
        agent.personal_radius = cohesion_radius(profile->cohesion);
    }
}

namespace {

Vec2 sample_spawn(const Rect& region, const Scenario& scenario, const Grid& grid, Rng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Vec2 p{rng.uniform(region.x, region.x1()), rng.uniform(region.y, region.y1())};
        if (point_in_any_obstacle(p, scenario.obstacles)) continue;
        if (grid.blocked[grid.cell_of(p)]) continue;
        return p;
    }
    throw SimError(Errc::semantic, "spawn region obstructed: cannot place agent");
}

} // namespace

SimState init_state(const Scenario& scenario) {
    SimState state;
    state.scenario = std::make_shared<Scenario>(scenario);
    state.grid = std::make_shared<Grid>(build_grid(scenario));

    Rng marker_rng(derive_seed(scenario.seed, 1));
    state.marker_field =
        scatter_markers(*state.grid, scenario.marker_density, marker_rng, scenario.obstacles);

    Rng spawn_rng(derive_seed(scenario.seed, 2));
    Rng leader_rng(derive_seed(scenario.seed, 3));

    int next_id = 0;
    for (size_t gi = 0; gi < scenario.groups.size(); ++gi) {
        const auto& spec = scenario.groups[gi];
        const Goal* goal = scenario.find_goal(spec.goal_id);
        for (int i = 0; i < spec.count; ++i) {
            Agent a;
            a.id = next_id++;
            a.group_id = static_cast<int>(gi);
            a.goal_id = spec.goal_id;
            a.goal = goal->position;
            a.position = sample_spawn(spec.spawn_region, scenario, *state.grid, spawn_rng);
            a.path = plan_path(*state.grid, a.position, a.goal);
            state.agents.push_back(std::move(a));
        }
        if (spec.ocean) {
            std::vector<Behaviors> members(static_cast<size_t>(spec.count),
                                           derive_behaviors(*spec.ocean));
            state.profiles.push_back(group_features(members, leader_rng));
        } else {
            state.profiles.push_back(std::nullopt);
        }
    }
    apply_features(state);
    return state;
}

} // namespace ffsim
