#pragma once

#include <string>
#include <vector>

#include "ffsim/ffa.hpp"

namespace ffsim {

/// Visibility sub-grid: each simulation cell contains subdivision^2 fog cells.
struct FogGrid {
    int subdivision = 1;
    int cols = 0;
    int rows = 0;
    double cell_size = 0.0; // fog cell size in meters
    std::vector<std::uint8_t> visible;

    int cell_index(Vec2 p) const;
    Vec2 cell_center(int index) const;
    bool is_visible(int index) const { return visible[static_cast<size_t>(index)] != 0; }
};

/// Frame-ranged position estimate for one fog cell along a suspended agent's
/// path. Enter/leave positions sit exactly on the path polyline; arc lengths
/// let the activation interpolate along the path instead of cutting corners.
struct Callback {
    int agent_id = 0;
    int fog_cell = 0;
    int enter_frame = 0;
    int leave_frame = 0;
    Vec2 enter_pos;
    Vec2 leave_pos;
    double arc_enter = 0.0;
    double arc_leave = 0.0;
    bool active = true;
};

struct FogEvent {
    int frame = 0;
    int agent_id = 0;
    std::string event; // suspend | activate | finalize
    Vec2 position;
    int fog_cell = -1;
};

/// All cells hidden; (cols*s) x (rows*s) layout.
FogGrid build_fog(const Grid& grid, int subdivision);

/// A fog cell is visible iff its center lies inside at least one active
/// source shape; every other cell is hidden.
void update_visibility(FogGrid& fog, const std::vector<VisionSource>& sources);

/// Walk the path polyline and emit one callback per fog-cell crossing, with
/// entry/exit arc lengths converted to frames at the given speed estimate.
/// A cell crossed twice (the path re-enters it) yields two callbacks.
std::vector<Callback> register_callbacks(const FogGrid& fog, int agent_id,
                                         const Path& path, double speed_estimate,
                                         int current_frame, double frame_dt);

/// Fog-of-war simulation wrapper: owns the suspension state machine on top of
/// the continuous engine. Suspension engages at scenario.stop_frame and the
/// run finalizes any still-suspended agents at scenario.target_frame.
class FogSim {
public:
    FogSim(SimState state, int subdivision, std::vector<VisionSource> sources);

    /// Advance one frame (suspend, activate, step, finalize).
    void step_frame();

    /// Run through scenario.target_frame.
    void run_to_target();

    const SimState& state() const { return state_; }
    SimState& state() { return state_; }
    const FogGrid& fog() const { return fog_; }
    const std::vector<FogEvent>& events() const { return events_; }
    const std::vector<Callback>& callbacks(int agent_id) const {
        return callbacks_[static_cast<size_t>(agent_id)];
    }

private:
    struct Suspension {
        Path projection;       // path from the suspension position to the goal
        double speed = 0.0;    // IP-penalized speed estimate
        int frame = 0;         // frame the agent was suspended at
    };

    void suspend(Agent& agent);
    void try_activate(Agent& agent);
    void finalize(Agent& agent);

    SimState state_;
    FogGrid fog_;
    std::vector<VisionSource> sources_;
    std::vector<std::vector<Callback>> callbacks_;
    std::vector<Suspension> suspensions_;
    std::vector<FogEvent> events_;
};

} // namespace ffsim
