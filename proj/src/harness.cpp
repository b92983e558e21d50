#include "ffsim/harness.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ffsim/error.hpp"

namespace ffsim {

namespace fs = std::filesystem;

RunMode parse_mode(const std::string& name) {
    if (name == "continuous") return RunMode::continuous;
    if (name == "ffa") return RunMode::ffa;
    if (name == "compare") return RunMode::compare;
    if (name == "fog") return RunMode::fog;
    throw SimError(Errc::semantic, "unknown mode '" + name + "'");
}

const char* to_string(RunMode mode) {
    switch (mode) {
        case RunMode::continuous: return "continuous";
        case RunMode::ffa: return "ffa";
        case RunMode::compare: return "compare";
        case RunMode::fog: return "fog";
    }
    return "?";
}

void apply_env_overrides(Scenario& s) {
    if (const char* v = std::getenv("FFSIM_WEIBULL_K")) s.ip.k = std::strtod(v, nullptr);
    if (const char* v = std::getenv("FFSIM_WEIBULL_LAMBDA")) s.ip.lambda = std::strtod(v, nullptr);
    if (const char* v = std::getenv("FFSIM_FOG_S")) s.fog.subdivision = std::atoi(v);
    validate_scenario(s);
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SimError(Errc::io, "cannot write file: " + path);
    return out;
}

std::map<int, int> group_map(const SimState& state) {
    std::map<int, int> m;
    for (const auto& a : state.agents) m[a.id] = a.group_id;
    return m;
}

} // namespace

void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRecord>& log) {
    auto out = open_out(path);
    out << "frame,agent_id,x,y,speed,state\n";
    for (const auto& r : log) {
        out << r.frame << ',' << r.agent_id << ',' << fmt(r.x) << ',' << fmt(r.y) << ','
            << fmt(r.speed) << ',' << to_string(r.state) << '\n';
    }
}

void write_jumps_csv(const std::string& path, const std::vector<JumpRecord>& jumps) {
    auto out = open_out(path);
    out << "agent_id,x_t,y_t,pdr_x,pdr_y,ip,magnitude,x_proj,y_proj\n";
    for (const auto& j : jumps) {
        out << j.agent_id << ',' << fmt(j.pos_t.x) << ',' << fmt(j.pos_t.y) << ','
            << fmt(j.pdr_estimate.x) << ',' << fmt(j.pdr_estimate.y) << ',' << fmt(j.ip) << ','
            << fmt(j.magnitude) << ',' << fmt(j.pos_projected.x) << ',' << fmt(j.pos_projected.y)
            << '\n';
    }
}

void write_fog_events_csv(const std::string& path, const std::vector<FogEvent>& events) {
    auto out = open_out(path);
    out << "frame,agent_id,event,x,y,fog_cell\n";
    for (const auto& e : events) {
        out << e.frame << ',' << e.agent_id << ',' << e.event << ',' << fmt(e.position.x) << ','
            << fmt(e.position.y) << ',' << e.fog_cell << '\n';
    }
}

void write_groups_csv(const std::string& path, const SimState& state) {
    auto out = open_out(path);
    out << "group_id,psi,omega,beta,zeta,Psi,leader_id\n";
    for (size_t gi = 0; gi < state.profiles.size(); ++gi) {
        out << gi << ',';
        const auto& p = state.profiles[gi];
        if (p) {
            // Leader index is group-local; emit the global agent id.
            int leader_agent = -1;
            if (p->leader) {
                int seen = 0;
                for (const auto& a : state.agents) {
                    if (a.group_id == static_cast<int>(gi) && seen++ == *p->leader) {
                        leader_agent = a.id;
                        break;
                    }
                }
            }
            out << fmt(p->adopted.walking_speed) << ',' << fmt(p->adopted.leadership) << ','
                << fmt(p->adopted.impatience) << ',' << fmt(p->cohesion) << ','
                << fmt(p->desired_speed) << ',';
            if (leader_agent >= 0) out << leader_agent;
            else out << '-';
        } else {
            out << "-,-,-,-,-,-";
        }
        out << '\n';
    }
}

void write_paths_csv(const std::string& path, const SimState& state) {
    auto out = open_out(path);
    out << "agent_id,seq,x,y\n";
    for (const auto& a : state.agents) {
        int seq = 0;
        for (const auto& p : a.path.waypoints()) {
            out << a.id << ',' << seq++ << ',' << fmt(p.x) << ',' << fmt(p.y) << '\n';
        }
    }
}

void write_report_csv(const std::string& path, const std::vector<ReportRow>& rows) {
    auto out = open_out(path);
    out << "sim_id,repeat,time_s,avg_speed,avg_ang_var,avg_dist,time_ffa_s,avg_error_m,mean_dif\n";
    for (const auto& r : rows) {
        out << r.sim_id << ',' << r.repeat << ',' << fmt(r.continuous.total_time) << ','
            << fmt(r.continuous.avg_speed) << ',' << fmt(r.continuous.avg_ang_var) << ',';
        if (r.continuous.avg_dist) out << fmt(*r.continuous.avg_dist);
        else out << '-';
        out << ',';
        if (r.ffa.total_time > 0) out << fmt(r.ffa.total_time);
        out << ',';
        if (r.avg_error_m) out << fmt(*r.avg_error_m);
        out << ',';
        if (r.mean_dif) out << fmt(*r.mean_dif);
        out << '\n';
    }
}

CompareOutcome run_compare(const Scenario& scenario, std::uint64_t seed,
                           bool run_to_completion, int frame_limit) {
    Scenario sc = scenario;
    sc.seed = seed;

    SimState continuous = init_state(sc);
    run_until_frame(continuous, sc.stop_frame);

    SimState ffa_branch = continuous; // identical state at the stop frame
    const PositionMap bc_t = positions_of(continuous);

    run_until_frame(continuous, sc.target_frame);
    const PositionMap bc_target = positions_of(continuous);

    CompareOutcome outcome;
    outcome.jumps = fast_forward(ffa_branch, {sc.stop_frame, sc.target_frame});
    const PositionMap ffa_target = positions_of(ffa_branch);

    outcome.avg_error_m = avg_error(bc_target, ffa_target);
    const DifResult dif = relative_dif(bc_t, bc_target, ffa_target);
    outcome.mean_dif = dif.mean;
    outcome.dif_excluded = static_cast<int>(dif.degenerate_agents.size());

    if (run_to_completion) {
        run_until_arrived(continuous, frame_limit);
        run_until_arrived(ffa_branch, frame_limit);
    }
    const auto groups = group_map(continuous);
    outcome.continuous_stats = simulation_stats(continuous.trajectory, groups, sc.frame_dt,
                                                continuous.steps_executed);
    outcome.ffa_stats =
        simulation_stats(ffa_branch.trajectory, groups, sc.frame_dt, ffa_branch.steps_executed);
    return outcome;
}

ExperimentResult run(const ExperimentPlan& plan) {
    Scenario scenario = load_scenario_file(plan.scenario_path);
    apply_env_overrides(scenario);
    const std::uint64_t base_seed = plan.seed_override.value_or(scenario.seed);
    const std::string sim_id = fs::path(plan.scenario_path).stem().string();

    fs::create_directories(plan.out_dir);
    const auto out = [&](const std::string& name) {
        return (fs::path(plan.out_dir) / name).string();
    };

    ExperimentResult result;
    double error_acc = 0.0;
    double dif_acc = 0.0;

    for (int r = 0; r < plan.repeats; ++r) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
        const std::string tag = "_r" + std::to_string(r);
        ReportRow row;
        row.sim_id = sim_id;
        row.repeat = r;

        switch (plan.mode) {
            case RunMode::continuous: {
                Scenario sc = scenario;
                sc.seed = seed;
                SimState state = init_state(sc);
                write_paths_csv(out("paths" + tag + ".csv"), state);
                write_groups_csv(out("groups" + tag + ".csv"), state);
                const RunOutcome rc = run_until_arrived(state, plan.frame_limit);
                row.continuous = simulation_stats(state.trajectory, group_map(state),
                                                  sc.frame_dt, state.steps_executed);
                write_trajectory_csv(out("trajectory_continuous" + tag + ".csv"),
                                     state.trajectory);
                if (rc == RunOutcome::frame_limit) result.check_passed = false;
                break;
            }
            case RunMode::ffa: {
                Scenario sc = scenario;
                sc.seed = seed;
                SimState state = init_state(sc);
                write_paths_csv(out("paths" + tag + ".csv"), state);
                write_groups_csv(out("groups" + tag + ".csv"), state);
                run_until_frame(state, sc.stop_frame);
                const auto jumps = fast_forward(state, {sc.stop_frame, sc.target_frame});
                write_jumps_csv(out("jumps" + tag + ".csv"), jumps);
                const RunOutcome rc = run_until_arrived(state, plan.frame_limit);
                row.ffa = simulation_stats(state.trajectory, group_map(state), sc.frame_dt,
                                           state.steps_executed);
                write_trajectory_csv(out("trajectory_ffa" + tag + ".csv"), state.trajectory);
                if (rc == RunOutcome::frame_limit) result.check_passed = false;
                break;
            }
            case RunMode::compare: {
                const CompareOutcome cmp = run_compare(scenario, seed, true, plan.frame_limit);
                row.continuous = cmp.continuous_stats;
                row.ffa = cmp.ffa_stats;
                row.avg_error_m = cmp.avg_error_m;
                row.mean_dif = cmp.mean_dif;
                row.dif_excluded = cmp.dif_excluded;
                write_jumps_csv(out("jumps" + tag + ".csv"), cmp.jumps);
                error_acc += cmp.avg_error_m;
                dif_acc += cmp.mean_dif;
                break;
            }
            case RunMode::fog: {
                Scenario sc = scenario;
                sc.seed = seed;
                SimState state = init_state(sc);
                write_paths_csv(out("paths" + tag + ".csv"), state);
                FogSim fog_sim(std::move(state), sc.fog.subdivision, sc.fog.sources);
                fog_sim.run_to_target();
                row.continuous =
                    simulation_stats(fog_sim.state().trajectory, group_map(fog_sim.state()),
                                     sc.frame_dt, fog_sim.state().steps_executed);
                write_fog_events_csv(out("fog_events" + tag + ".csv"), fog_sim.events());
                write_trajectory_csv(out("trajectory_fog" + tag + ".csv"),
                                     fog_sim.state().trajectory);
                break;
            }
        }
        result.rows.push_back(std::move(row));
    }

    if (plan.mode == RunMode::compare && plan.repeats > 0) {
        result.mean_error = error_acc / plan.repeats;
        result.mean_dif = dif_acc / plan.repeats;
        if (plan.check && result.mean_error > 2.5) result.check_passed = false;
    }
    write_report_csv(out("report.csv"), result.rows);
    return result;
}

} // namespace ffsim
