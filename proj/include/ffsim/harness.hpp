#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffsim/fog.hpp"
#include "ffsim/metrics.hpp"

namespace ffsim {

enum class RunMode { continuous, ffa, compare, fog };

RunMode parse_mode(const std::string& name);
const char* to_string(RunMode mode);

struct ExperimentPlan {
    std::string scenario_path;
    RunMode mode = RunMode::continuous;
    int repeats = 5; // five simulations of each case
    std::optional<std::uint64_t> seed_override;
    std::string out_dir;
    bool check = false;      // apply acceptance thresholds to the summary
    int frame_limit = 60000; // safety net for non-terminating runs
};

/// One summary row of the report CSV.
struct ReportRow {
    std::string sim_id;
    int repeat = 0;
    RunStats continuous;
    RunStats ffa;
    std::optional<double> avg_error_m;
    std::optional<double> mean_dif;
    int dif_excluded = 0; // agents excluded from Dif (degenerate denominator)
};

struct ExperimentResult {
    std::vector<ReportRow> rows;
    double mean_error = 0.0; // compare mode: mean Eq.1 error over repeats
    double mean_dif = 0.0;   // compare mode: mean Eq.2 Dif over repeats
    bool check_passed = true;
};

/// Outcome of one compare repeat (also used by the acceptance suite).
struct CompareOutcome {
    RunStats continuous_stats;
    RunStats ffa_stats;
    double avg_error_m = 0.0;
    double mean_dif = 0.0;
    int dif_excluded = 0;
    std::vector<JumpRecord> jumps;
};

/// Run continuous and FFA branches from the same seed and compare them at the
/// target frame. When run_to_completion is false both branches stop at the
/// target frame (enough for Eq.1/Eq.2; the stats then cover that window).
CompareOutcome run_compare(const Scenario& scenario, std::uint64_t seed,
                           bool run_to_completion, int frame_limit);

/// Execute a plan, writing trajectory/jump/fog/report CSVs to plan.out_dir.
ExperimentResult run(const ExperimentPlan& plan);

/// Built-in scenario files keyed by name (the paper's experiment suites).
std::map<std::string, Scenario> presets();

/// Write every preset to dir as <name>.json. Returns the file names.
std::vector<std::string> write_presets(const std::string& dir);

/// Environment overrides: FFSIM_WEIBULL_K, FFSIM_WEIBULL_LAMBDA, FFSIM_FOG_S.
void apply_env_overrides(Scenario& s);

// CSV writers (UTF-8, header row first).
void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRecord>& log);
void write_jumps_csv(const std::string& path, const std::vector<JumpRecord>& jumps);
void write_fog_events_csv(const std::string& path, const std::vector<FogEvent>& events);
void write_groups_csv(const std::string& path, const SimState& state);
void write_paths_csv(const std::string& path, const SimState& state);
void write_report_csv(const std::string& path, const std::vector<ReportRow>& rows);

} // namespace ffsim
