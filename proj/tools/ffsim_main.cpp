#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "ffsim/error.hpp"
#include "ffsim/harness.hpp"

namespace {

int run_simulate(const ffsim::ExperimentPlan& plan) {
    const ffsim::ExperimentResult result = ffsim::run(plan);
    for (const auto& row : result.rows) {
        std::printf("%s repeat=%d time=%.2fs", row.sim_id.c_str(), row.repeat,
                    plan.mode == ffsim::RunMode::ffa ? row.ffa.total_time
                                                     : row.continuous.total_time);
        if (row.avg_error_m) std::printf(" error=%.3fm", *row.avg_error_m);
        if (row.mean_dif) std::printf(" dif=%.4f", *row.mean_dif);
        std::printf("\n");
    }
    if (plan.mode == ffsim::RunMode::compare) {
        std::printf("mean_error=%.4fm mean_dif=%.4f over %d repeats\n", result.mean_error,
                    result.mean_dif, plan.repeats);
    }
    std::printf("report: %s/report.csv\n", plan.out_dir.c_str());
    if (plan.check && !result.check_passed) {
        std::fprintf(stderr, "check failed: acceptance threshold exceeded\n");
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crowd simulation engine with fast-forward jumps, OCEAN "
                 "personalities and fog-of-war suspension"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string mode_name = "continuous";
    std::string out_dir = "out";
    int repeats = 5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool check = false;

    auto* simulate = app.add_subcommand("simulate", "Run a scenario file");
    simulate->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
    simulate->add_option("--mode", mode_name, "continuous | ffa | compare | fog")
        ->check(CLI::IsMember({"continuous", "ffa", "compare", "fog"}));
    simulate->add_option("--repeats", repeats, "Number of seeded repetitions")
        ->check(CLI::PositiveNumber);
    auto* seed_opt = simulate->add_option("--seed", seed, "Base seed (default: scenario seed)");
    simulate->add_option("--out", out_dir, "Output directory for CSV files");
    simulate->add_flag("--check", check, "Exit 3 when acceptance thresholds fail");

    std::string preset_dir = "presets";
    auto* presets_cmd = app.add_subcommand("presets", "Write the built-in scenario files");
    presets_cmd->add_option("--out", preset_dir, "Target directory");

    CLI11_PARSE(app, argc, argv);
    seed_set = seed_opt->count() > 0;

    try {
        if (presets_cmd->parsed()) {
            const auto names = ffsim::write_presets(preset_dir);
            std::printf("wrote %zu presets to %s\n", names.size(), preset_dir.c_str());
            return 0;
        }
        ffsim::ExperimentPlan plan;
        plan.scenario_path = scenario_path;
        plan.mode = ffsim::parse_mode(mode_name);
        plan.repeats = repeats;
        if (seed_set) plan.seed_override = seed;
        plan.out_dir = out_dir;
        plan.check = check;
        return run_simulate(plan);
    } catch (const ffsim::SimError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        const bool validation = e.code() == ffsim::Errc::syntax ||
                                e.code() == ffsim::Errc::semantic ||
                                e.code() == ffsim::Errc::io;
        return validation ? 1 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
