// Batch driver for the coded-localization simulation library.
//
//   codedloc simulate --config run.toml --out results.csv
//   codedloc sweep    --config run.toml --trials 10000 --out sweep.csv
//   codedloc analyze  --config run.toml --out design.csv
//
// Results go to --out (or stdout), progress goes to stderr. Exit codes:
// 0 success, 2 configuration error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "codedloc/harness.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
    std::optional<int> workers;
    std::string out_path;
    bool detail = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "configuration file (key = value lines)");
    cmd->add_option("--seed", opts.seed, "root seed for all random streams");
    cmd->add_option("--trials", opts.trials, "Monte-Carlo trials per sweep point");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = all cores)");
    cmd->add_option("--out", opts.out_path, "output CSV path (default: stdout)");
    cmd->add_flag("--detail", opts.detail, "also write a per-trial detail CSV");
}

int fail_config(const std::vector<std::string>& errors) {
    for (const std::string& e : errors) std::cerr << "config error: " << e << "\n";
    return 2;
}

int run_simulation(const CommonOptions& opts, bool sweep) {
    codedloc::ExperimentConfig config;
    if (!opts.config_path.empty()) {
        codedloc::ConfigFile file;
        try {
            file = codedloc::load_config_file(opts.config_path);
        } catch (const std::exception& e) {
            return fail_config({e.what()});
        }
        auto errors = codedloc::apply_config(file, config);
        if (!errors.empty()) return fail_config(errors);
    }
    if (opts.seed) config.seed = *opts.seed;
    if (opts.trials) config.trials = *opts.trials;
    if (opts.workers) config.workers = *opts.workers;
    if (opts.detail) config.detail = true;

    if (!sweep) {
        config.axis = codedloc::SweepAxis::none;
        config.sweep_values.clear();
    } else if (config.axis == codedloc::SweepAxis::none) {
        return fail_config({"sweep_axis: sweep mode needs an axis (alpha, n_sensors, "
                            "sigma or sigma_f)"});
    }
    if (config.detail && opts.out_path.empty()) {
        return fail_config({"detail: per-trial output needs --out"});
    }
    {
        auto errors = codedloc::validate(config);
        if (!errors.empty()) return fail_config(errors);
    }

    std::cerr << "running " << (sweep ? config.sweep_values.size() : 1) << " point(s), "
              << config.trials << " trials each\n";
    codedloc::ExperimentReport report;
    try {
        report = codedloc::run_experiment(config);
    } catch (const std::exception& e) {
        return fail_config({e.what()});
    }
    for (const codedloc::SweepPoint& p : report.points) {
        std::cerr << "  " << codedloc::to_string(config.axis) << "=" << p.sweep_value
                  << "  pd=" << p.pd << "  mse=" << p.mse << "  (" << p.wall_ms
                  << " ms)\n";
    }

    try {
        if (opts.out_path.empty()) {
            codedloc::emit_csv(report, std::cout);
        } else {
            codedloc::emit_csv_file(report, opts.out_path);
            if (config.detail) {
                codedloc::emit_detail_csv_file(report, opts.out_path + ".detail.csv");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int run_analyze(const CommonOptions& opts) {
    codedloc::AnalysisConfig config;
    if (!opts.config_path.empty()) {
        codedloc::ConfigFile file;
        try {
            file = codedloc::load_config_file(opts.config_path);
        } catch (const std::exception& e) {
            return fail_config({e.what()});
        }
        auto errors = codedloc::apply_analysis_config(file, config);
        if (!errors.empty()) return fail_config(errors);
    }
    if (opts.seed) config.seed = *opts.seed;
    if (opts.trials) config.sim_trials = *opts.trials;
    if (opts.workers) config.workers = *opts.workers;

    std::vector<codedloc::AnalysisRow> rows;
    try {
        rows = codedloc::run_analysis(config);
    } catch (const std::exception& e) {
        return fail_config({e.what()});
    }
    try {
        if (opts.out_path.empty()) {
            codedloc::emit_analysis_csv(rows, std::cout);
        } else {
            std::ofstream out(opts.out_path);
            if (!out) throw std::runtime_error("cannot open " + opts.out_path);
            codedloc::emit_analysis_csv(rows, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iterative coded target localization - batch simulation driver"};
    app.require_subcommand(1);

    CommonOptions sim_opts, sweep_opts, analyze_opts;
    CLI::App* sim = app.add_subcommand("simulate", "run one configuration");
    add_common(sim, sim_opts);
    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    add_common(sweep, sweep_opts);
    CLI::App* analyze =
        app.add_subcommand("analyze", "fault-tolerance and detection-bound table");
    add_common(analyze, analyze_opts);

    CLI11_PARSE(app, argc, argv);

    if (sim->parsed()) return run_simulation(sim_opts, false);
    if (sweep->parsed()) return run_simulation(sweep_opts, true);
    if (analyze->parsed()) return run_analyze(analyze_opts);
    return 2;
}
