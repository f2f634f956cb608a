#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "codedloc/analysis.hpp"
#include "codedloc/localization.hpp"

namespace codedloc {

enum class SweepAxis { none, alpha, n_sensors, sigma, sigma_f };

std::string to_string(SweepAxis axis);

struct ExperimentConfig {
    int rows = 16;
    int cols = 32;
    Rect roi{0.0, 8.0, 0.0, 8.0};
    SchemeConfig scheme;
    long trials = 1000;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency
    bool baseline_mle = false;
    bool detail = false;
    SweepAxis axis = SweepAxis::none;
    std::vector<double> sweep_values;
};

// Empty when runnable; one message per violated constraint, prefixed with the
// offending field name.
std::vector<std::string> validate(const ExperimentConfig& config);

struct TrialRecord {
    long trial = 0;
    Position target;
    Position estimate;
    double sq_err = 0.0;
    bool region_correct = false;
    std::vector<std::vector<int>> region_trace;
    double mle_sq_err = -1.0;  // < 0 when the baseline was not run
};

struct SweepPoint {
    double sweep_value = 0.0;
    long trials = 0;
    double mse = 0.0, mse_ci_lo = 0.0, mse_ci_hi = 0.0;
    double pd = 0.0, pd_ci_lo = 0.0, pd_ci_hi = 0.0;
    double wall_ms = 0.0;
    // Conditional detection rate per iteration (given all earlier iterations
    // kept the target) and the trial count each rate is based on.
    std::vector<double> per_iteration_pd;
    std::vector<long> per_iteration_trials;
    double mle_mse = -1.0, mle_ci_lo = -1.0, mle_ci_hi = -1.0;
    std::vector<TrialRecord> records;  // kept only when detail is requested
};

struct ExperimentReport {
    std::vector<SweepPoint> points;
};

// Runs `trials` independent trials per sweep point. Trial t of point p draws
// from the stream (seed, p, t), so reports are identical for any worker
// count or execution order.
ExperimentReport run_experiment(const ExperimentConfig& config);

void emit_csv(const ExperimentReport& report, std::ostream& out);
void emit_csv_file(const ExperimentReport& report, const std::string& path);
void emit_detail_csv(const ExperimentReport& report, std::ostream& out);
void emit_detail_csv_file(const ExperimentReport& report, const std::string& path);

// Parses the main CSV back into sweep points (fields carried by the file).
std::vector<SweepPoint> parse_report_csv(std::istream& in);

// Per-iteration design table: fault-tolerance fraction, detection bound,
// exact enumeration where feasible, and simulated detection rates.
struct AnalysisConfig {
    std::vector<long> n_values{32, 128, 512};
    int m = 4;
    int max_k = 2;  // evaluates iterations k = 0 .. max_k
    double alpha = 0.0;
    Rect roi{0.0, 8.0, 0.0, 8.0};
    PropagationModel propagation;
    NoiseModel noise{3.0};
    long sim_trials = 10000;
    std::uint64_t seed = 1;
    int workers = 0;
    int enum_limit = 22;
};

struct AnalysisRow {
    long n = 0;
    int k = 0;
    double fault_tolerance = 0.0;
    bool bound_available = false;
    double lambda_max = 0.0;
    double pd_lower = 0.0;
    bool exact_available = false;
    double exact = 0.0;
    bool sim_available = false;
    double sim_pd = 0.0;
    long sim_trials = 0;
};

std::vector<AnalysisRow> run_analysis(const AnalysisConfig& config);
void emit_analysis_csv(const std::vector<AnalysisRow>& rows, std::ostream& out);

// Flat key = value configuration file (TOML-compatible subset: comments with
// '#', quoted strings, [a, b] lists). Unknown keys are reported as errors.
struct ConfigFile {
    std::map<std::string, std::string> values;
};

ConfigFile load_config_file(const std::string& path);
std::vector<std::string> apply_config(const ConfigFile& file, ExperimentConfig& config);
std::vector<std::string> apply_analysis_config(const ConfigFile& file, AnalysisConfig& config);

// rows x cols with both powers of two and rows <= cols; throws if n is not a
// power of two.
void grid_shape_for(long n, int& rows, int& cols);

}  // namespace codedloc
