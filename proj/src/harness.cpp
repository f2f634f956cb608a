#include "codedloc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace codedloc {

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::none: return "none";
        case SweepAxis::alpha: return "alpha";
        case SweepAxis::n_sensors: return "n_sensors";
        case SweepAxis::sigma: return "sigma";
        case SweepAxis::sigma_f: return "sigma_f";
    }
    return "?";
}

void grid_shape_for(long n, int& rows, int& cols) {
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("n_sensors: " + std::to_string(n) +
                                    " is not a power of two");
    }
    int e = 0;
    while ((1L << e) < n) ++e;
    rows = 1 << (e / 2);
    cols = 1 << (e - e / 2);
}

namespace {

ExperimentConfig point_config(const ExperimentConfig& base, double value) {
    ExperimentConfig pc = base;
    switch (base.axis) {
        case SweepAxis::none:
            break;
        case SweepAxis::alpha:
            pc.scheme.attack.alpha = value;
            break;
        case SweepAxis::n_sensors:
            grid_shape_for(static_cast<long>(std::llround(value)), pc.rows, pc.cols);
            break;
        case SweepAxis::sigma:
            pc.scheme.noise.sigma = value;
            break;
        case SweepAxis::sigma_f:
            pc.scheme.channel.sigma_f = value;
            break;
    }
    return pc;
}

double wilson_lo(double p, long n, double z) {
    if (n == 0) return 0.0;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = p + z2 / (2.0 * n);
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return std::max(0.0, (center - half) / denom);
}

double wilson_hi(double p, long n, double z) {
    if (n == 0) return 1.0;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = p + z2 / (2.0 * n);
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return std::min(1.0, (center + half) / denom);
}

// Percentile bootstrap for the mean of `samples`.
void bootstrap_mean_ci(const std::vector<double>& samples, Rng rng, double& lo, double& hi) {
    const int kResamples = 500;
    std::size_t n = samples.size();
    if (n == 0) {
        lo = hi = 0.0;
        return;
    }
    std::vector<double> means(kResamples);
    for (int b = 0; b < kResamples; ++b) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += samples[rng.uniform_below(n)];
        means[b] = sum / static_cast<double>(n);
    }
    std::sort(means.begin(), means.end());
    lo = means[static_cast<int>(0.025 * (kResamples - 1))];
    hi = means[static_cast<int>(0.975 * (kResamples - 1))];
}

struct TrialOut {
    double sq_err = 0.0;
    double mle_sq_err = -1.0;
    std::vector<std::uint8_t> iter_correct;
    Position target;
    Position estimate;
    std::vector<std::vector<int>> trace;
};

Position sample_target(const Rect& roi, const SensorField& field, Rng& rng) {
    for (;;) {
        Position theta{roi.x_min + rng.uniform() * roi.width(),
                       roi.y_min + rng.uniform() * roi.height()};
        bool on_sensor = false;
        for (const Position& p : field.positions) {
            if (p.x == theta.x && p.y == theta.y) {
                on_sensor = true;
                break;
            }
        }
        if (!on_sensor) return theta;
    }
}

}  // namespace

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> errors;
    auto err = [&](const std::string& msg) { errors.push_back(msg); };

    if (config.rows < 1 || config.cols < 1) err("rows/cols: must be >= 1");
    if (!config.roi.valid()) err("roi: invalid rectangle");
    if (config.trials < 1) err("trials: must be >= 1");
    if (config.workers < 0) err("workers: must be >= 0");

    std::vector<double> values = config.sweep_values;
    if (config.axis == SweepAxis::none) {
        if (!values.empty()) err("sweep_values: set but sweep_axis is none");
        values = {0.0};
    } else if (values.empty()) {
        err("sweep_values: empty sweep");
    }
    if (config.axis == SweepAxis::sigma_f &&
        config.scheme.channel.kind != ChannelKind::rayleigh) {
        err("sweep_axis: sigma_f sweep requires the rayleigh channel");
    }

    for (double v : values) {
        ExperimentConfig pc;
        try {
            pc = point_config(config, v);
        } catch (const std::exception& e) {
            err(e.what());
            continue;
        }
        long n = static_cast<long>(pc.rows) * pc.cols;
        for (const std::string& msg : validate(pc.scheme, static_cast<int>(n))) {
            if (config.axis == SweepAxis::none) {
                err(msg);
            } else {
                err(to_string(config.axis) + "=" + std::to_string(v) + ": " + msg);
            }
        }
        if (config.axis == SweepAxis::none) break;
    }
    return errors;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    {
        auto errors = validate(config);
        if (!errors.empty()) {
            std::string joined;
            for (const auto& e : errors) joined += (joined.empty() ? "" : "; ") + e;
            throw std::invalid_argument("run_experiment: " + joined);
        }
    }

    std::vector<double> values =
        config.axis == SweepAxis::none ? std::vector<double>{config.scheme.attack.alpha}
                                       : config.sweep_values;
    int workers = config.workers > 0
                      ? config.workers
                      : std::max(1u, std::thread::hardware_concurrency());
    bool want_trace = config.baseline_mle || config.detail;

    ExperimentReport report;
    Rng root(config.seed);

    for (std::size_t pi = 0; pi < values.size(); ++pi) {
        ExperimentConfig pc =
            config.axis == SweepAxis::none ? config : point_config(config, values[pi]);
        SensorField field = deploy_grid(pc.rows, pc.cols, pc.roi);
        long trials = pc.trials;

        auto t0 = std::chrono::steady_clock::now();
        std::vector<TrialOut> results(trials);
        std::atomic<long> next{0};
        auto run_range = [&]() {
            for (;;) {
                long t = next.fetch_add(1);
                if (t >= trials) break;
                Rng rng = root.derive(pi).derive(static_cast<std::uint64_t>(t));
                Position theta = sample_target(pc.roi, field, rng);
                TrialTrace trace;
                Estimate est =
                    run_trial(field, pc.scheme, theta, rng, want_trace ? &trace : nullptr);
                TrialOut& out = results[t];
                double dx = est.theta_hat.x - theta.x;
                double dy = est.theta_hat.y - theta.y;
                out.sq_err = dx * dx + dy * dy;
                out.iter_correct = est.iteration_correct;
                out.target = theta;
                out.estimate = est.theta_hat;
                if (config.detail) out.trace = est.region_trace;
                if (config.baseline_mle) {
                    const IterationRecord& first = trace.iterations.front();
                    Position mle = mle_estimate(
                        first.received, field, first.partition.sensors, first.thresholds,
                        pc.scheme.propagation, pc.scheme.noise, pc.roi);
                    double mx = mle.x - theta.x;
                    double my = mle.y - theta.y;
                    out.mle_sq_err = mx * mx + my * my;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(run_range);
        run_range();
        for (auto& th : pool) th.join();
        auto t1 = std::chrono::steady_clock::now();

        SweepPoint point;
        point.sweep_value = values[pi];
        point.trials = trials;
        point.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        // Ordered reduction by trial index.
        std::vector<double> sq_errs(trials), mle_errs;
        long correct = 0;
        int iters = results.empty() ? 0 : static_cast<int>(results[0].iter_correct.size());
        std::vector<long> through(iters, 0);
        for (long t = 0; t < trials; ++t) {
            sq_errs[t] = results[t].sq_err;
            bool all = true;
            for (int k = 0; k < iters; ++k) {
                all = all && results[t].iter_correct[k];
                if (all) ++through[k];
            }
            if (all) ++correct;
            if (config.baseline_mle) mle_errs.push_back(results[t].mle_sq_err);
        }
        double mse = 0.0;
        for (double e : sq_errs) mse += e;
        mse /= static_cast<double>(trials);
        point.mse = mse;
        point.pd = static_cast<double>(correct) / static_cast<double>(trials);
        const double z95 = 1.959963984540054;
        point.pd_ci_lo = wilson_lo(point.pd, trials, z95);
        point.pd_ci_hi = wilson_hi(point.pd, trials, z95);
        bootstrap_mean_ci(sq_errs, root.derive(0xB007u).derive(pi), point.mse_ci_lo,
                          point.mse_ci_hi);
        for (int k = 0; k < iters; ++k) {
            long denom = k == 0 ? trials : through[k - 1];
            point.per_iteration_trials.push_back(denom);
            point.per_iteration_pd.push_back(
                denom > 0 ? static_cast<double>(through[k]) / denom : 0.0);
        }
        if (config.baseline_mle) {
            double mm = 0.0;
            for (double e : mle_errs) mm += e;
            point.mle_mse = mm / static_cast<double>(trials);
            bootstrap_mean_ci(mle_errs, root.derive(0xB117u).derive(pi), point.mle_ci_lo,
                              point.mle_ci_hi);
        }
        if (config.detail) {
            point.records.reserve(trials);
            for (long t = 0; t < trials; ++t) {
                TrialRecord rec;
                rec.trial = t;
                rec.target = results[t].target;
                rec.estimate = results[t].estimate;
                rec.sq_err = results[t].sq_err;
                bool all = true;
                for (std::uint8_t c : results[t].iter_correct) all &= (c != 0);
                rec.region_correct = all;
                rec.region_trace = results[t].trace;
                rec.mle_sq_err = results[t].mle_sq_err;
                point.records.push_back(std::move(rec));
            }
        }
        report.points.push_back(std::move(point));
    }
    return report;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trace_string(const std::vector<std::vector<int>>& trace) {
    std::string out;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        if (k) out.push_back('|');
        for (std::size_t j = 0; j < trace[k].size(); ++j) {
            if (j) out.push_back('&');
            out += std::to_string(trace[k][j]);
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void emit_csv(const ExperimentReport& report, std::ostream& out) {
    bool with_mle = false;
    for (const SweepPoint& p : report.points) with_mle |= p.mle_mse >= 0.0;
    out << "sweep_value,trials,mse,mse_ci_lo,mse_ci_hi,pd,pd_ci_lo,pd_ci_hi,wall_ms";
    if (with_mle) out << ",mle_mse,mle_ci_lo,mle_ci_hi";
    out << "\n";
    for (const SweepPoint& p : report.points) {
        out << fmt(p.sweep_value) << ',' << p.trials << ',' << fmt(p.mse) << ','
            << fmt(p.mse_ci_lo) << ',' << fmt(p.mse_ci_hi) << ',' << fmt(p.pd) << ','
            << fmt(p.pd_ci_lo) << ',' << fmt(p.pd_ci_hi) << ',' << fmt(p.wall_ms);
        if (with_mle) {
            out << ',' << fmt(p.mle_mse) << ',' << fmt(p.mle_ci_lo) << ','
                << fmt(p.mle_ci_hi);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("emit_csv: write failed");
}

void emit_csv_file(const ExperimentReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    emit_csv(report, out);
}

void emit_detail_csv(const ExperimentReport& report, std::ostream& out) {
    bool with_mle = false;
    for (const SweepPoint& p : report.points) with_mle |= p.mle_mse >= 0.0;
    out << "sweep_value,trial,true_x,true_y,est_x,est_y,sq_err,region_correct,region_trace";
    if (with_mle) out << ",mle_sq_err";
    out << "\n";
    for (const SweepPoint& p : report.points) {
        for (const TrialRecord& r : p.records) {
            out << fmt(p.sweep_value) << ',' << r.trial << ',' << fmt(r.target.x) << ','
                << fmt(r.target.y) << ',' << fmt(r.estimate.x) << ',' << fmt(r.estimate.y)
                << ',' << fmt(r.sq_err) << ',' << (r.region_correct ? 1 : 0) << ','
                << trace_string(r.region_trace);
            if (with_mle) out << ',' << fmt(r.mle_sq_err);
            out << "\n";
        }
    }
    if (!out) throw std::runtime_error("emit_detail_csv: write failed");
}

void emit_detail_csv_file(const ExperimentReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_detail_csv: cannot open " + path);
    emit_detail_csv(report, out);
}

std::vector<SweepPoint> parse_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("parse_report_csv: empty input");
    std::vector<std::string> header = split(line, ',');
    std::vector<SweepPoint> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells = split(line, ',');
        if (cells.size() != header.size()) {
            throw std::runtime_error("parse_report_csv: column count mismatch");
        }
        SweepPoint p;
        for (std::size_t c = 0; c < header.size(); ++c) {
            const std::string& key = header[c];
            double v = std::stod(cells[c]);
            if (key == "sweep_value") p.sweep_value = v;
            else if (key == "trials") p.trials = static_cast<long>(v);
            else if (key == "mse") p.mse = v;
            else if (key == "mse_ci_lo") p.mse_ci_lo = v;
            else if (key == "mse_ci_hi") p.mse_ci_hi = v;
            else if (key == "pd") p.pd = v;
            else if (key == "pd_ci_lo") p.pd_ci_lo = v;
            else if (key == "pd_ci_hi") p.pd_ci_hi = v;
            else if (key == "wall_ms") p.wall_ms = v;
            else if (key == "mle_mse") p.mle_mse = v;
            else if (key == "mle_ci_lo") p.mle_ci_lo = v;
            else if (key == "mle_ci_hi") p.mle_ci_hi = v;
            else throw std::runtime_error("parse_report_csv: unknown column " + key);
        }
        points.push_back(p);
    }
    return points;
}

std::vector<AnalysisRow> run_analysis(const AnalysisConfig& config) {
    std::vector<AnalysisRow> rows;
    for (long n : config.n_values) {
        int grows = 0, gcols = 0;
        grid_shape_for(n, grows, gcols);
        SensorField field = deploy_grid(grows, gcols, config.roi);

        // Largest usable iteration count for the basic scheme on this field.
        int max_iters = 0;
        long long active = n;
        while (max_iters <= config.max_k && active % config.m == 0 && active > config.m) {
            active /= config.m;
            ++max_iters;
        }

        ExperimentReport sim;
        if (max_iters >= 1 && config.sim_trials >= 1) {
            ExperimentConfig ec;
            ec.rows = grows;
            ec.cols = gcols;
            ec.roi = config.roi;
            ec.scheme.scheme = Scheme::basic;
            ec.scheme.m = config.m;
            ec.scheme.k_stop = max_iters;
            ec.scheme.decoding = DecodeRule::hard;
            ec.scheme.propagation = config.propagation;
            ec.scheme.noise = config.noise;
            ec.scheme.attack.alpha = config.alpha;
            ec.scheme.channel.kind = ChannelKind::ideal;
            ec.trials = config.sim_trials;
            ec.seed = config.seed;
            ec.workers = config.workers;
            sim = run_experiment(ec);
        }

        for (int k = 0; k <= config.max_k; ++k) {
            AnalysisRow row;
            row.n = n;
            row.k = k;
            row.fault_tolerance = fault_tolerance_fraction(config.m, n, k);
            try {
                IterationContext ctx =
                    make_iteration_context(field, config.propagation, config.m, k);
                BoundReport bound = detection_bound(ctx.code, ctx.partition, field,
                                                    ctx.thresholds, config.propagation,
                                                    config.noise, config.alpha);
                if (bound.condition_ok) {
                    row.bound_available = true;
                    row.lambda_max = bound.lambda_max;
                    row.pd_lower = bound.pd_lower;
                }
                if (ctx.code.n_k <= config.enum_limit) {
                    row.exact = exact_pd(ctx.code, ctx.partition, field, ctx.thresholds,
                                         config.propagation, config.noise, config.alpha,
                                         config.enum_limit);
                    row.exact_available = true;
                }
            } catch (const std::exception&) {
                // Iteration k is not realizable on this field; leave the cells empty.
            }
            if (!sim.points.empty() &&
                k < static_cast<int>(sim.points[0].per_iteration_pd.size())) {
                row.sim_available = true;
                row.sim_pd = sim.points[0].per_iteration_pd[k];
                row.sim_trials = sim.points[0].per_iteration_trials[k];
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void emit_analysis_csv(const std::vector<AnalysisRow>& rows, std::ostream& out) {
    out << "n,k,fault_tolerance,lambda_max,pd_lower,exact_pd,sim_pd,sim_trials\n";
    for (const AnalysisRow& r : rows) {
        out << r.n << ',' << r.k << ',' << fmt(r.fault_tolerance) << ',';
        if (r.bound_available) out << fmt(r.lambda_max);
        else out << "n/a";
        out << ',';
        if (r.bound_available) out << fmt(r.pd_lower);
        else out << "n/a";
        out << ',';
        if (r.exact_available) out << fmt(r.exact);
        else out << "n/a";
        out << ',';
        if (r.sim_available) out << fmt(r.sim_pd) << ',' << r.sim_trials;
        else out << "n/a,0";
        out << "\n";
    }
    if (!out) throw std::runtime_error("emit_analysis_csv: write failed");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\''))) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

bool parse_long(const std::string& s, long long& out) {
    try {
        std::size_t used = 0;
        out = std::stoll(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

bool parse_bool(const std::string& s, bool& out) {
    if (s == "true" || s == "1") {
        out = true;
        return true;
    }
    if (s == "false" || s == "0") {
        out = false;
        return true;
    }
    return false;
}

bool parse_list(const std::string& raw, std::vector<double>& out) {
    std::string s = raw;
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    out.clear();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        double v = 0.0;
        if (!parse_double(item, v)) return false;
        out.push_back(v);
    }
    return !out.empty();
}

}  // namespace

ConfigFile load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    ConfigFile file;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Strip comments outside quotes.
        bool in_quote = false;
        char quote = 0;
        std::string body;
        for (char c : line) {
            if (in_quote) {
                if (c == quote) in_quote = false;
            } else if (c == '"' || c == '\'') {
                in_quote = true;
                quote = c;
            } else if (c == '#') {
                break;
            }
            body.push_back(c);
        }
        body = trim(body);
        if (body.empty()) continue;
        std::size_t eq = body.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config: line " + std::to_string(line_no) +
                                     " is not of the form key = value");
        }
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error("config: line " + std::to_string(line_no) +
                                     " has an empty key or value");
        }
        file.values[key] = value;
    }
    return file;
}

std::vector<std::string> apply_config(const ConfigFile& file, ExperimentConfig& config) {
    std::vector<std::string> errors;
    auto bad = [&](const std::string& key, const std::string& why) {
        errors.push_back(key + ": " + why);
    };

    for (const auto& [key, raw] : file.values) {
        std::string value = unquote(raw);
        double d = 0.0;
        long long i = 0;
        bool b = false;
        if (key == "rows") {
            if (parse_long(value, i)) config.rows = static_cast<int>(i);
            else bad(key, "expected integer");
        } else if (key == "cols") {
            if (parse_long(value, i)) config.cols = static_cast<int>(i);
            else bad(key, "expected integer");
        } else if (key == "n_sensors") {
            if (!parse_long(value, i)) {
                bad(key, "expected integer");
            } else {
                try {
                    grid_shape_for(i, config.rows, config.cols);
                } catch (const std::exception& e) {
                    bad(key, e.what());
                }
            }
        } else if (key == "roi_size") {
            if (parse_double(value, d) && d > 0.0) config.roi = {0.0, d, 0.0, d};
            else bad(key, "expected positive number");
        } else if (key == "roi_x_min") {
            if (parse_double(value, d)) config.roi.x_min = d;
            else bad(key, "expected number");
        } else if (key == "roi_x_max") {
            if (parse_double(value, d)) config.roi.x_max = d;
            else bad(key, "expected number");
        } else if (key == "roi_y_min") {
            if (parse_double(value, d)) config.roi.y_min = d;
            else bad(key, "expected number");
        } else if (key == "roi_y_max") {
            if (parse_double(value, d)) config.roi.y_max = d;
            else bad(key, "expected number");
        } else if (key == "p0") {
            if (parse_double(value, d)) config.scheme.propagation.p0 = d;
            else bad(key, "expected number");
        } else if (key == "d0") {
            if (parse_double(value, d)) config.scheme.propagation.d0 = d;
            else bad(key, "expected number");
        } else if (key == "path_loss") {
            if (parse_double(value, d)) config.scheme.propagation.path_loss = d;
            else bad(key, "expected number");
        } else if (key == "sigma") {
            if (parse_double(value, d)) config.scheme.noise.sigma = d;
            else bad(key, "expected number");
        } else if (key == "scheme") {
            if (value == "basic") config.scheme.scheme = Scheme::basic;
            else if (value == "exclusion") config.scheme.scheme = Scheme::exclusion;
            else bad(key, "expected basic or exclusion");
        } else if (key == "m_regions") {
            if (parse_long(value, i)) config.scheme.m = static_cast<int>(i);
            else bad(key, "expected integer");
        } else if (key == "k_stop") {
            if (parse_long(value, i)) config.scheme.k_stop = static_cast<int>(i);
            else bad(key, "expected integer");
        } else if (key == "decoding") {
            if (value == "hard") config.scheme.decoding = DecodeRule::hard;
            else if (value == "soft") config.scheme.decoding = DecodeRule::soft;
            else bad(key, "expected hard or soft");
        } else if (key == "alpha") {
            if (parse_double(value, d)) config.scheme.attack.alpha = d;
            else bad(key, "expected number");
        } else if (key == "flip_prob") {
            if (parse_double(value, d)) config.scheme.attack.flip_prob = d;
            else bad(key, "expected number");
        } else if (key == "channel") {
            if (value == "ideal") config.scheme.channel.kind = ChannelKind::ideal;
            else if (value == "rayleigh") config.scheme.channel.kind = ChannelKind::rayleigh;
            else bad(key, "expected ideal or rayleigh");
        } else if (key == "e_b") {
            if (parse_double(value, d)) config.scheme.channel.e_b = d;
            else bad(key, "expected number");
        } else if (key == "sigma_f") {
            if (parse_double(value, d)) config.scheme.channel.sigma_f = d;
            else bad(key, "expected number");
        } else if (key == "mean_h2") {
            if (parse_double(value, d)) config.scheme.channel.mean_h2 = d;
            else bad(key, "expected number");
        } else if (key == "trials") {
            if (parse_long(value, i)) config.trials = static_cast<long>(i);
            else bad(key, "expected integer");
        } else if (key == "seed") {
            if (parse_long(value, i)) config.seed = static_cast<std::uint64_t>(i);
            else bad(key, "expected integer");
        } else if (key == "workers") {
            if (parse_long(value, i)) config.workers = static_cast<int>(i);
            else bad(key, "expected integer");
        } else if (key == "baseline_mle") {
            if (parse_bool(value, b)) config.baseline_mle = b;
            else bad(key, "expected true or false");
        } else if (key == "detail") {
            if (parse_bool(value, b)) config.detail = b;
            else bad(key, "expected true or false");
        } else if (key == "sweep_axis") {
            if (value == "none") config.axis = SweepAxis::none;
            else if (value == "alpha") config.axis = SweepAxis::alpha;
            else if (value == "n_sensors") config.axis = SweepAxis::n_sensors;
            else if (value == "sigma") config.axis = SweepAxis::sigma;
            else if (value == "sigma_f") config.axis = SweepAxis::sigma_f;
            else bad(key, "expected none, alpha, n_sensors, sigma or sigma_f");
        } else if (key == "sweep_values") {
            if (!parse_list(value, config.sweep_values)) bad(key, "expected list of numbers");
        } else if (key.rfind("analysis_", 0) == 0) {
            // Analysis-mode key; ignored by the simulation loader.
        } else {
            bad(key, "unknown key");
        }
    }
    return errors;
}

std::vector<std::string> apply_analysis_config(const ConfigFile& file,
                                               AnalysisConfig& config) {
    std::vector<std::string> errors;
    auto bad = [&](const std::string& key, const std::string& why) {
        errors.push_back(key + ": " + why);
    };
    for (const auto& [key, raw] : file.values) {
        std::string value = unquote(raw);
        double d = 0.0;
        long long i = 0;
        if (key == "analysis_n") {
            std::vector<double> list;
            if (!parse_list(value, list)) {
                bad(key, "expected list of sensor counts");
            } else {
                config.n_values.clear();
                for (double v : list) config.n_values.push_back(static_cast<long>(std::llround(v)));
            }
        } else if (key == "analysis_max_k") {
            if (parse_long(value, i) && i >= 0) config.max_k = static_cast<int>(i);
            else bad(key, "expected integer >= 0");
        } else if (key == "analysis_enum_limit") {
            if (parse_long(value, i) && i >= 0) config.enum_limit = static_cast<int>(i);
            else bad(key, "expected integer >= 0");
        } else if (key == "m_regions") {
            if (parse_long(value, i)) config.m = static_cast<int>(i);
            else bad(key, "expected integer");
        } else if (key == "alpha") {
            if (parse_double(value, d)) config.alpha = d;
            else bad(key, "expected number");
        } else if (key == "sigma") {
            if (parse_double(value, d)) config.noise.sigma = d;
            else bad(key, "expected number");
        } else if (key == "p0") {
            if (parse_double(value, d)) config.propagation.p0 = d;
            else bad(key, "expected number");
        } else if (key == "d0") {
            if (parse_double(value, d)) config.propagation.d0 = d;
            else bad(key, "expected number");
        } else if (key == "path_loss") {
            if (parse_double(value, d)) config.propagation.path_loss = d;
            else bad(key, "expected number");
        } else if (key == "roi_size") {
            if (parse_double(value, d) && d > 0.0) config.roi = {0.0, d, 0.0, d};
            else bad(key, "expected positive number");
        } else if (key == "trials") {
            if (parse_long(value, i)) config.sim_trials = static_cast<long>(i);
            else bad(key, "expected integer");
        } else if (key == "seed") {
            if (parse_long(value, i)) config.seed = static_cast<std::uint64_t>(i);
            else bad(key, "expected integer");
        } else if (key == "workers") {
            if (parse_long(value, i)) config.workers = static_cast<int>(i);
            else bad(key, "expected integer");
        }
        // Simulation-only keys are ignored here.
    }
    return errors;
}

}  // namespace codedloc
