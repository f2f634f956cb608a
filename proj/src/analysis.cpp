#include "codedloc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace codedloc {

namespace {

// Amplitude with the distance clamped away from the singularity; analysis
// scans evaluate q on dense theta grids that may brush sensor positions.
double safe_amplitude(const PropagationModel& prop, Position target, Position sensor) {
    double d = std::max(distance(target, sensor), 1e-9);
    return std::sqrt(prop.p0) * std::pow(prop.d0 / d, 0.5 * prop.path_loss);
}

double q_from_fbar(double fbar, bool in_region, double alpha) {
    return in_region ? (1.0 - alpha) - (1.0 - 2.0 * alpha) * fbar
                     : alpha + (1.0 - 2.0 * alpha) * fbar;
}

}  // namespace

double q_value(Position theta, int i, int j, const CodeMatrix& code,
               const SensorField& field, const std::vector<double>& thresholds,
               const PropagationModel& propagation, const NoiseModel& noise,
               double alpha) {
    Position pos = field.positions.at(code.column_sensor.at(i));
    double a = safe_amplitude(propagation, theta, pos);
    double fbar = comp_cdf(noise, thresholds.at(i) - a);
    return q_from_fbar(fbar, code.column_region[i] == j, alpha);
}

QMatrix build_qmatrix(Position theta, const CodeMatrix& code, const SensorField& field,
                      const std::vector<double>& thresholds,
                      const PropagationModel& propagation, const NoiseModel& noise,
                      double alpha) {
    QMatrix qm;
    qm.n_k = code.n_k;
    qm.m = code.m;
    qm.alpha = alpha;
    qm.q.resize(static_cast<std::size_t>(code.n_k) * code.m);
    for (int i = 0; i < code.n_k; ++i) {
        Position pos = field.positions.at(code.column_sensor[i]);
        double a = safe_amplitude(propagation, theta, pos);
        double fbar = comp_cdf(noise, thresholds[i] - a);
        for (int j = 0; j < code.m; ++j) {
            qm.q[static_cast<std::size_t>(i) * code.m + j] =
                q_from_fbar(fbar, code.column_region[i] == j, alpha);
        }
    }
    return qm;
}

bool condition_check(int j, const CodeMatrix& code, const QMatrix& q) {
    double limit = static_cast<double>(code.n_k) / code.m;
    for (int l = 0; l < code.m; ++l) {
        if (l == j) continue;
        double sum = 0.0;
        for (int i = 0; i < code.n_k; ++i) {
            int r = code.column_region[i];
            if (r == j || r == l) sum += q.at(i, j);
        }
        if (!(sum < limit)) return false;
    }
    return true;
}

double exact_pd(const CodeMatrix& code, const Partition& partition,
                const SensorField& field, const std::vector<double>& thresholds,
                const PropagationModel& propagation, const NoiseModel& noise,
                double alpha, int max_bits) {
    int n = code.n_k;
    if (n > max_bits || n > 62) {
        throw std::invalid_argument("exact_pd: enumeration over 2^" + std::to_string(n) +
                                    " words refused");
    }

    // Bit probabilities under each hypothesis, target at the region center.
    std::vector<double> p1(static_cast<std::size_t>(code.m) * n);
    for (int j = 0; j < code.m; ++j) {
        Position center = partition.centers.at(j);
        for (int i = 0; i < n; ++i) {
            Position pos = field.positions.at(code.column_sensor[i]);
            double a = safe_amplitude(propagation, center, pos);
            double p = comp_cdf(noise, thresholds[i] - a);
            p1[static_cast<std::size_t>(j) * n + i] = (1.0 - alpha) * p + alpha * (1.0 - p);
        }
    }

    std::vector<std::uint64_t> rows(code.m);
    for (int j = 0; j < code.m; ++j) rows[j] = code.row(j)[0];

    // Kahan-compensated accumulation over all 2^n words.
    double sum = 0.0, comp = 0.0;
    std::vector<int> argmin;
    argmin.reserve(code.m);
    for (std::uint64_t word = 0; word < (1ULL << n); ++word) {
        int best = std::numeric_limits<int>::max();
        argmin.clear();
        for (int j = 0; j < code.m; ++j) {
            int d = std::popcount(word ^ rows[j]);
            if (d < best) {
                best = d;
                argmin.clear();
            }
            if (d == best) argmin.push_back(j);
        }
        double mass = 0.0;
        for (int j : argmin) {
            const double* pj = &p1[static_cast<std::size_t>(j) * n];
            double prob = 1.0;
            for (int i = 0; i < n; ++i) {
                prob *= (word >> i) & 1ULL ? pj[i] : 1.0 - pj[i];
            }
            mass += prob;
        }
        double term = mass / argmin.size() - comp;
        double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    return sum / code.m;
}

BoundReport detection_bound(const CodeMatrix& code, const Partition& partition,
                            const SensorField& field,
                            const std::vector<double>& thresholds,
                            const PropagationModel& propagation, const NoiseModel& noise,
                            double alpha, double theta_grid_resolution) {
    BoundReport report;
    report.d_m = 2 * code.n_k / code.m;
    report.condition_ok = true;
    report.lambda_j_max.assign(code.m, -std::numeric_limits<double>::infinity());

    for (int j = 0; j < code.m && report.condition_ok; ++j) {
        const Rect& region = partition.regions[j];
        double res = theta_grid_resolution > 0.0
                         ? theta_grid_resolution
                         : std::min(region.width(), region.height()) / 16.0;
        int nx = std::max(1, static_cast<int>(std::lround(region.width() / res)));
        int ny = std::max(1, static_cast<int>(std::lround(region.height() / res)));

        for (int gy = 0; gy < ny && report.condition_ok; ++gy) {
            double y = region.y_min + (gy + 0.5) * region.height() / ny;
            for (int gx = 0; gx < nx; ++gx) {
                Position theta{region.x_min + (gx + 0.5) * region.width() / nx, y};

                // q values for row j at this sample, one pass over columns.
                std::vector<double> qcol(code.n_k);
                for (int i = 0; i < code.n_k; ++i) {
                    Position pos = field.positions.at(code.column_sensor[i]);
                    double a = safe_amplitude(propagation, theta, pos);
                    double fbar = comp_cdf(noise, thresholds[i] - a);
                    qcol[i] = q_from_fbar(fbar, code.column_region[i] == j, alpha);
                }

                double lam_theta = -std::numeric_limits<double>::infinity();
                for (int l = 0; l < code.m; ++l) {
                    if (l == j) continue;
                    double sum = 0.0;
                    for (int i = 0; i < code.n_k; ++i) {
                        int r = code.column_region[i];
                        if (r == j || r == l) sum += qcol[i];
                    }
                    if (!(sum < static_cast<double>(code.n_k) / code.m)) {
                        report.condition_ok = false;
                        break;
                    }
                    lam_theta = std::max(lam_theta, (2.0 * sum - report.d_m) / report.d_m);
                }
                if (!report.condition_ok) break;
                report.lambda_j_max[j] = std::max(report.lambda_j_max[j], lam_theta);
            }
        }
    }

    if (!report.condition_ok) {
        report.lambda_max = std::numeric_limits<double>::quiet_NaN();
        report.pd_lower = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    report.lambda_max =
        *std::max_element(report.lambda_j_max.begin(), report.lambda_j_max.end());
    double miss = (code.m - 1) *
                  std::pow(1.0 - report.lambda_max * report.lambda_max, report.d_m / 2.0);
    report.pd_lower = std::min(1.0, std::max(0.0, 1.0 - miss));
    return report;
}

double overall_pd(const std::vector<double>& per_iteration) {
    double prod = 1.0;
    for (double p : per_iteration) {
        if (p < 0.0 || p > 1.0) {
            throw std::invalid_argument("overall_pd: probabilities must lie in [0, 1]");
        }
        prod *= p;
    }
    return prod;
}

double fault_tolerance_fraction(int m, long long n, int k) {
    if (m < 2 || n < 1 || k < 0) {
        throw std::invalid_argument("fault_tolerance_fraction: need m >= 2, n >= 1, k >= 0");
    }
    return 2.0 / m - std::pow(static_cast<double>(m), k) /
                         (std::pow(2.0, k) * static_cast<double>(n));
}

IterationContext make_iteration_context(const SensorField& field,
                                        const PropagationModel& propagation,
                                        int m, int k) {
    std::vector<int> active(field.size());
    for (int i = 0; i < field.size(); ++i) active[i] = i;
    std::vector<Rect> parents{field.roi};

    IterationContext ctx;
    for (int level = 0;; ++level) {
        Partition part = split_region(parents, m, field, active);
        if (level == k) {
            ctx.thresholds = thresholds_for(part, propagation, field);
            ctx.code = build_code_matrix(part);
            ctx.partition = std::move(part);
            return ctx;
        }
        parents = {part.regions[0]};
        active = part.sensors_in(0);
    }
}

}  // namespace codedloc
