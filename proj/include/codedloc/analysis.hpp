#pragma once

#include <vector>

#include "codedloc/coding.hpp"
#include "codedloc/geometry.hpp"
#include "codedloc/signal.hpp"

namespace codedloc {

// Per-sensor mismatch probabilities against each hypothesis row for a fixed
// target location: q[i][j] = P(received bit i differs from row j | theta),
// with the independent-attack adjustment folded in.
struct QMatrix {
    int n_k = 0;
    int m = 0;
    double alpha = 0.0;
    std::vector<double> q;  // row-major: q[i * m + j]

    double at(int i, int j) const { return q[static_cast<std::size_t>(i) * m + j]; }
};

// Mismatch probability of column `i` against hypothesis `j` for a target at
// `theta`. Distances are clamped away from zero so region-grid scans cannot
// hit the propagation singularity.
double q_value(Position theta, int i, int j, const CodeMatrix& code,
               const SensorField& field, const std::vector<double>& thresholds,
               const PropagationModel& propagation, const NoiseModel& noise,
               double alpha);

QMatrix build_qmatrix(Position theta, const CodeMatrix& code, const SensorField& field,
                      const std::vector<double>& thresholds,
                      const PropagationModel& propagation, const NoiseModel& noise,
                      double alpha);

// True iff sum_{i in S_j u S_l} q_{i,j} < n_k / m for every l != j, the
// negative-drift condition behind the detection bound.
bool condition_check(int j, const CodeMatrix& code, const QMatrix& q);

// Exact per-iteration detection probability by enumerating all received
// words, with per-sensor bit probabilities evaluated at the region centers
// and the tie reward 1/q_u. Refuses instances with n_k > max_bits.
double exact_pd(const CodeMatrix& code, const Partition& partition,
                const SensorField& field, const std::vector<double>& thresholds,
                const PropagationModel& propagation, const NoiseModel& noise,
                double alpha, int max_bits = 22);

struct BoundReport {
    std::vector<double> lambda_j_max;  // per region, maximized over the theta grid
    double lambda_max = 0.0;
    double pd_lower = 0.0;             // 1 - (m-1)(1 - lambda_max^2)^(d_m/2), clamped to [0,1]
    int d_m = 0;
    bool condition_ok = false;         // false => pd_lower is NaN
};

// Evaluates the detection-probability lower bound by scanning a uniform
// theta grid inside every region (spacing `theta_grid_resolution`; 0 picks
// region side / 16).
BoundReport detection_bound(const CodeMatrix& code, const Partition& partition,
                            const SensorField& field,
                            const std::vector<double>& thresholds,
                            const PropagationModel& propagation, const NoiseModel& noise,
                            double alpha, double theta_grid_resolution = 0.0);

// Product of per-iteration detection probabilities (empty product = 1).
double overall_pd(const std::vector<double>& per_iteration);

// Largest Byzantine fraction the exclusion scheme absorbs at iteration k:
// 2/m - m^k / (2^k n).
double fault_tolerance_fraction(int m, long long n, int k);

// Geometry, code and thresholds of iteration k on the canonical descent
// chain (always entering region 0), used for per-iteration analysis.
struct IterationContext {
    Partition partition;
    CodeMatrix code;
    std::vector<double> thresholds;
};

IterationContext make_iteration_context(const SensorField& field,
                                        const PropagationModel& propagation,
                                        int m, int k);

}  // namespace codedloc
