#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codedloc/adversary_channel.hpp"
#include "codedloc/coding.hpp"
#include "codedloc/decoding.hpp"
#include "codedloc/geometry.hpp"
#include "codedloc/rng.hpp"
#include "codedloc/signal.hpp"

namespace codedloc {

enum class Scheme { basic, exclusion };
enum class DecodeRule { hard, soft };

// Everything one trial needs besides the field and the target.
// k_stop is the number of iterations executed (k = 0 .. k_stop-1); the final
// ROI then holds N/M^k_stop sensors (basic) or N*(2/M)^k_stop (exclusion).
struct SchemeConfig {
    Scheme scheme = Scheme::basic;
    int m = 4;
    int k_stop = 2;
    DecodeRule decoding = DecodeRule::hard;
    PropagationModel propagation;
    NoiseModel noise;
    AttackModel attack;
    FadingChannel channel;
};

// Empty when the configuration is runnable; otherwise one message per
// violated constraint.
std::vector<std::string> validate(const SchemeConfig& config, int n_sensors);

struct IterationRecord {
    Partition partition;
    CodeMatrix code;
    DecodeOutcome outcome;
    std::vector<double> thresholds;
    std::vector<std::uint8_t> sent;      // word leaving the sensors (post-attack)
    std::vector<std::uint8_t> received;  // hard bits the FC works from
    std::vector<double> psi;             // reliabilities (soft path only)
};

struct TrialTrace {
    std::vector<IterationRecord> iterations;
};

struct Estimate {
    Position theta_hat;
    std::vector<std::vector<int>> region_trace;    // chosen region(s) per iteration
    bool correct_region = false;                   // every iteration kept the target
    std::vector<std::uint8_t> iteration_correct;   // per-iteration containment
};

// Runs the full iterative pipeline: split, threshold, sense, attack,
// (channel), decode, shrink; then the scheme's final estimator.
Estimate run_trial(const SensorField& field, const SchemeConfig& config,
                   Position target, Rng& rng, TrialTrace* trace = nullptr);

// Unweighted average of the remaining sensor positions.
Position estimate_centroid(const SensorField& field, const std::vector<int>& final_active);

// Average weighted by the final 1-bit decisions; all-zero words fall back to
// the centroid.
Position estimate_weighted(const SensorField& field, const std::vector<int>& final_active,
                           const std::vector<std::uint8_t>& u_final);

// Maximum-likelihood baseline: coarse grid search over `roi` followed by
// coordinate-descent refinement with step halving down to 1e-4.
Position mle_estimate(const std::vector<std::uint8_t>& u, const SensorField& field,
                      const std::vector<int>& sensors,
                      const std::vector<double>& thresholds,
                      const PropagationModel& propagation, const NoiseModel& noise,
                      const Rect& roi, int grid_cols = 64, int grid_rows = 64,
                      bool refine = true);

}  // namespace codedloc
