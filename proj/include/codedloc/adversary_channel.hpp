#pragma once

#include <cstdint>
#include <vector>

#include "codedloc/rng.hpp"

namespace codedloc {

// Independent data-falsification attack: a fixed fraction of sensors,
// re-drawn each trial, flips its bit with probability flip_prob before
// transmission.
struct AttackModel {
    double alpha = 0.0;      // fraction of compromised sensors, in [0, 1)
    double flip_prob = 1.0;  // per-bit flip probability for compromised sensors
};

enum class ChannelKind { ideal, rayleigh };

// Sensor-to-fusion-center link. Under Rayleigh fading the observed value is
// v = h * (-1)^u * sqrt(e_b) + n with h ~ Rayleigh and n ~ N(0, sigma_f^2);
// mean_h2 = E[h^2] fixes the Rayleigh scale.
struct FadingChannel {
    ChannelKind kind = ChannelKind::ideal;
    double e_b = 1.0;
    double sigma_f = 3.0;
    double mean_h2 = 1.0;

    double rayleigh_scale() const;
};

// Uniformly drawn set of round-half-even(alpha * n_sensors) distinct sensor
// indices, returned sorted.
std::vector<int> sample_byzantine_set(const AttackModel& attack, int n_sensors, Rng& rng);

// Applies the attack to the local decisions of `active` (aligned vectors);
// `byzantine_sorted` holds global sensor indices in ascending order.
std::vector<std::uint8_t> apply_byzantine(const std::vector<std::uint8_t>& decisions,
                                          const std::vector<int>& active,
                                          const std::vector<int>& byzantine_sorted,
                                          double flip_prob, Rng& rng);

// One fading-channel use per bit.
std::vector<double> transmit(const std::vector<std::uint8_t>& u,
                             const FadingChannel& channel, Rng& rng);

// Density of the received value given the transmitted bit, marginalized over
// the Rayleigh coefficient (the fusion center knows channel statistics, not
// realizations). Closed form; see bit_log_likelihood for the pieces.
double bit_likelihood(const FadingChannel& channel, double v, int bit);
double bit_log_likelihood(const FadingChannel& channel, double v, int bit);

// Per-bit log-likelihood ratio ln p(v|u=0) / p(v|u=1). Positive values favor
// a transmitted 0; antisymmetric and strictly increasing in v.
double reliability_one(const FadingChannel& channel, double v);
std::vector<double> reliability(const FadingChannel& channel, const std::vector<double>& v);

}  // namespace codedloc
