#include "codedloc/adversary_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace codedloc {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kSqrt2Pi = 2.5066282746310002;

// exp(z^2) * erfc(z) for z >= 0 without overflow.
double erfcx_pos(double z) {
    if (z <= 25.0) return std::exp(z * z) * std::erfc(z);
    // Asymptotic series, accurate to machine precision for z > 25.
    double iz2 = 1.0 / (2.0 * z * z);
    double term = 1.0, sum = 1.0, sign = -1.0, odd = 1.0;
    for (int k = 1; k <= 10; ++k) {
        term *= odd * iz2;
        sum += sign * term;
        sign = -sign;
        odd += 2.0;
    }
    return sum / (z * kSqrtPi);
}

// log of g(x) = exp(-x^2/2) + sqrt(2*pi) * x * Phi(x), the half-line Gaussian
// moment that appears in the Rayleigh-marginalized density. For x < 0 the two
// terms nearly cancel, so the scaled complementary form is used instead.
double log_g(double x) {
    if (x >= 0.0) {
        double phi = 0.5 * std::erfc(-x / kSqrt2);
        return std::log(std::exp(-0.5 * x * x) + kSqrt2Pi * x * phi);
    }
    double ax = -x;
    double bracket;
    if (ax < 30.0) {
        bracket = 1.0 - 0.5 * kSqrt2Pi * ax * erfcx_pos(ax / kSqrt2);
    } else {
        // bracket = 1/x^2 - 3/x^4 + 15/x^6 - ...
        double ix2 = 1.0 / (x * x);
        double term = ix2, sum = ix2, sign = -1.0, odd = 3.0;
        for (int k = 2; k <= 10; ++k) {
            term *= odd * ix2;
            sum += sign * term;
            sign = -sign;
            odd += 2.0;
        }
        bracket = sum;
    }
    return -0.5 * x * x + std::log(bracket);
}

struct ChannelCoeffs {
    double a;         // 1/s^2 + e_b/sigma_f^2
    double x_per_v;   // x = v * sqrt(e_b) / (sigma_f^2 * sqrt(a))
    double log_norm;  // log(sqrt(2*pi) * sigma_f * s^2 * a)
    double inv_2sf2;  // 1 / (2 * sigma_f^2)
};

ChannelCoeffs coeffs(const FadingChannel& ch) {
    if (ch.sigma_f <= 0.0) {
        throw std::domain_error("fading channel: sigma_f must be > 0");
    }
    if (ch.e_b <= 0.0 || ch.mean_h2 <= 0.0) {
        throw std::domain_error("fading channel: e_b and mean_h2 must be > 0");
    }
    double s2 = 0.5 * ch.mean_h2;
    double sf2 = ch.sigma_f * ch.sigma_f;
    ChannelCoeffs c;
    c.a = 1.0 / s2 + ch.e_b / sf2;
    c.x_per_v = std::sqrt(ch.e_b) / (sf2 * std::sqrt(c.a));
    c.log_norm = std::log(kSqrt2Pi * ch.sigma_f * s2 * c.a);
    c.inv_2sf2 = 0.5 / sf2;
    return c;
}

}  // namespace

double FadingChannel::rayleigh_scale() const { return std::sqrt(0.5 * mean_h2); }

std::vector<int> sample_byzantine_set(const AttackModel& attack, int n_sensors, Rng& rng) {
    if (attack.alpha < 0.0 || attack.alpha >= 1.0) {
        throw std::invalid_argument("sample_byzantine_set: alpha must lie in [0, 1)");
    }
    // Round half to even so the set size is platform-independent.
    int count = static_cast<int>(std::nearbyint(attack.alpha * n_sensors));
    count = std::min(count, n_sensors);
    std::vector<int> idx(n_sensors);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng.uniform_below(n_sensors - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<std::uint8_t> apply_byzantine(const std::vector<std::uint8_t>& decisions,
                                          const std::vector<int>& active,
                                          const std::vector<int>& byzantine_sorted,
                                          double flip_prob, Rng& rng) {
    if (decisions.size() != active.size()) {
        throw std::invalid_argument("apply_byzantine: decisions not aligned with active set");
    }
    std::vector<std::uint8_t> out(decisions);
    if (flip_prob <= 0.0 || byzantine_sorted.empty()) return out;
    for (std::size_t k = 0; k < active.size(); ++k) {
        if (!std::binary_search(byzantine_sorted.begin(), byzantine_sorted.end(), active[k])) {
            continue;
        }
        if (flip_prob >= 1.0 || rng.uniform() < flip_prob) out[k] = 1 - out[k];
    }
    return out;
}

std::vector<double> transmit(const std::vector<std::uint8_t>& u,
                             const FadingChannel& channel, Rng& rng) {
    if (channel.kind != ChannelKind::rayleigh) {
        throw std::invalid_argument("transmit: only the rayleigh channel produces analog values");
    }
    double s = channel.rayleigh_scale();
    double root_eb = std::sqrt(channel.e_b);
    std::vector<double> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        double h = rng.rayleigh(s);
        double sign = u[i] ? -1.0 : 1.0;
        v[i] = h * sign * root_eb + channel.sigma_f * rng.normal();
    }
    return v;
}

double bit_log_likelihood(const FadingChannel& channel, double v, int bit) {
    ChannelCoeffs c = coeffs(channel);
    double x = (bit ? -v : v) * c.x_per_v;
    return -c.log_norm - v * v * c.inv_2sf2 + 0.5 * x * x + log_g(x);
}

double bit_likelihood(const FadingChannel& channel, double v, int bit) {
    return std::exp(bit_log_likelihood(channel, v, bit));
}

double reliability_one(const FadingChannel& channel, double v) {
    ChannelCoeffs c = coeffs(channel);
    double x = v * c.x_per_v;
    return log_g(x) - log_g(-x);
}

std::vector<double> reliability(const FadingChannel& channel, const std::vector<double>& v) {
    ChannelCoeffs c = coeffs(channel);
    std::vector<double> psi(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double x = v[i] * c.x_per_v;
        psi[i] = log_g(x) - log_g(-x);
    }
    return psi;
}

}  // namespace codedloc
