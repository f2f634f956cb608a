#include "codedloc/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace codedloc {

std::vector<std::string> validate(const SchemeConfig& config, int n_sensors) {
    std::vector<std::string> errors;
    auto err = [&](const std::string& msg) { errors.push_back(msg); };

    if (config.m < 2) err("m: must be >= 2");
    if (config.k_stop < 1) err("k_stop: must be >= 1");
    if (config.scheme == Scheme::exclusion && config.m % 2 != 0) {
        err("m: exclusion scheme requires an even region count");
    }
    if (config.propagation.p0 <= 0.0) err("p0: must be > 0");
    if (config.propagation.d0 <= 0.0) err("d0: must be > 0");
    if (config.propagation.path_loss <= 0.0) err("path_loss: must be > 0");
    if (config.noise.sigma < 0.0) err("sigma: must be >= 0");
    if (config.attack.alpha < 0.0 || config.attack.alpha >= 1.0) {
        err("alpha: must lie in [0, 1)");
    }
    if (config.attack.flip_prob < 0.0 || config.attack.flip_prob > 1.0) {
        err("flip_prob: must lie in [0, 1]");
    }
    if (config.channel.kind == ChannelKind::rayleigh) {
        if (config.channel.e_b <= 0.0) err("e_b: must be > 0");
        if (config.channel.sigma_f <= 0.0) err("sigma_f: must be > 0");
        if (config.channel.mean_h2 <= 0.0) err("mean_h2: must be > 0");
    } else if (config.decoding == DecodeRule::soft) {
        err("decoding: soft decoding needs the rayleigh channel");
    }

    if (config.m >= 2 && config.k_stop >= 1 && n_sensors >= 1) {
        long long active = n_sensors;
        for (int k = 0; k < config.k_stop; ++k) {
            if (active % config.m != 0) {
                err("k_stop: " + std::to_string(active) + " active sensors at iteration " +
                    std::to_string(k) + " not divisible by m");
                break;
            }
            if (active <= config.m) {
                err("k_stop: iteration " + std::to_string(k) +
                    " would leave the code matrix with no more columns than rows");
                break;
            }
            active = config.scheme == Scheme::exclusion ? 2 * (active / config.m)
                                                        : active / config.m;
        }
    }
    return errors;
}

namespace {

std::vector<std::uint8_t> sign_detect(const std::vector<double>& v) {
    std::vector<std::uint8_t> bits(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v[i] < 0.0 ? 1 : 0;
    return bits;
}

bool chosen_contains(const Partition& part, const std::vector<int>& chosen, Position p) {
    for (int j : chosen) {
        if (part.regions[j].contains(p, part.outer)) return true;
    }
    return false;
}

}  // namespace

Estimate run_trial(const SensorField& field, const SchemeConfig& config,
                   Position target, Rng& rng, TrialTrace* trace) {
    {
        auto errors = validate(config, field.size());
        if (!errors.empty()) {
            throw std::invalid_argument("run_trial: " + errors.front());
        }
    }
    if (!field.roi.contains(target, field.roi)) {
        throw std::invalid_argument("run_trial: target outside the ROI");
    }
    for (const Position& p : field.positions) {
        if (p.x == target.x && p.y == target.y) {
            throw std::invalid_argument("run_trial: target coincides with a sensor");
        }
    }

    bool exclusion = config.scheme == Scheme::exclusion;
    bool fading = config.channel.kind == ChannelKind::rayleigh;
    bool soft = config.decoding == DecodeRule::soft;

    std::vector<int> byzantine =
        sample_byzantine_set(config.attack, field.size(), rng);

    std::vector<int> active(field.size());
    for (int i = 0; i < field.size(); ++i) active[i] = i;
    std::vector<Rect> roi_parts{field.roi};

    Estimate est;
    std::vector<std::uint8_t> last_word;  // final-iteration hard bits, FC's view

    for (int k = 0; k < config.k_stop; ++k) {
        Partition part = split_region(roi_parts, config.m, field, active);
        std::vector<double> eta = thresholds_for(part, config.propagation, field);
        CodeMatrix code = build_code_matrix(part);

        std::vector<std::uint8_t> decisions = sense_and_quantize(
            config.propagation, config.noise, target, field, part.sensors, eta, rng);
        std::vector<std::uint8_t> sent = apply_byzantine(
            decisions, part.sensors, byzantine, config.attack.flip_prob, rng);

        DecodeOutcome outcome;
        std::vector<std::uint8_t> received;
        std::vector<double> psi;
        if (fading) {
            std::vector<double> v = transmit(sent, config.channel, rng);
            received = sign_detect(v);
            if (soft) {
                psi = reliability(config.channel, v);
                outcome = soft_decode(psi, code, rng, exclusion);
            } else {
                outcome = exclusion ? exclusion_decode(received, code, rng)
                                    : hamming_decode(received, code, rng);
            }
        } else {
            received = sent;
            outcome = exclusion ? exclusion_decode(received, code, rng)
                                : hamming_decode(received, code, rng);
        }

        bool hit = chosen_contains(part, outcome.chosen, target);
        est.iteration_correct.push_back(hit ? 1 : 0);
        est.region_trace.push_back(outcome.chosen);

        // Shrink: keep the chosen rectangles and the sensors inside them.
        std::vector<Rect> next_parts;
        std::vector<int> next_active;
        std::vector<std::uint8_t> next_word;
        for (int j : outcome.chosen) next_parts.push_back(part.regions[j]);
        for (std::size_t i = 0; i < part.sensors.size(); ++i) {
            for (int j : outcome.chosen) {
                if (part.region_of[i] == j) {
                    next_active.push_back(part.sensors[i]);
                    next_word.push_back(received[i]);
                    break;
                }
            }
        }

        if (trace) {
            IterationRecord rec;
            rec.partition = std::move(part);
            rec.code = std::move(code);
            rec.outcome = outcome;
            rec.thresholds = std::move(eta);
            rec.sent = std::move(sent);
            rec.received = received;
            rec.psi = std::move(psi);
            trace->iterations.push_back(std::move(rec));
        }

        roi_parts = std::move(next_parts);
        active = std::move(next_active);
        last_word = std::move(next_word);
    }

    est.correct_region = true;
    for (std::uint8_t c : est.iteration_correct) est.correct_region &= (c != 0);

    est.theta_hat = exclusion ? estimate_weighted(field, active, last_word)
                              : estimate_centroid(field, active);
    return est;
}

Position estimate_centroid(const SensorField& field, const std::vector<int>& final_active) {
    if (final_active.empty()) {
        throw std::invalid_argument("estimate_centroid: empty sensor set");
    }
    double sx = 0.0, sy = 0.0;
    for (int i : final_active) {
        sx += field.positions.at(i).x;
        sy += field.positions.at(i).y;
    }
    double n = static_cast<double>(final_active.size());
    return {sx / n, sy / n};
}

Position estimate_weighted(const SensorField& field, const std::vector<int>& final_active,
                           const std::vector<std::uint8_t>& u_final) {
    if (final_active.size() != u_final.size()) {
        throw std::invalid_argument("estimate_weighted: word not aligned with sensor set");
    }
    double sx = 0.0, sy = 0.0, sw = 0.0;
    for (std::size_t k = 0; k < final_active.size(); ++k) {
        if (!u_final[k]) continue;
        sx += field.positions.at(final_active[k]).x;
        sy += field.positions.at(final_active[k]).y;
        sw += 1.0;
    }
    if (sw == 0.0) return estimate_centroid(field, final_active);
    return {sx / sw, sy / sw};
}

namespace {

// Log-likelihood of the received word at candidate location theta. May be
// -inf where a term's probability underflows to 0.
double word_log_likelihood(Position theta, const std::vector<std::uint8_t>& u,
                           const SensorField& field, const std::vector<int>& sensors,
                           const std::vector<double>& thresholds,
                           const PropagationModel& prop, const NoiseModel& noise,
                           bool clamped) {
    double total = 0.0;
    for (std::size_t k = 0; k < sensors.size(); ++k) {
        Position pos = field.positions.at(sensors[k]);
        double d = std::max(distance(theta, pos), 1e-12);
        double a = std::sqrt(prop.p0) * std::pow(prop.d0 / d, 0.5 * prop.path_loss);
        double p = comp_cdf(noise, thresholds[k] - a);
        if (clamped) p = std::min(std::max(p, 1e-300), 1.0 - 1e-16);
        total += u[k] ? std::log(p) : std::log1p(-p);
        if (!clamped && total == -std::numeric_limits<double>::infinity()) break;
    }
    return total;
}

}  // namespace

Position mle_estimate(const std::vector<std::uint8_t>& u, const SensorField& field,
                      const std::vector<int>& sensors,
                      const std::vector<double>& thresholds,
                      const PropagationModel& propagation, const NoiseModel& noise,
                      const Rect& roi, int grid_cols, int grid_rows, bool refine) {
    if (u.size() != sensors.size() || thresholds.size() != sensors.size()) {
        throw std::invalid_argument("mle_estimate: word/thresholds not aligned with sensors");
    }
    if (noise.sigma <= 0.0) {
        throw std::invalid_argument("mle_estimate: sigma must be > 0");
    }
    if (grid_cols < 1 || grid_rows < 1) {
        throw std::invalid_argument("mle_estimate: grid must be at least 1x1");
    }

    auto score = [&](Position theta, bool clamped) {
        return word_log_likelihood(theta, u, field, sensors, thresholds, propagation,
                                   noise, clamped);
    };

    Position best{roi.center()};
    double best_score = -std::numeric_limits<double>::infinity();
    for (int gy = 0; gy < grid_rows; ++gy) {
        double y = roi.y_min + (gy + 0.5) * roi.height() / grid_rows;
        for (int gx = 0; gx < grid_cols; ++gx) {
            Position theta{roi.x_min + (gx + 0.5) * roi.width() / grid_cols, y};
            double s = score(theta, false);
            if (s > best_score) {
                best_score = s;
                best = theta;
            }
        }
    }

    if (best_score == -std::numeric_limits<double>::infinity()) {
        // Degenerate likelihood everywhere; fall back to the clamped score and
        // return its grid argmax directly.
        for (int gy = 0; gy < grid_rows; ++gy) {
            double y = roi.y_min + (gy + 0.5) * roi.height() / grid_rows;
            for (int gx = 0; gx < grid_cols; ++gx) {
                Position theta{roi.x_min + (gx + 0.5) * roi.width() / grid_cols, y};
                double s = score(theta, true);
                if (s > best_score) {
                    best_score = s;
                    best = theta;
                }
            }
        }
        return best;
    }

    if (refine) {
        double step = 0.5 * std::max(roi.width() / grid_cols, roi.height() / grid_rows);
        while (step >= 1e-4) {
            bool moved = false;
            const Position candidates[4] = {{best.x + step, best.y},
                                            {best.x - step, best.y},
                                            {best.x, best.y + step},
                                            {best.x, best.y - step}};
            for (Position cand : candidates) {
                cand.x = std::min(std::max(cand.x, roi.x_min), roi.x_max);
                cand.y = std::min(std::max(cand.y, roi.y_min), roi.y_max);
                double s = score(cand, false);
                if (s > best_score) {
                    best_score = s;
                    best = cand;
                    moved = true;
                }
            }
            if (!moved) step *= 0.5;
        }
    }
    return best;
}

}  // namespace codedloc
