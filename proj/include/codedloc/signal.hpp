#pragma once

#include <cstdint>
#include <vector>

#include "codedloc/geometry.hpp"
#include "codedloc/rng.hpp"

namespace codedloc {

// Isotropic power attenuation: amplitude^2 = p0 * (d0 / d)^n.
struct PropagationModel {
    double p0 = 200.0;
    double d0 = 1.0;
    double path_loss = 2.0;
};

// Zero-mean additive Gaussian sensing noise. sigma == 0 degenerates to the
// noiseless step model.
struct NoiseModel {
    double sigma = 1.0;
};

// Signal amplitude at `sensor` from a target at `target`. Throws
// std::domain_error when the two coincide.
double amplitude(const PropagationModel& model, Position target, Position sensor);

// P(noise > x); complementary CDF of the sensing noise.
double comp_cdf(const NoiseModel& noise, double x);

// Per-sensor quantizer thresholds for the current partition: the amplitude a
// sensor would measure from a target at its own region's center. Aligned
// with partition.sensors. Throws std::domain_error if a sensor sits exactly
// on its region center.
std::vector<double> thresholds_for(const Partition& partition,
                                   const PropagationModel& model,
                                   const SensorField& field);

// One round of local sensing: bit i is 1 iff amplitude + noise exceeds the
// sensor's threshold. Aligned with `active`.
std::vector<std::uint8_t> sense_and_quantize(const PropagationModel& model,
                                             const NoiseModel& noise,
                                             Position target,
                                             const SensorField& field,
                                             const std::vector<int>& active,
                                             const std::vector<double>& thresholds,
                                             Rng& rng);

}  // namespace codedloc
