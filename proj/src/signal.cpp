#include "codedloc/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace codedloc {

double amplitude(const PropagationModel& model, Position target, Position sensor) {
    double d = distance(target, sensor);
    if (d <= 0.0) {
        throw std::domain_error("amplitude: zero distance between target and sensor");
    }
    return std::sqrt(model.p0) * std::pow(model.d0 / d, 0.5 * model.path_loss);
}

double comp_cdf(const NoiseModel& noise, double x) {
    if (noise.sigma == 0.0) {
        if (x < 0.0) return 1.0;
        if (x > 0.0) return 0.0;
        return 0.5;
    }
    return 0.5 * std::erfc(x / (noise.sigma * 1.4142135623730951));
}

std::vector<double> thresholds_for(const Partition& partition,
                                   const PropagationModel& model,
                                   const SensorField& field) {
    std::vector<double> eta(partition.sensors.size());
    for (std::size_t k = 0; k < partition.sensors.size(); ++k) {
        Position sensor = field.positions.at(partition.sensors[k]);
        Position center = partition.centers.at(partition.region_of[k]);
        if (distance(sensor, center) <= 0.0) {
            throw std::domain_error("thresholds_for: sensor coincides with its region center");
        }
        eta[k] = amplitude(model, center, sensor);
    }
    return eta;
}

std::vector<std::uint8_t> sense_and_quantize(const PropagationModel& model,
                                             const NoiseModel& noise,
                                             Position target,
                                             const SensorField& field,
                                             const std::vector<int>& active,
                                             const std::vector<double>& thresholds,
                                             Rng& rng) {
    if (active.size() != thresholds.size()) {
        throw std::invalid_argument("sense_and_quantize: thresholds not aligned with active set");
    }
    std::vector<std::uint8_t> bits(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
        double a = amplitude(model, target, field.positions.at(active[k]));
        double s = noise.sigma > 0.0 ? a + noise.sigma * rng.normal() : a;
        bits[k] = s > thresholds[k] ? 1 : 0;
    }
    return bits;
}

}  // namespace codedloc
