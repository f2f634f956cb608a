#pragma once

#include <cstdint>

namespace codedloc {

// Counter-based random stream. Every output is a 64-bit hash of
// (stream key, counter), so a stream is fully determined by the chain of
// ids used to derive it and never by execution order. This is what makes
// parallel Monte-Carlo runs reproducible: trial t always sees the stream
// derive(seed, point, t) no matter which worker executes it.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    // Child stream keyed by (this stream's origin, id). Independent of how
    // many values were already drawn from the parent.
    Rng derive(std::uint64_t id) const;
    Rng derive(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t next_u64();

    // Uniform double in [0, 1).
    double uniform();
    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);
    // Standard normal (Box-Muller, one value cached).
    double normal();
    double normal(double mean, double stddev);
    // Rayleigh with the given scale parameter.
    double rayleigh(double scale);

    // UniformRandomBitGenerator interface.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next_u64(); }

private:
    std::uint64_t key_ = 0;      // fixed per stream
    std::uint64_t counter_ = 0;  // advances per draw
    double cached_ = 0.0;
    bool has_cached_ = false;

    Rng() = default;
};

}  // namespace codedloc
