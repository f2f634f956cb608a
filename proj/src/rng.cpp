#include "codedloc/rng.hpp"

#include <cmath>

namespace codedloc {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;  // 2^64 / golden ratio

// SplitMix64 finalizer; full-avalanche 64-bit mixer.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t combine(std::uint64_t key, std::uint64_t id) {
    return mix64(key + kGamma + mix64(id + kGamma));
}

}  // namespace

Rng::Rng(std::uint64_t seed) { key_ = mix64(seed + kGamma); }

Rng Rng::derive(std::uint64_t id) const {
    Rng child;
    child.key_ = combine(key_, id);
    return child;
}

Rng Rng::derive(std::uint64_t a, std::uint64_t b) const {
    return derive(a).derive(b);
}

std::uint64_t Rng::next_u64() {
    counter_ += kGamma;
    return mix64(key_ ^ counter_);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
    // Multiply-shift mapping; bias is O(n / 2^64), negligible here.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller on (0,1] uniforms; explicit algorithm so results do not
    // depend on the standard library's distribution implementation.
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

double Rng::normal(double mean, double stddev) {
    return mean + stddev * normal();
}

double Rng::rayleigh(double scale) {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    return scale * std::sqrt(-2.0 * std::log(u1));
}

}  // namespace codedloc
