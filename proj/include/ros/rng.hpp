#ifndef ROS_RNG_HPP
#define ROS_RNG_HPP

#include <cstdint>
#include <random>

namespace ros {

// std::mt19937_64 has a fully specified output sequence; the distributions in
// <random> do not, so the conversions below are written out to keep results
// identical across standard libraries.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed number `index` of `base`: splitmix64(base + 0x9E3779B97F4A7C15 * (index + 1)).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [low, high).
inline double uniform(Rng& rng, double low, double high) {
    return low + (high - low) * uniform01(rng);
}

/// Unbiased integer in [0, bound) by rejection. bound must be > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

/// Standard exponential draw, -log(1 - U).
double exponential(Rng& rng);

}  // namespace ros

#endif  // ROS_RNG_HPP
