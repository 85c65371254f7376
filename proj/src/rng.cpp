#include "ros/rng.hpp"

#include <cmath>

namespace ros {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + 0x9E3779B97F4A7C15ULL * (index + 1));
}

std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
    // Lemire-style rejection on the top of the range.
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
    std::uint64_t r = rng();
    while (r > limit) r = rng();
    return r % bound;
}

double exponential(Rng& rng) {
    return -std::log1p(-uniform01(rng));
}

}  // namespace ros
