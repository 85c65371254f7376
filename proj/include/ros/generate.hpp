#ifndef ROS_GENERATE_HPP
#define ROS_GENERATE_HPP

#include <cstddef>
#include <cstdint>

#include "ros/graph.hpp"

namespace ros {

/// Attempts made by generate_random_regular before giving up.
inline constexpr std::size_t kRegularRetryBudget = 10'000;

/**
 * Uniform simple r-regular graph on n nodes with unit weights.
 *
 * Pairing (configuration) model: the n*r half-edges are shuffled and paired
 * off; any pairing with a self-loop or a repeated pair is discarded as a whole
 * and redrawn. Throws Error(argument) when n*r is odd or r >= n, and
 * Error(generation) after kRegularRetryBudget rejected pairings.
 */
WeightedGraph generate_random_regular(std::size_t n, std::size_t r, std::uint64_t seed);

/// Multiplies every edge weight by an independent draw from U[low, high].
WeightedGraph perturb_weights(const WeightedGraph& g, double low, double high, std::uint64_t seed);

}  // namespace ros

#endif  // ROS_GENERATE_HPP
