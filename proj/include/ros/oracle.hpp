#ifndef ROS_ORACLE_HPP
#define ROS_ORACLE_HPP

#include <cstddef>

#include "ros/graph.hpp"

namespace ros {

/// Largest k^N the exhaustive search accepts.
inline constexpr double kBruteForceLimit = 1e8;

struct OracleResult {
    double cut = 0.0;
    IntegerAssignment assignment;  // lexicographically first optimum
};

/// Exhaustive Max-k-Cut. Throws Error(argument) when k < 2 or k^N > kBruteForceLimit.
OracleResult brute_force_oracle(const WeightedGraph& g, std::size_t k);

}  // namespace ros

#endif  // ROS_ORACLE_HPP
