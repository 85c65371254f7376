#ifndef ROS_SAMPLE_HPP
#define ROS_SAMPLE_HPP

#include <cstddef>
#include <cstdint>

#include "ros/graph.hpp"
#include "ros/relax.hpp"
#include "ros/rng.hpp"

namespace ros {

struct SampleConfig {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
};

/// Draws each node's label from its column (inverse CDF; leftover mass goes
/// to the last label). Consumes one uniform per node, in node order.
IntegerAssignment sample_once(const AssignmentMatrix& x, Rng& rng);

struct SampledCut {
    IntegerAssignment assignment;
    double f = 0.0;    // objective at the one-hot point
    double cut = 0.0;  // cut_from_objective(g, f)
    std::size_t trial = 0;
};

/// Best (lowest f) of cfg.trials independent draws from one RNG stream seeded
/// with cfg.seed. The earliest trial wins ties. Throws Error(argument) when
/// trials is 0.
SampledCut sample_best_of(const AssignmentMatrix& x, const WeightedGraph& g, const SampleConfig& cfg);

/// E[f(X^)] under independent categorical sampling:
/// sum over edges of 2 w P(label_u == label_v). Equal to objective_f(x, g).
double expected_objective(const AssignmentMatrix& x, const WeightedGraph& g);

struct MonteCarloResult {
    double mean = 0.0;
    double std_error = 0.0;
    double target = 0.0;
    bool pass = false;
};

/// Empirical mean of f over `draws` samples versus expected_objective; passes
/// when the gap is within 4 standard errors. draws must be >= 1000.
MonteCarloResult monte_carlo_expectation_test(const AssignmentMatrix& x, const WeightedGraph& g,
                                              std::size_t draws, std::uint64_t seed);

}  // namespace ros

#endif  // ROS_SAMPLE_HPP
