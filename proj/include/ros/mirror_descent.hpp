#ifndef ROS_MIRROR_DESCENT_HPP
#define ROS_MIRROR_DESCENT_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ros/graph.hpp"
#include "ros/relax.hpp"

namespace ros {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct MdConfig {
    double step_size = 0.1;
    std::size_t max_iters = 5000;
    double tolerance = 1e-8;
    /// Starting point; when empty, uniform 1/k plus U[0, init_noise] per entry.
    std::optional<AssignmentMatrix> init;
    double init_noise = 1e-3;
    std::uint64_t seed = 0;
    Deadline deadline;

    void validate() const;
};

/// Largest number of step halvings md_step attempts before failing.
inline constexpr int kMaxStepHalvings = 30;

struct MdStepResult {
    AssignmentMatrix x;
    double step_used = 0.0;
    int halvings = 0;
};

/// One entropic mirror descent (exponentiated gradient) step:
/// X_lj <- X_lj exp(-step G_lj), columns renormalized, G = gradient_f(X).
/// A non-finite update is retried with half the step; after kMaxStepHalvings
/// retries Error(numeric) is thrown.
MdStepResult md_step_checked(const AssignmentMatrix& x, const WeightedGraph& g, double step);
AssignmentMatrix md_step(const AssignmentMatrix& x, const WeightedGraph& g, double step);

/// Noisy uniform start used by solve_md when no init matrix is given.
AssignmentMatrix md_initial_point(std::size_t k, std::size_t n, double noise, std::uint64_t seed);

struct MdResult {
    AssignmentMatrix x;
    std::vector<double> trace;  // f at the start and after every step
    std::size_t iterations = 0;
    std::size_t halving_events = 0;
    bool converged = false;
};

/// Iterates md_step until |f_t - f_{t-1}| <= tolerance * max(1, |f_{t-1}|) or max_iters.
MdResult solve_md(const WeightedGraph& g, std::size_t k, const MdConfig& cfg);

}  // namespace ros

#endif  // ROS_MIRROR_DESCENT_HPP
