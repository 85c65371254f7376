#ifndef ROS_TRAIN_HPP
#define ROS_TRAIN_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "ros/gnn.hpp"
#include "ros/mirror_descent.hpp"

namespace ros {

/// Bias-corrected Adam moments for every parameter block.
struct AdamState {
    std::vector<Eigen::VectorXd> first;
    std::vector<Eigen::VectorXd> second;
    std::uint64_t step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState for_parameters(const GnnParameters& params);
};

/// One Adam update in place. Throws Error(numeric) and leaves params and state
/// untouched when a gradient is non-finite; Error(shape) on mismatched blocks.
void adam_step(AdamState& state, GnnParameters& params, const GnnParameters& grads, double lr);

struct TrainConfig {
    double learning_rate = 1e-2;
    std::size_t pretrain_epochs = 1;
    double tolerance = 1e-2;           // absolute improvement that resets patience
    std::size_t patience = 100;        // Adam steps without such an improvement
    std::size_t max_finetune_iters = 10'000;
    std::uint64_t seed = 0;
    Deadline deadline;

    void validate() const;
};

struct PretrainResult {
    GnnParameters params;
    std::vector<double> losses;         // per instance, in visiting order
    std::vector<double> running_mean;   // mean of losses so far
};

/**
 * Trains one model over a dataset: each epoch visits the instances in a seeded
 * shuffled order and takes one Adam step per instance with fresh seeded
 * embeddings. Starts from GnnParameters::random(arch, derive_seed(seed, 0))
 * unless `init` is given. Throws Error(argument) for an empty dataset.
 */
PretrainResult pretrain(const std::vector<WeightedGraph>& dataset, const GnnArchitecture& arch,
                        const TrainConfig& cfg, const GnnParameters* init = nullptr);

struct FinetuneResult {
    AssignmentMatrix x;            // forward output at the lowest loss seen
    double best_f = 0.0;
    std::size_t iters_used = 0;    // Adam steps taken
    std::vector<double> trace;     // loss before each step, plus the final evaluation
    GnnParameters params;          // parameters after the last step
    bool early_stopped = false;
};

/**
 * Adam on f(forward(params)) for one instance, embeddings seeded from
 * cfg.seed. Stops once `patience` consecutive evaluations fail to beat the
 * reference loss by more than `tolerance`, or after max_finetune_iters steps.
 */
FinetuneResult finetune(const GnnParameters& params, const GnnArchitecture& arch, const WeightedGraph& g,
                        const TrainConfig& cfg);

/// Model file I/O (format in model_io.cpp). Throws Error(format) on bad
/// magic, version, truncation or trailing bytes; Error(io) on file errors.
void save_model(const GnnParameters& params, const GnnArchitecture& arch, const std::filesystem::path& path);
std::string encode_model(const GnnParameters& params, const GnnArchitecture& arch);

struct LoadedModel {
    GnnParameters params;
    GnnArchitecture arch;
};

LoadedModel load_model(const std::filesystem::path& path);
LoadedModel decode_model(std::string_view bytes);

}  // namespace ros

#endif  // ROS_TRAIN_HPP
