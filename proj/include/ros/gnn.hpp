#ifndef ROS_GNN_HPP
#define ROS_GNN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "ros/graph.hpp"
#include "ros/relax.hpp"

namespace ros {

enum class Activation : std::uint32_t { relu = 0 };

const char* to_string(Activation a);

/**
 * Shape of the message-passing network.
 *
 * Layer l (0-based) maps dimension in_dim(l) to out_dim(l): the first layer
 * reads the input_dim embeddings, hidden layers produce hidden_dim features and
 * the last layer produces output_dim = k scores that go through a softmax.
 * With graph_norm set, graph normalization sits between the message update
 * and the activation of every layer except the last.
 */
struct GnnArchitecture {
    std::size_t layers = 2;
    std::size_t input_dim = 100;
    std::size_t hidden_dim = 100;
    std::size_t output_dim = 2;
    Activation activation = Activation::relu;
    bool graph_norm = true;

    std::size_t in_dim(std::size_t layer) const { return layer == 0 ? input_dim : hidden_dim; }
    std::size_t out_dim(std::size_t layer) const { return layer + 1 == layers ? output_dim : hidden_dim; }
    bool normalized(std::size_t layer) const { return graph_norm && layer + 1 < layers; }

    /// Throws Error(argument) on zero sizes or output_dim < 2.
    void validate() const;
    bool operator==(const GnnArchitecture&) const = default;
};

struct GnnLayer {
    Eigen::MatrixXd self_weight;      // out x in, applied to the node's own features
    Eigen::MatrixXd neighbor_weight;  // out x in, applied to the weighted neighbor sum
    // Graph normalization; empty on layers without it.
    Eigen::VectorXd norm_scale;       // gamma
    Eigen::VectorXd norm_shift;       // beta
    Eigen::VectorXd mean_scale;       // alpha
};

/**
 * Trainable parameters. The flat block order (used by Adam, gradients and the
 * model file) is, per layer: self_weight, neighbor_weight, then norm_scale,
 * norm_shift, mean_scale on normalized layers.
 */
struct GnnParameters {
    std::vector<GnnLayer> layers;

    /// Zero-valued parameters with the shapes of arch (gamma = alpha = 1).
    static GnnParameters zeros(const GnnArchitecture& arch);
    /// Weights uniform on [-1/sqrt(fan_in), 1/sqrt(fan_in)], gamma = alpha = 1, beta = 0.
    static GnnParameters random(const GnnArchitecture& arch, std::uint64_t seed);

    std::vector<std::span<double>> blocks();
    std::vector<std::span<const double>> blocks() const;
    std::size_t size() const;

    /// Throws Error(shape) when shapes disagree with arch.
    void check_shape(const GnnArchitecture& arch) const;
    bool all_finite() const;
    /// FNV-1a over the raw bytes of every block.
    std::uint64_t fingerprint() const;
};

/// Fixed random node features, i.i.d. U[0, 1), input_dim x N.
struct NodeEmbeddings {
    Eigen::MatrixXd values;
    std::uint64_t seed = 0;

    static NodeEmbeddings random(std::size_t dim, std::size_t n, std::uint64_t seed);
};

/// Graph plus its symmetric sparse weight matrix, built once per instance.
class MessageGraph {
public:
    explicit MessageGraph(const WeightedGraph& g);

    const WeightedGraph& graph() const { return *graph_; }
    const Eigen::SparseMatrix<double>& weights() const { return weights_; }
    std::size_t node_count() const { return graph_->node_count(); }

private:
    const WeightedGraph* graph_;
    Eigen::SparseMatrix<double> weights_;
};

struct LayerCache {
    Eigen::MatrixXd input;       // H^(l-1)
    Eigen::MatrixXd aggregated;  // H^(l-1) W
    Eigen::MatrixXd centered;    // Z - alpha * mean (normalized layers)
    Eigen::VectorXd mean;
    Eigen::VectorXd inv_std;
    Eigen::MatrixXd activated_input;  // value fed to the activation
};

struct ForwardCache {
    std::vector<LayerCache> layers;
    Eigen::MatrixXd output;  // softmax probabilities, k x N
    std::uint64_t token = 0;
    const WeightedGraph* graph = nullptr;
};

struct ForwardResult {
    AssignmentMatrix x;
    ForwardCache cache;
};

/// Runs the network. Throws Error(shape) on inconsistent inputs and
/// Error(numeric) naming the layer when a non-finite value appears.
ForwardResult forward(const GnnParameters& params, const GnnArchitecture& arch, const MessageGraph& g,
                      const NodeEmbeddings& h0);
ForwardResult forward(const GnnParameters& params, const GnnArchitecture& arch, const WeightedGraph& g,
                      const NodeEmbeddings& h0);

/// Reverse pass for dLoss/dX. `params` must be the parameters the cache was
/// produced with; a mismatched pairing throws Error(argument).
GnnParameters backward(const GnnParameters& params, const GnnArchitecture& arch, const ForwardCache& cache,
                       const MessageGraph& g, const Eigen::MatrixXd& upstream);

struct InstanceLoss {
    double f = 0.0;
    GnnParameters gradients;
    AssignmentMatrix x;
};

/// f(forward output) and its gradient with respect to the parameters.
InstanceLoss loss_instance(const GnnParameters& params, const GnnArchitecture& arch, const MessageGraph& g,
                           const NodeEmbeddings& h0);
InstanceLoss loss_instance(const GnnParameters& params, const GnnArchitecture& arch, const WeightedGraph& g,
                           const NodeEmbeddings& h0);

}  // namespace ros

#endif  // ROS_GNN_HPP
