#ifndef ROS_GRAPH_HPP
#define ROS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ros {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;  // u < v
    NodeId v;
    double weight;

    bool operator==(const Edge&) const = default;
};

struct Neighbor {
    NodeId node;
    double weight;
};

/**
 * Sparse symmetric weighted graph with zero diagonal.
 *
 * Each unordered pair is stored once in edges() with u < v, sorted by (u, v).
 * The adjacency is kept in CSR form with both directions present. Instances
 * are immutable once constructed.
 */
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Builds the graph from 0-based edges in any orientation. Throws
    /// Error(range) for out-of-range endpoints, Error(parse) for self-loops and
    /// Error(duplicate) when an unordered pair appears twice.
    WeightedGraph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    double total_edge_weight() const { return total_weight_; }

    std::span<const Neighbor> neighbors(NodeId node) const {
        return {adjacency_.data() + offsets_[node], adjacency_.data() + offsets_[node + 1]};
    }
    std::size_t degree(NodeId node) const { return offsets_[node + 1] - offsets_[node]; }

    /// Copy with the same topology and new weights (one per edge, in edges() order).
    WeightedGraph with_weights(std::span<const double> weights) const;

private:
    void build_adjacency();

    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
    double total_weight_ = 0.0;
};

/// One partition label per node, each in [0, k).
struct IntegerAssignment {
    std::vector<std::uint32_t> labels;
    std::uint32_t k = 2;

    /// Throws Error(argument) when k < 2 or a label is out of range.
    void validate() const;
};

/// Total weight of edges whose endpoints carry different labels.
double cut_value(const WeightedGraph& g, const IntegerAssignment& a);

/// Total weight of edges whose endpoints carry the same label.
double same_label_weight(const WeightedGraph& g, const IntegerAssignment& a);

}  // namespace ros

#endif  // ROS_GRAPH_HPP
