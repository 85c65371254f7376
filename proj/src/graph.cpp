#include "ros/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ros/error.hpp"

namespace ros {

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u >= node_count_ || e.v >= node_count_) {
            std::ostringstream os;
            os << "edge (" << e.u << ", " << e.v << ") outside node range [0, " << node_count_ << ")";
            throw Error(ErrorKind::range, os.str());
        }
        if (e.u == e.v) {
            std::ostringstream os;
            os << "self-loop on node " << e.u;
            throw Error(ErrorKind::parse, os.str());
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            std::ostringstream os;
            os << "duplicate edge (" << edges_[i].u << ", " << edges_[i].v << ")";
            throw Error(ErrorKind::duplicate, os.str());
        }
    }
    build_adjacency();
}

void WeightedGraph::build_adjacency() {
    offsets_.assign(node_count_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    total_weight_ = 0.0;
    // Edges are sorted by (u, v), so every adjacency list ends up sorted by node.
    for (const auto& e : edges_) {
        adjacency_[cursor[e.v]++] = {e.u, e.weight};
    }
    for (const auto& e : edges_) {
        adjacency_[cursor[e.u]++] = {e.v, e.weight};
        total_weight_ += e.weight;
    }
}

WeightedGraph WeightedGraph::with_weights(std::span<const double> weights) const {
    if (weights.size() != edges_.size()) {
        throw Error(ErrorKind::shape, "weight vector length does not match edge count");
    }
    WeightedGraph out = *this;
    for (std::size_t i = 0; i < edges_.size(); ++i) out.edges_[i].weight = weights[i];
    out.build_adjacency();
    return out;
}

void IntegerAssignment::validate() const {
    if (k < 2) throw Error(ErrorKind::argument, "k must be at least 2");
    for (auto label : labels) {
        if (label >= k) {
            std::ostringstream os;
            os << "label " << label << " outside [0, " << k << ")";
            throw Error(ErrorKind::argument, os.str());
        }
    }
}

namespace {

void check_length(const WeightedGraph& g, const IntegerAssignment& a) {
    if (a.labels.size() != g.node_count()) {
        std::ostringstream os;
        os << "assignment has " << a.labels.size() << " labels, graph has " << g.node_count() << " nodes";
        throw Error(ErrorKind::shape, os.str());
    }
}

}  // namespace

double cut_value(const WeightedGraph& g, const IntegerAssignment& a) {
    check_length(g, a);
    double cut = 0.0;
    for (const auto& e : g.edges()) {
        if (a.labels[e.u] != a.labels[e.v]) cut += e.weight;
    }
    return cut;
}

double same_label_weight(const WeightedGraph& g, const IntegerAssignment& a) {
    check_length(g, a);
    double same = 0.0;
    for (const auto& e : g.edges()) {
        if (a.labels[e.u] == a.labels[e.v]) same += e.weight;
    }
    return same;
}

}  // namespace ros
