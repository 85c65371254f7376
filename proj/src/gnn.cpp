#include "ros/gnn.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "ros/error.hpp"
#include "ros/rng.hpp"

namespace ros {

namespace {

constexpr double kNormEpsilon = 1e-5;

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

void fill_uniform(Eigen::MatrixXd& m, double bound, Rng& rng) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = uniform(rng, -bound, bound);
    }
}

void check_finite(const Eigen::MatrixXd& m, std::size_t layer, const char* stage) {
    if (!m.allFinite()) {
        std::ostringstream os;
        os << "non-finite value in layer " << layer + 1 << " (" << stage << ")";
        throw Error(ErrorKind::numeric, os.str());
    }
}

}  // namespace

const char* to_string(Activation a) {
    switch (a) {
        case Activation::relu: return "relu";
    }
    return "unknown";
}

void GnnArchitecture::validate() const {
    if (layers < 1) throw Error(ErrorKind::argument, "network needs at least one layer");
    if (input_dim < 1 || hidden_dim < 1) throw Error(ErrorKind::argument, "layer dimensions must be positive");
    if (output_dim < 2) throw Error(ErrorKind::argument, "output dimension (k) must be at least 2");
}

GnnParameters GnnParameters::zeros(const GnnArchitecture& arch) {
    arch.validate();
    GnnParameters p;
    p.layers.resize(arch.layers);
    for (std::size_t l = 0; l < arch.layers; ++l) {
        auto& layer = p.layers[l];
        layer.self_weight = Eigen::MatrixXd::Zero(idx(arch.out_dim(l)), idx(arch.in_dim(l)));
        layer.neighbor_weight = Eigen::MatrixXd::Zero(idx(arch.out_dim(l)), idx(arch.in_dim(l)));
        if (arch.normalized(l)) {
            layer.norm_scale = Eigen::VectorXd::Ones(idx(arch.out_dim(l)));
            layer.norm_shift = Eigen::VectorXd::Zero(idx(arch.out_dim(l)));
            layer.mean_scale = Eigen::VectorXd::Ones(idx(arch.out_dim(l)));
        }
    }
    return p;
}

GnnParameters GnnParameters::random(const GnnArchitecture& arch, std::uint64_t seed) {
    GnnParameters p = zeros(arch);
    Rng rng(seed);
    for (std::size_t l = 0; l < arch.layers; ++l) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(arch.in_dim(l)));
        fill_uniform(p.layers[l].self_weight, bound, rng);
        fill_uniform(p.layers[l].neighbor_weight, bound, rng);
    }
    return p;
}

std::vector<std::span<double>> GnnParameters::blocks() {
    std::vector<std::span<double>> out;
    for (auto& layer : layers) {
        out.emplace_back(layer.self_weight.data(), static_cast<std::size_t>(layer.self_weight.size()));
        out.emplace_back(layer.neighbor_weight.data(), static_cast<std::size_t>(layer.neighbor_weight.size()));
        if (layer.norm_scale.size() > 0) {
            out.emplace_back(layer.norm_scale.data(), static_cast<std::size_t>(layer.norm_scale.size()));
            out.emplace_back(layer.norm_shift.data(), static_cast<std::size_t>(layer.norm_shift.size()));
            out.emplace_back(layer.mean_scale.data(), static_cast<std::size_t>(layer.mean_scale.size()));
        }
    }
    return out;
}

std::vector<std::span<const double>> GnnParameters::blocks() const {
    auto mutable_blocks = const_cast<GnnParameters*>(this)->blocks();
    return {mutable_blocks.begin(), mutable_blocks.end()};
}

std::size_t GnnParameters::size() const {
    std::size_t total = 0;
    for (auto b : blocks()) total += b.size();
    return total;
}

void GnnParameters::check_shape(const GnnArchitecture& arch) const {
    auto fail = [](std::size_t l, const char* what) {
        std::ostringstream os;
        os << "parameter shape mismatch in layer " << l + 1 << ": " << what;
        throw Error(ErrorKind::shape, os.str());
    };
    if (layers.size() != arch.layers) fail(layers.size(), "layer count");
    for (std::size_t l = 0; l < arch.layers; ++l) {
        const auto& layer = layers[l];
        const auto rows = idx(arch.out_dim(l));
        const auto cols = idx(arch.in_dim(l));
        if (layer.self_weight.rows() != rows || layer.self_weight.cols() != cols) fail(l, "self weight");
        if (layer.neighbor_weight.rows() != rows || layer.neighbor_weight.cols() != cols) fail(l, "neighbor weight");
        const auto norm_len = arch.normalized(l) ? rows : 0;
        if (layer.norm_scale.size() != norm_len || layer.norm_shift.size() != norm_len ||
            layer.mean_scale.size() != norm_len) {
            fail(l, "normalization");
        }
    }
}

bool GnnParameters::all_finite() const {
    for (auto b : blocks()) {
        for (double v : b) {
            if (!std::isfinite(v)) return false;
        }
    }
    return true;
}

std::uint64_t GnnParameters::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : blocks()) {
        const auto* bytes = reinterpret_cast<const unsigned char*>(b.data());
        for (std::size_t i = 0; i < b.size() * sizeof(double); ++i) {
            h ^= bytes[i];
            h *= 0x100000001b3ULL;
        }
        h ^= b.size();
        h *= 0x100000001b3ULL;
    }
    return h;
}

NodeEmbeddings NodeEmbeddings::random(std::size_t dim, std::size_t n, std::uint64_t seed) {
    NodeEmbeddings h{Eigen::MatrixXd(idx(dim), idx(n)), seed};
    Rng rng(seed);
    for (Eigen::Index j = 0; j < h.values.cols(); ++j) {
        for (Eigen::Index i = 0; i < h.values.rows(); ++i) h.values(i, j) = uniform01(rng);
    }
    return h;
}

MessageGraph::MessageGraph(const WeightedGraph& g) : graph_(&g), weights_(idx(g.node_count()), idx(g.node_count())) {
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(2 * g.edge_count());
    for (const auto& e : g.edges()) {
        entries.emplace_back(idx(e.u), idx(e.v), e.weight);
        entries.emplace_back(idx(e.v), idx(e.u), e.weight);
    }
    weights_.setFromTriplets(entries.begin(), entries.end());
    weights_.makeCompressed();
}

ForwardResult forward(const GnnParameters& params, const GnnArchitecture& arch, const MessageGraph& g,
                      const NodeEmbeddings& h0) {
    arch.validate();
    params.check_shape(arch);
    const std::size_t n = g.node_count();
    if (h0.values.rows() != idx(arch.input_dim) || h0.values.cols() != idx(n)) {
        std::ostringstream os;
        os << "embeddings are " << h0.values.rows() << "x" << h0.values.cols() << ", expected " << arch.input_dim
           << "x" << n;
        throw Error(ErrorKind::shape, os.str());
    }
    const double inv_n = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;

    ForwardCache cache;
    cache.layers.resize(arch.layers);
    cache.graph = &g.graph();
    cache.token = params.fingerprint();

    Eigen::MatrixXd h = h0.values;
    for (std::size_t l = 0; l < arch.layers; ++l) {
        const auto& p = params.layers[l];
        auto& c = cache.layers[l];
        c.input = std::move(h);
        c.aggregated = c.input * g.weights();
        Eigen::MatrixXd z(p.self_weight.rows(), idx(n));
        z.noalias() = p.self_weight * c.input;
        z.noalias() += p.neighbor_weight * c.aggregated;
        check_finite(z, l, "message update");

        if (l + 1 == arch.layers) {
            // Column softmax.
            for (Eigen::Index j = 0; j < z.cols(); ++j) {
                auto col = z.col(j);
                col = (col.array() - col.maxCoeff()).exp();
                col /= col.sum();
            }
            check_finite(z, l, "softmax");
            cache.output = z;
            break;
        }

        if (arch.normalized(l)) {
            c.mean = z.rowwise().sum() * inv_n;
            c.centered = z;
            c.centered.colwise() -= p.mean_scale.cwiseProduct(c.mean);
            const Eigen::VectorXd variance = c.centered.array().square().rowwise().sum() * inv_n;
            c.inv_std = (variance.array() + kNormEpsilon).rsqrt();
            z = (c.centered.array().colwise() * (p.norm_scale.array() * c.inv_std.array())).matrix();
            z.colwise() += p.norm_shift;
            check_finite(z, l, "graph normalization");
        }
        c.activated_input = z;
        h = z.cwiseMax(0.0);
    }

    auto x = AssignmentMatrix::from_values(cache.output, Normalize::strict);
    return {std::move(x), std::move(cache)};
}

ForwardResult forward(const GnnParameters& params, const GnnArchitecture& arch, const WeightedGraph& g,
                      const NodeEmbeddings& h0) {
    return forward(params, arch, MessageGraph(g), h0);
}

GnnParameters backward(const GnnParameters& params, const GnnArchitecture& arch, const ForwardCache& cache,
                       const MessageGraph& g, const Eigen::MatrixXd& upstream) {
    if (cache.token != params.fingerprint() || cache.graph != &g.graph() || cache.layers.size() != arch.layers) {
        throw Error(ErrorKind::argument, "stale forward cache: parameters or graph changed since forward");
    }
    const auto& x = cache.output;
    if (upstream.rows() != x.rows() || upstream.cols() != x.cols()) {
        throw Error(ErrorKind::shape, "upstream gradient shape does not match network output");
    }
    const double inv_n = g.node_count() > 0 ? 1.0 / static_cast<double>(g.node_count()) : 0.0;

    GnnParameters grads = GnnParameters::zeros(arch);
    // Softmax: dZ = X * (dX - <X, dX>) per column.
    const Eigen::RowVectorXd inner = x.cwiseProduct(upstream).colwise().sum();
    Eigen::MatrixXd dz = x.cwiseProduct(upstream - Eigen::MatrixXd::Ones(x.rows(), 1) * inner);

    for (std::size_t l = arch.layers; l-- > 0;) {
        const auto& p = params.layers[l];
        const auto& c = cache.layers[l];
        auto& gl = grads.layers[l];
        gl.self_weight.noalias() = dz * c.input.transpose();
        gl.neighbor_weight.noalias() = dz * c.aggregated.transpose();
        if (l == 0) break;

        // Gradient with respect to this layer's input, the previous layer's output.
        Eigen::MatrixXd dh(p.self_weight.cols(), dz.cols());
        dh.noalias() = p.self_weight.transpose() * dz;
        Eigen::MatrixXd dm(p.neighbor_weight.cols(), dz.cols());
        dm.noalias() = p.neighbor_weight.transpose() * dz;
        dh += dm * g.weights();

        const auto& pc = cache.layers[l - 1];
        const auto& pp = params.layers[l - 1];
        auto& pg = grads.layers[l - 1];
        // ReLU.
        Eigen::MatrixXd dy = (pc.activated_input.array() > 0.0).select(dh.array(), 0.0).matrix();
        if (arch.normalized(l - 1)) {
            const Eigen::ArrayXd gamma = pp.norm_scale.array();
            const Eigen::ArrayXd inv_std = pc.inv_std.array();
            pg.norm_shift = dy.rowwise().sum();
            const Eigen::VectorXd dy_c = dy.cwiseProduct(pc.centered).rowwise().sum();
            pg.norm_scale = (dy_c.array() * inv_std).matrix();
            // d variance, folded into the centered values.
            const Eigen::ArrayXd dvar = -0.5 * gamma * dy_c.array() * inv_std.cube();
            Eigen::MatrixXd dc = (dy.array().colwise() * (gamma * inv_std)).matrix();
            dc += (pc.centered.array().colwise() * (2.0 * inv_n * dvar)).matrix();
            const Eigen::VectorXd dc_sum = dc.rowwise().sum();
            pg.mean_scale = -pc.mean.cwiseProduct(dc_sum);
            dc.colwise() -= (pp.mean_scale.cwiseProduct(dc_sum) * inv_n);
            dz = std::move(dc);
        } else {
            dz = std::move(dy);
        }
    }
    return grads;
}

InstanceLoss loss_instance(const GnnParameters& params, const GnnArchitecture& arch, const MessageGraph& g,
                           const NodeEmbeddings& h0) {
    auto fwd = forward(params, arch, g, h0);
    InstanceLoss out;
    out.f = objective_f(fwd.x, g.graph());
    const Eigen::MatrixXd upstream = gradient_f(fwd.x, g.graph());
    out.gradients = backward(params, arch, fwd.cache, g, upstream);
    out.x = std::move(fwd.x);
    return out;
}

InstanceLoss loss_instance(const GnnParameters& params, const GnnArchitecture& arch, const WeightedGraph& g,
                           const NodeEmbeddings& h0) {
    return loss_instance(params, arch, MessageGraph(g), h0);
}

}  // namespace ros
