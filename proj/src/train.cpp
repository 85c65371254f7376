#include "ros/train.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "ros/error.hpp"
#include "ros/rng.hpp"

namespace ros {

AdamState AdamState::for_parameters(const GnnParameters& params) {
    AdamState s;
    for (auto b : params.blocks()) {
        s.first.push_back(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(b.size())));
        s.second.push_back(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(b.size())));
    }
    return s;
}

void adam_step(AdamState& state, GnnParameters& params, const GnnParameters& grads, double lr) {
    auto p_blocks = params.blocks();
    auto g_blocks = grads.blocks();
    if (p_blocks.size() != g_blocks.size() || p_blocks.size() != state.first.size()) {
        throw Error(ErrorKind::shape, "Adam: parameter, gradient and moment blocks differ");
    }
    for (std::size_t b = 0; b < p_blocks.size(); ++b) {
        if (p_blocks[b].size() != g_blocks[b].size() ||
            static_cast<Eigen::Index>(p_blocks[b].size()) != state.first[b].size()) {
            throw Error(ErrorKind::shape, "Adam: block " + std::to_string(b) + " size mismatch");
        }
        for (double v : g_blocks[b]) {
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::numeric, "Adam: non-finite gradient in block " + std::to_string(b));
            }
        }
    }

    ++state.step;
    const double t = static_cast<double>(state.step);
    const double correction1 = 1.0 - std::pow(state.beta1, t);
    const double correction2 = 1.0 - std::pow(state.beta2, t);
    for (std::size_t b = 0; b < p_blocks.size(); ++b) {
        Eigen::Map<Eigen::VectorXd> p(p_blocks[b].data(), static_cast<Eigen::Index>(p_blocks[b].size()));
        Eigen::Map<const Eigen::VectorXd> g(g_blocks[b].data(), static_cast<Eigen::Index>(g_blocks[b].size()));
        auto& m = state.first[b];
        auto& v = state.second[b];
        m = state.beta1 * m + (1.0 - state.beta1) * g;
        v = state.beta2 * v + (1.0 - state.beta2) * g.cwiseProduct(g);
        p.array() -= lr * (m.array() / correction1) / ((v.array() / correction2).sqrt() + state.epsilon);
    }
}

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0)) throw Error(ErrorKind::argument, "learning rate must be > 0");
    if (pretrain_epochs < 1) throw Error(ErrorKind::argument, "pretraining needs at least one epoch");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::argument, "early-stopping tolerance must be > 0");
    if (patience < 1) throw Error(ErrorKind::argument, "patience must be >= 1");
    if (max_finetune_iters < 1) throw Error(ErrorKind::argument, "max fine-tune iterations must be >= 1");
}

namespace {

void check_deadline(const Deadline& deadline, const char* phase) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
        throw Error(ErrorKind::timeout, std::string(phase) + " exceeded its deadline");
    }
}

}  // namespace

PretrainResult pretrain(const std::vector<WeightedGraph>& dataset, const GnnArchitecture& arch,
                        const TrainConfig& cfg, const GnnParameters* init) {
    if (dataset.empty()) throw Error(ErrorKind::argument, "pretraining dataset is empty");
    cfg.validate();
    arch.validate();

    PretrainResult r;
    r.params = init ? *init : GnnParameters::random(arch, derive_seed(cfg.seed, 0));
    r.params.check_shape(arch);
    AdamState adam = AdamState::for_parameters(r.params);

    Rng order_rng(derive_seed(cfg.seed, 1));
    const std::uint64_t embedding_base = derive_seed(cfg.seed, 2);
    std::vector<std::size_t> order(dataset.size());
    double sum = 0.0;
    std::uint64_t visit = 0;
    for (std::size_t epoch = 0; epoch < cfg.pretrain_epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_index(order_rng, i)]);
        for (auto m : order) {
            check_deadline(cfg.deadline, "pretraining");
            const auto& g = dataset[m];
            const auto h0 = NodeEmbeddings::random(arch.input_dim, g.node_count(), derive_seed(embedding_base, visit++));
            auto loss = loss_instance(r.params, arch, g, h0);
            adam_step(adam, r.params, loss.gradients, cfg.learning_rate);
            r.losses.push_back(loss.f);
            sum += loss.f;
            r.running_mean.push_back(sum / static_cast<double>(r.losses.size()));
        }
    }
    return r;
}

FinetuneResult finetune(const GnnParameters& params, const GnnArchitecture& arch, const WeightedGraph& g,
                        const TrainConfig& cfg) {
    cfg.validate();
    arch.validate();
    params.check_shape(arch);

    const MessageGraph mg(g);
    const auto h0 = NodeEmbeddings::random(arch.input_dim, g.node_count(), cfg.seed);
    FinetuneResult r;
    r.params = params;
    AdamState adam = AdamState::for_parameters(r.params);

    double reference = std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    std::size_t stale = 0;
    while (true) {
        check_deadline(cfg.deadline, "fine-tuning");
        auto loss = loss_instance(r.params, arch, mg, h0);
        r.trace.push_back(loss.f);
        if (loss.f < best || r.trace.size() == 1) {
            best = loss.f;
            r.x = std::move(loss.x);
        }
        if (loss.f < reference - cfg.tolerance) {
            reference = loss.f;
            stale = 0;
        } else if (++stale >= cfg.patience) {
            r.early_stopped = true;
            break;
        }
        if (r.iters_used >= cfg.max_finetune_iters) break;
        adam_step(adam, r.params, loss.gradients, cfg.learning_rate);
        ++r.iters_used;
    }
    r.best_f = best;
    return r;
}

}  // namespace ros
