#include "ros/mirror_descent.hpp"

#include <cmath>
#include <sstream>

#include "ros/error.hpp"
#include "ros/rng.hpp"

namespace ros {

void MdConfig::validate() const {
    if (!(step_size > 0.0) || !std::isfinite(step_size)) throw Error(ErrorKind::argument, "MD step size must be > 0");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::argument, "MD tolerance must be > 0");
    if (!(init_noise >= 0.0)) throw Error(ErrorKind::argument, "MD init noise must be >= 0");
}

namespace {

// Returns false when the update produced non-finite or all-zero columns.
bool exponentiated_update(const Eigen::MatrixXd& x, const Eigen::MatrixXd& grad, double step,
                          Eigen::MatrixXd& out) {
    out.resize(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        auto col = out.col(j);
        col = x.col(j).array() * (-step * grad.col(j).array()).exp();
        const double sum = col.sum();
        if (!std::isfinite(sum) || !(sum > 0.0)) return false;
        col /= sum;
    }
    return true;
}

}  // namespace

MdStepResult md_step_checked(const AssignmentMatrix& x, const WeightedGraph& g, double step) {
    if (!(step > 0.0)) throw Error(ErrorKind::argument, "MD step must be > 0");
    const Eigen::MatrixXd grad = gradient_f(x, g);
    if (!grad.allFinite()) throw Error(ErrorKind::numeric, "non-finite gradient in MD step");
    Eigen::MatrixXd next;
    for (int halvings = 0; halvings <= kMaxStepHalvings; ++halvings) {
        if (exponentiated_update(x.values(), grad, step, next)) {
            return {AssignmentMatrix::from_values(std::move(next)), step, halvings};
        }
        step *= 0.5;
    }
    std::ostringstream os;
    os << "MD step too large: update overflowed after " << kMaxStepHalvings << " halvings";
    throw Error(ErrorKind::numeric, os.str());
}

AssignmentMatrix md_step(const AssignmentMatrix& x, const WeightedGraph& g, double step) {
    return md_step_checked(x, g, step).x;
}

AssignmentMatrix md_initial_point(std::size_t k, std::size_t n, double noise, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd v(k, n);
    const double base = 1.0 / static_cast<double>(k);
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        for (Eigen::Index i = 0; i < v.rows(); ++i) v(i, j) = base + noise * uniform01(rng);
    }
    return AssignmentMatrix::from_values(std::move(v), Normalize::rescale);
}

MdResult solve_md(const WeightedGraph& g, std::size_t k, const MdConfig& cfg) {
    if (k < 2) throw Error(ErrorKind::argument, "k must be at least 2");
    cfg.validate();
    MdResult r;
    if (cfg.init) {
        if (cfg.init->k() != k || cfg.init->n() != g.node_count()) {
            throw Error(ErrorKind::shape, "MD init matrix has the wrong shape");
        }
        r.x = *cfg.init;
    } else {
        r.x = md_initial_point(k, g.node_count(), cfg.init_noise, cfg.seed);
    }
    double previous = objective_f(r.x, g);
    r.trace.push_back(previous);
    while (r.iterations < cfg.max_iters) {
        if (cfg.deadline && std::chrono::steady_clock::now() > *cfg.deadline) {
            throw Error(ErrorKind::timeout, "MD exceeded its deadline");
        }
        auto step = md_step_checked(r.x, g, cfg.step_size);
        r.x = std::move(step.x);
        if (step.halvings > 0) ++r.halving_events;
        ++r.iterations;
        const double current = objective_f(r.x, g);
        r.trace.push_back(current);
        if (std::abs(current - previous) <= cfg.tolerance * std::max(1.0, std::abs(previous))) {
            r.converged = true;
            break;
        }
        previous = current;
    }
    return r;
}

}  // namespace ros
