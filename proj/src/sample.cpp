#include "ros/sample.hpp"

#include <cmath>

#include "ros/error.hpp"

namespace ros {

IntegerAssignment sample_once(const AssignmentMatrix& x, Rng& rng) {
    IntegerAssignment a;
    a.k = static_cast<std::uint32_t>(x.k());
    a.labels.resize(x.n());
    const std::size_t last = x.k() - 1;
    for (std::size_t j = 0; j < x.n(); ++j) {
        const double u = uniform01(rng);
        double cdf = 0.0;
        std::uint32_t label = static_cast<std::uint32_t>(last);
        for (std::size_t i = 0; i < last; ++i) {
            cdf += x(i, j);
            if (u < cdf) {
                label = static_cast<std::uint32_t>(i);
                break;
            }
        }
        a.labels[j] = label;
    }
    return a;
}

SampledCut sample_best_of(const AssignmentMatrix& x, const WeightedGraph& g, const SampleConfig& cfg) {
    if (cfg.trials == 0) throw Error(ErrorKind::argument, "sampling needs at least one trial");
    if (x.n() != g.node_count()) throw Error(ErrorKind::shape, "assignment and graph sizes differ");
    Rng rng(cfg.seed);
    SampledCut best;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        auto a = sample_once(x, rng);
        const double f = objective_f(a, g);
        if (t == 0 || f < best.f) {
            best.assignment = std::move(a);
            best.f = f;
            best.trial = t;
        }
    }
    best.cut = cut_from_objective(g, best.f);
    return best;
}

double expected_objective(const AssignmentMatrix& x, const WeightedGraph& g) {
    if (x.n() != g.node_count()) throw Error(ErrorKind::shape, "assignment and graph sizes differ");
    double total = 0.0;
    for (const auto& e : g.edges()) {
        double same = 0.0;
        for (std::size_t label = 0; label < x.k(); ++label) same += x(label, e.u) * x(label, e.v);
        total += e.weight * same;
    }
    return 2.0 * total;
}

MonteCarloResult monte_carlo_expectation_test(const AssignmentMatrix& x, const WeightedGraph& g,
                                              std::size_t draws, std::uint64_t seed) {
    if (draws < 1000) throw Error(ErrorKind::argument, "Monte Carlo test needs at least 1000 draws");
    Rng rng(seed);
    // Welford accumulation.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t t = 0; t < draws; ++t) {
        const double f = objective_f(sample_once(x, rng), g);
        const double delta = f - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (f - mean);
    }
    MonteCarloResult r;
    r.mean = mean;
    r.std_error = std::sqrt(m2 / static_cast<double>(draws - 1) / static_cast<double>(draws));
    r.target = expected_objective(x, g);
    // The slack term covers zero-variance cases where mean and target agree up to rounding.
    const double slack = 1e-9 * std::max(1.0, std::abs(r.target));
    r.pass = std::abs(r.mean - r.target) <= 4.0 * r.std_error + slack;
    return r;
}

}  // namespace ros
