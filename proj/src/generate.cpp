#include "ros/generate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "ros/error.hpp"
#include "ros/rng.hpp"

namespace ros {

namespace {

// Fisher-Yates with our own index draw so the permutation is library-independent.
void shuffle(std::vector<NodeId>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace

WeightedGraph generate_random_regular(std::size_t n, std::size_t r, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::argument, "n must be positive");
    if ((n * r) % 2 != 0) {
        std::ostringstream os;
        os << "n*r must be even (n=" << n << ", r=" << r << ")";
        throw Error(ErrorKind::argument, os.str());
    }
    if (r >= n) {
        std::ostringstream os;
        os << "degree r=" << r << " must be smaller than n=" << n;
        throw Error(ErrorKind::argument, os.str());
    }

    Rng rng(seed);
    std::vector<NodeId> stubs(n * r);
    std::vector<std::uint64_t> keys(n * r / 2);
    for (std::size_t attempt = 0; attempt < kRegularRetryBudget; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<NodeId>(i / r);
        shuffle(stubs, rng);

        bool simple = true;
        for (std::size_t p = 0; p < keys.size(); ++p) {
            NodeId a = stubs[2 * p];
            NodeId b = stubs[2 * p + 1];
            if (a == b) {
                simple = false;
                break;
            }
            if (a > b) std::swap(a, b);
            keys[p] = (static_cast<std::uint64_t>(a) << 32) | b;
        }
        if (!simple) continue;
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;

        std::vector<Edge> edges;
        edges.reserve(keys.size());
        for (auto key : keys) {
            edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu), 1.0});
        }
        return WeightedGraph(n, std::move(edges));
    }
    std::ostringstream os;
    os << "no simple " << r << "-regular pairing on " << n << " nodes after " << kRegularRetryBudget
       << " attempts";
    throw Error(ErrorKind::generation, os.str());
}

WeightedGraph perturb_weights(const WeightedGraph& g, double low, double high, std::uint64_t seed) {
    if (!(low <= high)) throw Error(ErrorKind::argument, "perturbation requires low <= high");
    Rng rng(seed);
    std::vector<double> weights;
    weights.reserve(g.edge_count());
    for (const auto& e : g.edges()) weights.push_back(e.weight * uniform(rng, low, high));
    return g.with_weights(weights);
}

}  // namespace ros
