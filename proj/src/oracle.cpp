#include "ros/oracle.hpp"

#include <cmath>
#include <sstream>

#include "ros/error.hpp"

namespace ros {

OracleResult brute_force_oracle(const WeightedGraph& g, std::size_t k) {
    if (k < 2) throw Error(ErrorKind::argument, "k must be at least 2");
    const std::size_t n = g.node_count();
    if (static_cast<double>(n) * std::log10(static_cast<double>(k)) > std::log10(kBruteForceLimit) + 1e-12) {
        std::ostringstream os;
        os << "brute force over " << k << "^" << n << " labelings exceeds the 1e8 limit";
        throw Error(ErrorKind::argument, os.str());
    }

    IntegerAssignment current;
    current.k = static_cast<std::uint32_t>(k);
    current.labels.assign(n, 0);
    OracleResult best{0.0, current};
    if (n <= 1) return best;

    // A relabeling that maps node 0's label to 0 never moves an optimum later in
    // lexicographic order, so node 0 stays at label 0.
    double cut = 0.0;  // all labels equal
    double abs_weight = 0.0;
    for (const auto& e : g.edges()) abs_weight += std::abs(e.weight);
    const double slack = 1e-9 * (1.0 + abs_weight);
    auto relabel = [&](std::size_t node, std::uint32_t next) {
        const auto prev = current.labels[node];
        for (const auto& nb : g.neighbors(static_cast<NodeId>(node))) {
            const auto other = current.labels[nb.node];
            if (other == prev) cut += nb.weight;
            if (other == next) cut -= nb.weight;
        }
        current.labels[node] = next;
    };
    double best_tracked = cut;
    while (true) {
        std::size_t j = n - 1;
        while (j > 0 && current.labels[j] + 1 == k) {
            relabel(j, 0);
            --j;
        }
        if (j == 0) break;
        relabel(j, current.labels[j] + 1);
        if (cut > best_tracked + slack) {
            best_tracked = cut;
            best.assignment = current;
        }
    }
    best.cut = cut_value(g, best.assignment);
    return best;
}

}  // namespace ros
