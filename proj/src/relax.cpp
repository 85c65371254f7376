#include "ros/relax.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "ros/error.hpp"
#include "ros/rng.hpp"

namespace ros {

namespace {

void check_nodes(std::size_t n, const WeightedGraph& g) {
    if (n != g.node_count()) {
        std::ostringstream os;
        os << "matrix has " << n << " columns, graph has " << g.node_count() << " nodes";
        throw Error(ErrorKind::shape, os.str());
    }
}

}  // namespace

AssignmentMatrix AssignmentMatrix::from_values(Eigen::MatrixXd values, Normalize mode) {
    if (values.rows() < 1) throw Error(ErrorKind::argument, "assignment needs at least one row");
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
        auto col = values.col(j);
        for (Eigen::Index i = 0; i < values.rows(); ++i) {
            if (!std::isfinite(col(i)) || col(i) < 0.0) {
                std::ostringstream os;
                os << "entry (" << i << ", " << j << ") = " << col(i) << " is not a probability";
                throw Error(ErrorKind::argument, os.str());
            }
        }
        const double sum = col.sum();
        if (!(sum > 0.0)) throw Error(ErrorKind::argument, "column " + std::to_string(j) + " has zero mass");
        if (mode == Normalize::strict && std::abs(sum - 1.0) > kRenormalizeTol) {
            std::ostringstream os;
            os << "column " << j << " sums to " << sum;
            throw Error(ErrorKind::argument, os.str());
        }
        // Sums within 1e-12 are left bit-exact.
        if (mode == Normalize::rescale ? sum != 1.0 : std::abs(sum - 1.0) > 1e-12) col /= sum;
    }
    return AssignmentMatrix(std::move(values));
}

AssignmentMatrix AssignmentMatrix::uniform(std::size_t k, std::size_t n) {
    if (k < 1) throw Error(ErrorKind::argument, "k must be positive");
    return AssignmentMatrix(Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(k),
                                                      static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(k)));
}

AssignmentMatrix AssignmentMatrix::one_hot(const IntegerAssignment& a) {
    a.validate();
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(a.k, static_cast<Eigen::Index>(a.labels.size()));
    for (std::size_t j = 0; j < a.labels.size(); ++j) v(a.labels[j], static_cast<Eigen::Index>(j)) = 1.0;
    return AssignmentMatrix(std::move(v));
}

IntegerAssignment AssignmentMatrix::argmax_labels() const {
    IntegerAssignment a;
    a.k = static_cast<std::uint32_t>(k());
    a.labels.resize(n());
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
        Eigen::Index best = 0;
        values_.col(j).maxCoeff(&best);
        a.labels[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(best);
    }
    return a;
}

bool AssignmentMatrix::is_integral(double tol) const {
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
        if (values_.col(j).maxCoeff() < 1.0 - tol) return false;
    }
    return true;
}

double SupportPattern::product() const {
    double p = 1.0;
    for (const auto& c : columns) p *= static_cast<double>(c.size());
    return p;
}

double objective_f(const Eigen::MatrixXd& x, const WeightedGraph& g) {
    check_nodes(static_cast<std::size_t>(x.cols()), g);
    double f = 0.0;
    for (const auto& e : g.edges()) f += e.weight * x.col(e.u).dot(x.col(e.v));
    return 2.0 * f;
}

double objective_f(const AssignmentMatrix& x, const WeightedGraph& g) {
    return objective_f(x.values(), g);
}

double objective_f(const IntegerAssignment& a, const WeightedGraph& g) {
    return 2.0 * same_label_weight(g, a);
}

Eigen::MatrixXd gradient_f(const Eigen::MatrixXd& x, const WeightedGraph& g) {
    check_nodes(static_cast<std::size_t>(x.cols()), g);
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(x.rows(), x.cols());
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        auto col = grad.col(static_cast<Eigen::Index>(i));
        for (const auto& nb : g.neighbors(static_cast<NodeId>(i))) col += nb.weight * x.col(nb.node);
    }
    grad *= 2.0;
    return grad;
}

Eigen::MatrixXd gradient_f(const AssignmentMatrix& x, const WeightedGraph& g) {
    return gradient_f(x.values(), g);
}

double cut_from_objective(const WeightedGraph& g, double fval) {
    return g.total_edge_weight() - 0.5 * fval;
}

SupportPattern support_pattern(const AssignmentMatrix& x, double tol) {
    if (!(tol >= 0.0)) throw Error(ErrorKind::argument, "support tolerance must be >= 0");
    SupportPattern s;
    s.columns.resize(x.n());
    for (std::size_t j = 0; j < x.n(); ++j) {
        for (std::size_t i = 0; i < x.k(); ++i) {
            if (x(i, j) > tol) s.columns[j].push_back(static_cast<std::uint32_t>(i));
        }
        if (s.columns[j].empty()) {
            throw Error(ErrorKind::numeric, "column " + std::to_string(j) + " has empty support");
        }
    }
    return s;
}

bool neighborhood_contains(const AssignmentMatrix& anchor, const AssignmentMatrix& x, double tol) {
    if (anchor.k() != x.k() || anchor.n() != x.n()) {
        throw Error(ErrorKind::shape, "neighborhood test needs matrices of equal shape");
    }
    const auto support = support_pattern(anchor, tol);
    for (std::size_t j = 0; j < x.n(); ++j) {
        double mass = 0.0;
        for (auto i : support.columns[j]) mass += x(i, j);
        if (mass < 1.0 - tol) return false;
    }
    return true;
}

std::vector<IntegerAssignment> enumerate_integer_neighborhood(const AssignmentMatrix& anchor, std::size_t cap,
                                                              double support_tol) {
    const auto support = support_pattern(anchor, support_tol);
    // Overflow-safe product check: stop multiplying as soon as the cap is passed.
    double product = 1.0;
    std::size_t exact = 1;
    bool over = false;
    for (const auto& c : support.columns) {
        product *= static_cast<double>(c.size());
        if (!over && exact > cap / c.size()) over = true;
        if (!over) exact *= c.size();
    }
    if (over || exact > cap) throw EnumerationTooLarge(product, cap);

    std::vector<IntegerAssignment> out;
    out.reserve(exact);
    const std::size_t n = anchor.n();
    std::vector<std::size_t> digit(n, 0);
    for (std::size_t count = 0; count < exact; ++count) {
        IntegerAssignment a;
        a.k = static_cast<std::uint32_t>(anchor.k());
        a.labels.resize(n);
        for (std::size_t j = 0; j < n; ++j) a.labels[j] = support.columns[j][digit[j]];
        out.push_back(std::move(a));
        // Odometer, last node fastest.
        for (std::size_t j = n; j-- > 0;) {
            if (++digit[j] < support.columns[j].size()) break;
            digit[j] = 0;
        }
    }
    return out;
}

BasinCheck verify_basin(const AssignmentMatrix& anchor, const WeightedGraph& g, std::size_t samples,
                        std::uint64_t seed, double tol, double support_tol) {
    check_nodes(anchor.n(), g);
    const auto support = support_pattern(anchor, support_tol);
    const double reference = objective_f(anchor, g);
    Rng rng(seed);
    BasinCheck result{true, 0.0};
    Eigen::MatrixXd point(anchor.k(), anchor.n());
    for (std::size_t s = 0; s < samples; ++s) {
        point.setZero();
        for (std::size_t j = 0; j < anchor.n(); ++j) {
            double total = 0.0;
            for (auto i : support.columns[j]) {
                const double draw = exponential(rng);
                point(i, static_cast<Eigen::Index>(j)) = draw;
                total += draw;
            }
            point.col(static_cast<Eigen::Index>(j)) /= total;
        }
        const double deviation = std::abs(objective_f(point, g) - reference);
        result.max_deviation = std::max(result.max_deviation, deviation);
    }
    result.holds = result.max_deviation <= tol;
    return result;
}

std::string serialize_assignment(const AssignmentMatrix& x) {
    std::string out = std::to_string(x.k()) + " " + std::to_string(x.n()) + "\n";
    char buf[64];
    for (std::size_t j = 0; j < x.n(); ++j) {
        for (std::size_t i = 0; i < x.k(); ++i) {
            if (i) out += ' ';
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x(i, j));
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

AssignmentMatrix parse_assignment(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t k = 0;
    std::size_t n = 0;
    if (!(in >> k >> n) || k == 0) throw ParseError(ErrorKind::parse, 1, "assignment header must be 'k N'");
    Eigen::MatrixXd v(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!(in >> v(i, j))) throw ParseError(ErrorKind::parse, j + 2, "truncated assignment block");
        }
    }
    return AssignmentMatrix::from_values(std::move(v));
}

}  // namespace ros
