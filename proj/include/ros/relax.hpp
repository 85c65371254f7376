#ifndef ROS_RELAX_HPP
#define ROS_RELAX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ros/graph.hpp"

namespace ros {

/// Entries at or below this value are outside a column's support.
inline constexpr double kDefaultSupportTol = 1e-8;
/// Column-sum deviation that constructors silently renormalize.
inline constexpr double kRenormalizeTol = 1e-6;

/// How AssignmentMatrix::from_values treats column sums.
enum class Normalize {
    strict,  // renormalize deviations up to kRenormalizeTol, reject larger ones
    rescale  // divide every column by its (positive) sum
};

/**
 * A k x N matrix whose columns lie on the probability simplex.
 *
 * Column j is the label distribution of node j. Every instance satisfies:
 * entries finite and >= 0, each column sums to 1 within 1e-9.
 */
class AssignmentMatrix {
public:
    AssignmentMatrix() = default;

    /// Throws Error(argument) for negative/non-finite entries, zero columns,
    /// or (strict) sums off by more than kRenormalizeTol.
    static AssignmentMatrix from_values(Eigen::MatrixXd values, Normalize mode = Normalize::strict);
    static AssignmentMatrix uniform(std::size_t k, std::size_t n);
    static AssignmentMatrix one_hot(const IntegerAssignment& a);

    std::size_t k() const { return static_cast<std::size_t>(values_.rows()); }
    std::size_t n() const { return static_cast<std::size_t>(values_.cols()); }
    const Eigen::MatrixXd& values() const { return values_; }
    double operator()(std::size_t label, std::size_t node) const { return values_(label, node); }

    /// Column argmax (lowest index on ties).
    IntegerAssignment argmax_labels() const;
    bool is_integral(double tol = 0.0) const;

private:
    explicit AssignmentMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {}

    Eigen::MatrixXd values_;
};

/// Per-column index sets {i : X_ij > tol}.
struct SupportPattern {
    std::vector<std::vector<std::uint32_t>> columns;

    /// Product of the set sizes as a double (exact up to 2^53).
    double product() const;
};

/// f(X; W) = Tr(X W X^T) = sum over edges of 2 w <X_i, X_j>. O(|E| k).
double objective_f(const AssignmentMatrix& x, const WeightedGraph& g);

/// f evaluated at the one-hot matrix of `a`: 2 * same_label_weight.
double objective_f(const IntegerAssignment& a, const WeightedGraph& g);

/// 2 X W; column i is 2 sum_{j in N(i)} w_ij X_j.
Eigen::MatrixXd gradient_f(const Eigen::MatrixXd& x, const WeightedGraph& g);
Eigen::MatrixXd gradient_f(const AssignmentMatrix& x, const WeightedGraph& g);

/// Unrestricted version of objective_f used by finite-difference checks.
double objective_f(const Eigen::MatrixXd& x, const WeightedGraph& g);

/// Cut value implied by an objective value: total_edge_weight - f / 2.
double cut_from_objective(const WeightedGraph& g, double fval);

/// Throws Error(numeric) when some column has no entry above tol.
SupportPattern support_pattern(const AssignmentMatrix& x, double tol = kDefaultSupportTol);

/// True when every column of x keeps at least 1 - tol of its mass on the
/// support of the matching anchor column.
bool neighborhood_contains(const AssignmentMatrix& anchor, const AssignmentMatrix& x,
                           double tol = kDefaultSupportTol);

/// All integer labelings inside the anchor's neighborhood, in lexicographic
/// order of label vectors (node 0 most significant). Throws
/// EnumerationTooLarge before enumerating when the product exceeds cap.
std::vector<IntegerAssignment> enumerate_integer_neighborhood(const AssignmentMatrix& anchor,
                                                              std::size_t cap,
                                                              double support_tol = kDefaultSupportTol);

struct BasinCheck {
    bool holds = false;
    double max_deviation = 0.0;
};

/// Draws `samples` points uniformly (Dirichlet(1)) from the relative interior
/// of the anchor's neighborhood and compares f against f(anchor).
BasinCheck verify_basin(const AssignmentMatrix& anchor, const WeightedGraph& g, std::size_t samples,
                        std::uint64_t seed, double tol, double support_tol = kDefaultSupportTol);

/// Text block: line `k N`, then N lines of k probabilities (node order).
std::string serialize_assignment(const AssignmentMatrix& x);
AssignmentMatrix parse_assignment(std::string_view text);

}  // namespace ros

#endif  // ROS_RELAX_HPP
