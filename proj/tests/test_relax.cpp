#include <cmath>
#include <set>

#include "doctest.h"
#include "ros/error.hpp"
#include "ros/graph_io.hpp"
#include "ros/relax.hpp"
#include "ros/rng.hpp"

using namespace ros;

namespace {

WeightedGraph triangle() { return parse_gset("3 3\n1 2 1\n1 3 1\n2 3 1"); }

// Columns (p, 1-p), (1, 0), (0, 1): the fractional optimum of the unit triangle.
AssignmentMatrix triangle_star(double p) {
    Eigen::MatrixXd v(2, 3);
    v << p, 1, 0,
         1 - p, 0, 1;
    return AssignmentMatrix::from_values(v);
}

WeightedGraph random_graph(std::size_t n, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (uniform01(rng) < density) edges.push_back({i, j, uniform(rng, -5.0, 5.0)});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

AssignmentMatrix random_point(std::size_t k, std::size_t n, Rng& rng) {
    Eigen::MatrixXd v(k, n);
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        for (Eigen::Index i = 0; i < v.rows(); ++i) v(i, j) = exponential(rng);
    }
    return AssignmentMatrix::from_values(v, Normalize::rescale);
}

// Independent dense evaluation of Tr(X W X^T).
double dense_trace(const Eigen::MatrixXd& x, const WeightedGraph& g) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(g.node_count(), g.node_count());
    for (const auto& e : g.edges()) w(e.u, e.v) = w(e.v, e.u) = e.weight;
    return (x * w * x.transpose()).trace();
}

}  // namespace

TEST_CASE("AssignmentMatrix construction policy") {
    Eigen::MatrixXd v(2, 2);
    v << 0.5, 1.0 + 5e-7,
         0.5, 0.0;
    auto x = AssignmentMatrix::from_values(v);
    CHECK(x.values().col(1).sum() == doctest::Approx(1.0).epsilon(1e-15));

    v(0, 1) = 1.1;
    CHECK_THROWS_AS(AssignmentMatrix::from_values(v), Error);
    CHECK(AssignmentMatrix::from_values(v, Normalize::rescale)(0, 1) == 1.0);

    v(0, 1) = -0.1;
    CHECK_THROWS_AS(AssignmentMatrix::from_values(v, Normalize::rescale), Error);
    v(0, 1) = NAN;
    CHECK_THROWS_AS(AssignmentMatrix::from_values(v, Normalize::rescale), Error);
    v(0, 1) = 0.0;
    v(1, 1) = 0.0;
    CHECK_THROWS_AS(AssignmentMatrix::from_values(v, Normalize::rescale), Error);
}

TEST_CASE("objective_f examples") {
    auto tri = triangle();
    CHECK(objective_f(triangle_star(0.3), tri) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(objective_f(AssignmentMatrix::uniform(2, 3), tri) == doctest::Approx(3.0).epsilon(1e-15));

    auto g = random_graph(9, 0.5, 2);
    CHECK(objective_f(AssignmentMatrix::uniform(1, 9), g) == doctest::Approx(2.0 * g.total_edge_weight()));
    CHECK_THROWS_AS(objective_f(AssignmentMatrix::uniform(2, 4), tri), Error);
}

TEST_CASE("objective_f agrees with the dense trace") {
    Rng rng(5);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto g = random_graph(12, 0.4, s);
        auto x = random_point(3, 12, rng);
        CHECK(objective_f(x, g) == doctest::Approx(dense_trace(x.values(), g)).epsilon(1e-12));
    }
}

TEST_CASE("gradient_f examples") {
    auto edgeless = parse_gset("4 0");
    Rng rng(1);
    CHECK(gradient_f(random_point(3, 4, rng), edgeless).isZero(0.0));

    auto grad = gradient_f(AssignmentMatrix::uniform(2, 3), triangle());
    CHECK((grad.array() == 2.0).all());
}

TEST_CASE("gradient_f matches central finite differences on 20 fixtures") {
    Rng rng(2024);
    const double h = 1e-5;
    for (int fixture = 0; fixture < 20; ++fixture) {
        const std::size_t n = 2 + uniform_index(rng, 29);
        const std::size_t k = 1 + uniform_index(rng, 4);
        auto g = random_graph(n, 0.3, 500 + fixture);
        Eigen::MatrixXd x = random_point(k, n, rng).values();
        const Eigen::MatrixXd analytic = gradient_f(x, g);
        Eigen::MatrixXd numeric(k, n);
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            for (Eigen::Index i = 0; i < x.rows(); ++i) {
                Eigen::MatrixXd xp = x, xm = x;
                xp(i, j) += h;
                xm(i, j) -= h;
                numeric(i, j) = (objective_f(xp, g) - objective_f(xm, g)) / (2 * h);
            }
        }
        const double scale = std::max(analytic.norm(), 1e-12);
        CHECK((analytic - numeric).norm() / scale < 1e-6);
    }
}

TEST_CASE("cut_from_objective examples") {
    auto tri = triangle();
    CHECK(cut_from_objective(tri, 2.0) == 2.0);
    CHECK(cut_from_objective(tri, 2.0 * tri.total_edge_weight()) == 0.0);
    CHECK(cut_from_objective(parse_gset("3 0"), 0.0) == 0.0);
}

TEST_CASE("one-hot identity f/2 + cut = total") {
    Rng rng(8);
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto g = random_graph(10, 0.5, 40 + s);
        IntegerAssignment a{std::vector<std::uint32_t>(10), 3};
        for (auto& l : a.labels) l = static_cast<std::uint32_t>(uniform_index(rng, 3));
        const double f = objective_f(AssignmentMatrix::one_hot(a), g);
        CHECK(f == doctest::Approx(objective_f(a, g)).epsilon(1e-12));
        CHECK(f / 2 + cut_value(g, a) == doctest::Approx(g.total_edge_weight()).epsilon(1e-9));
    }
}

TEST_CASE("support_pattern examples") {
    auto one_hot = AssignmentMatrix::one_hot({{1, 0}, 3});
    auto s = support_pattern(one_hot);
    CHECK(s.columns[0] == std::vector<std::uint32_t>{1});

    auto star = support_pattern(triangle_star(0.3));
    CHECK(star.columns[0] == std::vector<std::uint32_t>{0, 1});
    CHECK(star.columns[1] == std::vector<std::uint32_t>{0});
    CHECK(star.columns[2] == std::vector<std::uint32_t>{1});

    auto uniform = support_pattern(AssignmentMatrix::uniform(4, 1), 0.0);
    CHECK(uniform.columns[0] == std::vector<std::uint32_t>{0, 1, 2, 3});

    CHECK_THROWS_AS(support_pattern(AssignmentMatrix::uniform(4, 1), 0.5), Error);
    CHECK_THROWS_AS(support_pattern(AssignmentMatrix::uniform(4, 1), -1.0), Error);
}

TEST_CASE("neighborhood_contains examples") {
    auto star = triangle_star(0.3);
    CHECK(neighborhood_contains(star, star));
    auto x1 = AssignmentMatrix::one_hot({{1, 0, 1}, 2});
    CHECK(neighborhood_contains(star, x1));
    auto anchor = AssignmentMatrix::one_hot({{0, 0, 1}, 2});
    CHECK_FALSE(neighborhood_contains(anchor, AssignmentMatrix::uniform(2, 3)));
    CHECK_THROWS_AS(neighborhood_contains(anchor, AssignmentMatrix::uniform(3, 3)), Error);
}

TEST_CASE("enumerate_integer_neighborhood examples") {
    auto out = enumerate_integer_neighborhood(triangle_star(0.3), 100);
    REQUIRE(out.size() == 2);
    CHECK(out[0].labels == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(out[1].labels == std::vector<std::uint32_t>{1, 0, 1});

    auto single = enumerate_integer_neighborhood(AssignmentMatrix::one_hot({{2, 0, 1}, 3}), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].labels == std::vector<std::uint32_t>{2, 0, 1});

    auto four = enumerate_integer_neighborhood(AssignmentMatrix::uniform(2, 2), 10);
    CHECK(four.size() == 4);
    std::set<std::vector<std::uint32_t>> unique;
    for (const auto& a : four) unique.insert(a.labels);
    CHECK(unique.size() == 4);
}

TEST_CASE("enumerate_integer_neighborhood guards its size") {
    try {
        enumerate_integer_neighborhood(AssignmentMatrix::uniform(3, 40), 1'000'000);
        FAIL("no throw");
    } catch (const EnumerationTooLarge& e) {
        CHECK(e.product() == doctest::Approx(std::pow(3.0, 40)));
    }
    // 3^45 overflows 64 bits; the guard must still fire.
    CHECK_THROWS_AS(enumerate_integer_neighborhood(AssignmentMatrix::uniform(3, 45), SIZE_MAX), EnumerationTooLarge);
}

TEST_CASE("enumeration size equals the support product") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Eigen::MatrixXd v = Eigen::MatrixXd::Zero(3, 5);
        for (Eigen::Index j = 0; j < 5; ++j) {
            for (Eigen::Index i = 0; i < 3; ++i) v(i, j) = uniform01(rng) < 0.5 ? 0.0 : uniform01(rng) + 0.1;
            if (v.col(j).sum() == 0.0) v(0, j) = 1.0;
        }
        auto x = AssignmentMatrix::from_values(v, Normalize::rescale);
        auto s = support_pattern(x);
        CHECK(static_cast<double>(enumerate_integer_neighborhood(x, 1000).size()) == s.product());
    }
}

TEST_CASE("verify_basin examples") {
    auto tri = triangle();
    auto star = verify_basin(triangle_star(0.3), tri, 100, 1, 1e-9);
    CHECK(star.holds);
    CHECK(star.max_deviation <= 1e-9);

    auto uniform = verify_basin(AssignmentMatrix::uniform(2, 3), tri, 100, 1, 1e-9);
    CHECK_FALSE(uniform.holds);
    CHECK(uniform.max_deviation > 0.1);

    auto integral = verify_basin(AssignmentMatrix::one_hot({{0, 1, 1}, 2}), tri, 10, 1, 0.0);
    CHECK(integral.holds);
    CHECK(integral.max_deviation == 0.0);
}

TEST_CASE("fractional anchors between optimal labelings form a basin") {
    // Path 0-1-2 at its optimum (0,1,0) plus an isolated node 3 whose column
    // can be mixed freely without changing f.
    auto g = parse_gset("4 2\n1 2 1\n2 3 1");
    Eigen::MatrixXd v(2, 4);
    v << 0, 1, 0, 0.4,
         1, 0, 1, 0.6;
    auto anchor = AssignmentMatrix::from_values(v);
    for (const auto& a : enumerate_integer_neighborhood(anchor, 16)) CHECK(cut_value(g, a) == 2.0);
    CHECK(verify_basin(anchor, g, 200, 5, 1e-9).holds);
}

TEST_CASE("assignment text block round trip") {
    Rng rng(12);
    auto x = random_point(3, 7, rng);
    auto text = serialize_assignment(x);
    CHECK(text.rfind("3 7\n", 0) == 0);
    auto back = parse_assignment(text);
    CHECK(back.values() == x.values());
    CHECK_THROWS_AS(parse_assignment("2 2\n0.5 0.5\n"), ParseError);
}
