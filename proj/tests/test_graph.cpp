#include <doctest.h>

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qgt/graph.hpp"

using qgt::BipartiteGraph;
using qgt::profile_from_lambda;

namespace {

qgt::DegreeProfile mixed_profile() {
    const std::vector<double> lambda{0.0, 0.2, 0.3, 0.0, 0.0, 0.5};
    return profile_from_lambda(lambda);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(profile_from_lambda(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(profile_from_lambda(std::vector<double>{0.5, -0.1, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(profile_from_lambda(std::vector<double>{0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(profile_from_lambda(std::vector<double>{0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(profile_from_lambda(std::vector<double>{0.5, NAN}), std::invalid_argument);
}

TEST_CASE("average degree and node fractions") {
    const auto regular = profile_from_lambda(std::vector<double>{0, 0, 1});
    CHECK(regular.average_degree() == doctest::Approx(3.0));
    CHECK(regular.lambda(3) == 1.0);
    CHECK(regular.lambda(0) == 0.0);
    CHECK(regular.lambda(4) == 0.0);

    const auto p = mixed_profile();
    const double inv = 0.2 / 2 + 0.3 / 3 + 0.5 / 6;
    CHECK(p.average_degree() == doctest::Approx(1.0 / inv));
    const auto L = p.node_fractions();
    double total = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
        total += L[i];
        mean += L[i] * static_cast<double>(i + 1);
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK(mean == doctest::Approx(p.average_degree()));
}

TEST_CASE("explicit adjacency is validated") {
    CHECK_NOTHROW(BipartiteGraph(5, {{0, 1, 4}, {1, 2, 3}}));
    CHECK_THROWS_AS(BipartiteGraph(5, {{0, 1, 4}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(5, {{0, 1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(5, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(5, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(5, {}), std::invalid_argument);

    const BipartiteGraph g(5, {{0, 1, 4}, {1, 2, 3}});
    CHECK(g.left_degree(1) == 2u);
    CHECK(g.left_degree(4) == 1u);
    auto inc = g.left_incidences(1);
    REQUIRE(inc.size() == 2);
    CHECK(inc[0].node == 0u);
    CHECK(inc[0].position == 1u);
    CHECK(inc[1].node == 1u);
    CHECK(inc[1].position == 0u);
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("sampled graphs satisfy every structural invariant") {
    const auto p = mixed_profile();
    for (auto [N, M, r] : std::vector<std::array<std::uint32_t, 3>>{{2000, 50, 160}, {5000, 17, 1200}, {100, 3, 80}, {60, 7, 40}}) {
        const auto g = qgt::sample_graph(N, M, r, p, 99);
        CHECK_NOTHROW(g.validate());
        CHECK(g.right_count() == M);
        CHECK(g.right_degree() == r);
        CHECK(g.edge_count() == static_cast<std::size_t>(M) * r);
        for (std::uint32_t v = 0; v < N; ++v) {
            CHECK(g.left_degree(v) >= 1u);
            CHECK(g.left_degree(v) <= std::min<std::uint32_t>(6u, M));
        }
    }
}

TEST_CASE("degree cap follows M when M < d") {
    const auto p = profile_from_lambda(std::vector<double>{0, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto g = qgt::sample_graph(30, 2, 20, p, 5);
    for (std::uint32_t v = 0; v < 30; ++v) CHECK(g.left_degree(v) <= 2u);
}

TEST_CASE("infeasible dimensions are rejected") {
    const auto p = mixed_profile();
    CHECK_THROWS_AS(qgt::sample_graph(100, 2, 20, p, 1), std::domain_error);   // 40 edges < N
    CHECK_THROWS_AS(qgt::sample_graph(100, 10, 101, p, 1), std::domain_error); // r > N
    CHECK_THROWS_AS(qgt::sample_graph(10, 20, 9, p, 1), std::domain_error);    // > N * d edges
    CHECK_THROWS_AS(qgt::sample_graph(0, 1, 1, p, 1), std::invalid_argument);
}

TEST_CASE("sampling is deterministic per seed") {
    const auto p = mixed_profile();
    const auto a = qgt::sample_graph(3000, 40, 250, p, 7).right_adjacency();
    const auto b = qgt::sample_graph(3000, 40, 250, p, 7).right_adjacency();
    const auto c = qgt::sample_graph(3000, 40, 250, p, 8).right_adjacency();
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("left degree histogram fits the node-perspective profile") {
    const auto p = mixed_profile();
    const std::uint32_t N = 100000, M = 100;
    const auto r = static_cast<std::uint32_t>(std::llround(p.average_degree() * N / M));
    const auto g = qgt::sample_graph(N, M, r, p, 2024);
    std::vector<double> counts(7, 0.0);
    for (std::uint32_t v = 0; v < N; ++v) counts[g.left_degree(v)] += 1.0;
    const auto L = p.node_fractions();
    double chi2 = 0.0;
    int cells = 0;
    for (int i = 1; i <= 6; ++i) {
        const double expect = N * L[i - 1];
        if (expect == 0.0) {
            // Degree repair may move a handful of items into an empty class.
            CHECK(counts[i] < 0.01 * N);
            continue;
        }
        chi2 += (counts[i] - expect) * (counts[i] - expect) / expect;
        ++cells;
    }
    // chi-square with cells - 1 = 2 dof; 99.9% quantile is 13.8.
    CHECK(cells == 3);
    CHECK(chi2 < 13.8);
}

}
