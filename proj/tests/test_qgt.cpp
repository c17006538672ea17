#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>

#include "example.hpp"
#include "oracles.hpp"
#include "qgt/qgt.hpp"
#include "qgt/random.hpp"
#include "qgt/sim.hpp"

namespace {

qgt::TestPlan random_plan(std::uint32_t N, std::uint32_t M, std::uint32_t r, int t, std::uint64_t seed) {
    const std::vector<double> lambda{0.0, 0.5, 0.5};
    return qgt::TestPlan(qgt::sample_graph(N, M, r, qgt::profile_from_lambda(lambda), seed), t, seed);
}

qgt::SupportVector random_support(std::uint32_t N, std::uint32_t k, std::mt19937_64& rng) {
    std::set<std::uint32_t> s;
    std::uniform_int_distribution<std::uint32_t> u(0, N - 1);
    while (s.size() < k) s.insert(u(rng));
    return qgt::SupportVector(N, {s.begin(), s.end()});
}

}  // namespace

TEST_SUITE("qgt") {

TEST_CASE("worked example: measurement matrix") {
    const auto plan = example::plan();
    CHECK(plan.tests_per_node() == 4);
    CHECK(plan.tests() == 12u);
    const auto a = plan.dense_matrix();
    for (int row = 0; row < 12; ++row)
        for (int col = 0; col < 14; ++col) {
            CAPTURE(row);
            CAPTURE(col);
            CHECK(a[row * 14 + col] == example::kMatrix[row][col]);
        }
}

TEST_CASE("worked example: encode and three-iteration peel") {
    const auto plan = example::plan();
    const auto x = example::support();
    const auto y = qgt::encode(plan, x);
    CHECK(y.values == example::kResults);

    qgt::DecodeOptions opts;
    opts.conservation_check = &x;
    const auto out = qgt::peel_decode(plan, y, opts);
    CHECK(out.identified == x.defectives);
    CHECK(out.iterations == 3);
    CHECK(out.resolved_nodes == 3u);
    CHECK_FALSE(out.stalled);
    CHECK(out.failed_nodes == 0u);
    CHECK(out.resolved_in == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(out.identified_after == std::vector<std::uint32_t>{1, 2, 3});
}

TEST_CASE("signature: first row all ones, rest is H") {
    const qgt::SignatureMatrix u(2, 12);
    CHECK(u.rows() == 9);
    for (std::uint32_t c = 0; c < 12; ++c) {
        CHECK(u.entry(0, c) == 1);
        for (int row = 1; row < u.rows(); ++row) CHECK(u.entry(row, c) == u.parity_check().bit(row - 1, c));
        const auto col = u.column(c);
        std::vector<std::int32_t> block(u.rows(), 0);
        u.accumulate(block, c, 1);
        for (int row = 0; row < u.rows(); ++row) CHECK(block[row] == col[row]);
    }
}

TEST_CASE("fast encode equals dense A x") {
    std::mt19937_64 rng(41);
    for (int t = 1; t <= 4; ++t) {
        const auto plan = random_plan(300, 12, 60, t, 100 + t);
        const auto a = plan.dense_matrix();
        const auto x = random_support(300, 25, rng);
        const auto y = qgt::encode(plan, x);
        for (std::size_t row = 0; row < plan.tests(); ++row) {
            std::int32_t acc = 0;
            for (auto v : x.defectives) acc += a[row * 300 + v];
            REQUIRE(y.values[row] == acc);
        }
    }
}

TEST_CASE("empty support decodes to nothing") {
    const auto plan = example::plan();
    const auto out = qgt::peel_decode(plan, qgt::encode(plan, qgt::SupportVector(14, {})));
    CHECK(out.identified.empty());
    CHECK(out.resolved_nodes == 3u);
    CHECK(out.iterations == 1);
}

TEST_CASE("stall when every node sees more than t defectives") {
    const auto plan = example::plan();
    // Item 10 (index 9) and item 13 (index 12) sit in all three nodes.
    const qgt::SupportVector x(14, {3, 9, 12});
    const auto out = qgt::peel_decode(plan, qgt::encode(plan, x));
    CHECK(out.identified.empty());
    CHECK(out.stalled);
    CHECK(out.iterations == 0);
}

TEST_CASE("support validation") {
    CHECK_THROWS_AS(qgt::SupportVector(5, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(qgt::SupportVector(5, {5}), std::invalid_argument);
    CHECK(qgt::SupportVector(5, {4, 0, 2}).defectives == std::vector<std::uint32_t>{0, 2, 4});
    const auto plan = example::plan();
    CHECK_THROWS_AS(qgt::encode(plan, qgt::SupportVector(13, {})), std::invalid_argument);
    qgt::TestResults bad{3, 4, std::vector<std::int32_t>(11, 0)};
    CHECK_THROWS_AS(qgt::peel_decode(plan, bad), std::invalid_argument);
}

TEST_CASE("residuals stay equal to the re-encoded remaining support") {
    std::mt19937_64 rng(3);
    for (int t = 1; t <= 4; ++t)
        for (int trial = 0; trial < 20; ++trial) {
            const auto plan = random_plan(400, 30, 40, t, rng());
            const auto x = random_support(400, 10 + trial, rng);
            qgt::DecodeOptions opts;
            opts.conservation_check = &x;
            CHECK_NOTHROW(qgt::peel_decode(plan, qgt::encode(plan, x), opts));
        }
}

TEST_CASE("decoder never reports a non-defective item") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int t = 1 + trial % 4;
        const auto plan = random_plan(1000, 40, 60, t, rng());
        const auto x = random_support(1000, 5 + trial % 60, rng);
        const auto out = qgt::peel_decode(plan, qgt::encode(plan, x));
        std::vector<std::uint32_t> extra;
        std::set_difference(out.identified.begin(), out.identified.end(), x.defectives.begin(), x.defectives.end(),
                            std::back_inserter(extra));
        REQUIRE(extra.empty());
        if (out.resolved_nodes == plan.nodes()) {
            CHECK(out.identified.size() <= x.defectives.size());
        }
    }
}

TEST_CASE("successful decodes match exhaustive enumeration on tiny instances") {
    std::mt19937_64 rng(2718);
    int successes = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t N = 8 + static_cast<std::uint32_t>(rng() % 7);
        const std::uint32_t M = 2 + static_cast<std::uint32_t>(rng() % 3);
        const std::uint32_t r = (N * 2 + M - 1) / M;
        if (r > N) continue;
        const int t = 1 + static_cast<int>(rng() % 2);
        const auto plan = random_plan(N, M, r, t, rng());
        const auto x = random_support(N, static_cast<std::uint32_t>(rng() % 4), rng);
        const auto y = qgt::encode(plan, x);
        const auto out = qgt::peel_decode(plan, y);
        if (out.resolved_nodes != plan.nodes()) continue;
        ++successes;
        const auto hits = oracle::consistent_supports(plan, y.values);
        REQUIRE(hits.size() == 1);
        CHECK(hits.front() == out.identified);
    }
    CHECK(successes > 10);
}

TEST_CASE("iteration cap") {
    const auto plan = example::plan();
    qgt::DecodeOptions opts;
    opts.max_iterations = 2;
    const auto out = qgt::peel_decode(plan, qgt::encode(plan, example::support()), opts);
    CHECK(out.iterations == 2);
    CHECK(out.identified.size() == 2);
    CHECK_FALSE(out.stalled);
}

TEST_CASE("mix_seed separates counters") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(qgt::mix_seed(42, i));
    CHECK(seen.size() == 1000);
    CHECK(qgt::mix_seed(1, 0) != qgt::mix_seed(2, 0));
}

}
