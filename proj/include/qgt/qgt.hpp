#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgt/bch.hpp"
#include "qgt/graph.hpp"

namespace qgt {

/// s x r signature U: an all-ones counting row stacked on H_t.
class SignatureMatrix {
public:
    SignatureMatrix(int t, std::uint32_t r) : h_(t, r) {}

    int t() const { return h_.t(); }
    std::uint32_t cols() const { return h_.cols(); }
    int rows() const { return h_.rows() + 1; }
    const ParityCheckMatrix& parity_check() const { return h_; }

    int entry(int row, std::uint32_t col) const { return row == 0 ? 1 : h_.bit(row - 1, col); }
    std::vector<std::uint8_t> column(std::uint32_t col) const;

    /// block[k] += sign * U[k][col] for all rows k; block has rows() entries.
    void accumulate(std::span<std::int32_t> block, std::uint32_t col, std::int32_t sign) const;

private:
    ParityCheckMatrix h_;
};

SignatureMatrix build_signature(int t, std::uint32_t r);

/// Graph plus signature; implicitly the m x N measurement matrix with m = M * s.
struct TestPlan {
    BipartiteGraph graph;
    SignatureMatrix signature;
    std::uint64_t seed = 0;

    TestPlan(BipartiteGraph g, int t, std::uint64_t seed_ = 0);

    int t() const { return signature.t(); }
    std::uint32_t items() const { return graph.left_count(); }
    std::uint32_t nodes() const { return graph.right_count(); }
    int tests_per_node() const { return signature.rows(); }
    std::size_t tests() const { return static_cast<std::size_t>(nodes()) * tests_per_node(); }

    /// Dense row-major m x N measurement matrix. Only for small instances and tests.
    std::vector<std::uint8_t> dense_matrix() const;
};

struct SupportVector {
    std::uint32_t N = 0;
    std::vector<std::uint32_t> defectives;  // sorted, unique, < N

    SupportVector() = default;
    /// Sorts and validates; throws std::invalid_argument on duplicates or out-of-range indices.
    SupportVector(std::uint32_t n, std::vector<std::uint32_t> items);
};

/// Test outcomes, M blocks of s nonnegative counts.
struct TestResults {
    std::uint32_t blocks = 0;
    int block_size = 0;
    std::vector<std::int32_t> values;

    std::span<const std::int32_t> block(std::uint32_t i) const {
        return {values.data() + static_cast<std::size_t>(i) * block_size, static_cast<std::size_t>(block_size)};
    }
};

struct DecodeOutcome {
    std::vector<std::uint32_t> identified;  // sorted
    int iterations = 0;                     // iterations that resolved at least one node
    std::uint32_t resolved_nodes = 0;
    bool stalled = false;       // unresolved nodes with residual count > t remain
    std::uint32_t failed_nodes = 0;       // nodes left unresolved after a syndrome decode failure
    std::uint32_t decode_failures = 0;    // failure events over the whole run
    /// Cumulative identified count after each executed iteration.
    std::vector<std::uint32_t> identified_after;
    /// Iteration (1-based) in which each right node was resolved; 0 if never.
    std::vector<std::uint32_t> resolved_in;
};

TestResults encode(const TestPlan& plan, const SupportVector& x);

struct DecodeOptions {
    /// <= 0 selects the default M + 1.
    int max_iterations = 0;
    /// Re-encode the remaining support after every iteration and compare residuals.
    /// Needs the true support; quadratic cost, for small instances only.
    const SupportVector* conservation_check = nullptr;
};

/// Iterative peeling: every iteration resolves, from the residuals at its start,
/// each unresolved node with residual count <= t, then subtracts the identified
/// items' signature columns from all their incident nodes.
DecodeOutcome peel_decode(const TestPlan& plan, const TestResults& y, const DecodeOptions& options = {});

}  // namespace qgt
