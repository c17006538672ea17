#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qgt {

/// Edge-perspective left degree distribution lambda_1..lambda_d.
class DegreeProfile {
public:
    DegreeProfile() = default;

    int max_degree() const { return static_cast<int>(lambda_.size()); }
    /// lambda_i for degree i in [1, d]; 0 outside.
    double lambda(int degree) const;
    std::span<const double> lambdas() const { return lambda_; }
    /// Average left degree: 1 / sum(lambda_i / i).
    double average_degree() const { return average_; }
    /// Node-perspective fractions L_i = lambda_i / i * average_degree, index i - 1.
    std::vector<double> node_fractions() const;

    friend DegreeProfile profile_from_lambda(std::span<const double> lambda);

private:
    std::vector<double> lambda_;
    double average_ = 0.0;
};

/// Validates and normalizes lambda (index i - 1 holds degree i).
/// Throws std::invalid_argument on negative entries, an all-zero vector, or a sum
/// further than 1e-9 from one.
DegreeProfile profile_from_lambda(std::span<const double> lambda);

/// A right-regular bipartite graph. Right node i lists its r left neighbors in
/// ascending order; the list position is the signature column a neighbor uses.
class BipartiteGraph {
public:
    struct Incidence {
        std::uint32_t node;
        std::uint32_t position;
    };

    BipartiteGraph() = default;
    /// Builds from explicit right adjacency. Every list must have the same length r
    /// and be strictly ascending with entries below N. Untested (degree 0) items are allowed.
    BipartiteGraph(std::uint32_t N, std::vector<std::vector<std::uint32_t>> right_adj);

    std::uint32_t left_count() const { return n_; }
    std::uint32_t right_count() const { return m_; }
    std::uint32_t right_degree() const { return r_; }
    std::size_t edge_count() const { return right_.size(); }

    std::span<const std::uint32_t> right_neighbors(std::uint32_t node) const {
        return {right_.data() + static_cast<std::size_t>(node) * r_, r_};
    }
    std::span<const Incidence> left_incidences(std::uint32_t item) const {
        return {left_.data() + left_offsets_[item], left_offsets_[item + 1] - left_offsets_[item]};
    }
    std::uint32_t left_degree(std::uint32_t item) const {
        return left_offsets_[item + 1] - left_offsets_[item];
    }
    std::vector<std::vector<std::uint32_t>> right_adjacency() const;

    /// Throws std::logic_error describing the first broken invariant.
    void validate() const;

private:
    friend BipartiteGraph sample_graph(std::uint32_t, std::uint32_t, std::uint32_t, const DegreeProfile&,
                                       std::uint64_t);
    BipartiteGraph(std::uint32_t N, std::uint32_t M, std::uint32_t r, std::vector<std::uint32_t> flat);
    void build_left();

    std::uint32_t n_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t r_ = 0;
    std::vector<std::uint32_t> right_;  // M * r, row-major
    std::vector<std::uint32_t> left_offsets_;
    std::vector<Incidence> left_;
};

/// Configuration-model sample with left degrees drawn from the node-perspective
/// profile, degree repair to hit exactly M * r edges, and multi-edge removal by swaps.
/// Deterministic in (N, M, r, profile, seed). Throws std::domain_error when
/// M * r lies outside [N, N * min(d, M)].
BipartiteGraph sample_graph(std::uint32_t N, std::uint32_t M, std::uint32_t r, const DegreeProfile& profile,
                            std::uint64_t seed);

}  // namespace qgt
