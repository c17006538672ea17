#include "qgt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgt/random.hpp"

namespace qgt {

double DegreeProfile::lambda(int degree) const {
    if (degree < 1 || degree > max_degree()) return 0.0;
    return lambda_[degree - 1];
}

std::vector<double> DegreeProfile::node_fractions() const {
    std::vector<double> out(lambda_.size());
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        out[i] = lambda_[i] / static_cast<double>(i + 1) * average_;
    return out;
}

DegreeProfile profile_from_lambda(std::span<const double> lambda) {
    if (lambda.empty()) throw std::invalid_argument("degree profile is empty");
    double sum = 0.0;
    for (double v : lambda) {
        if (!(v >= 0.0)) throw std::invalid_argument("degree profile has a negative entry");
        sum += v;
    }
    if (sum == 0.0) throw std::invalid_argument("degree profile sums to zero");
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("degree profile sums to " + std::to_string(sum) + ", not 1");

    DegreeProfile p;
    p.lambda_.assign(lambda.begin(), lambda.end());
    double inv_avg = 0.0;
    for (std::size_t i = 0; i < p.lambda_.size(); ++i) {
        p.lambda_[i] /= sum;
        inv_avg += p.lambda_[i] / static_cast<double>(i + 1);
    }
    p.average_ = 1.0 / inv_avg;
    return p;
}

BipartiteGraph::BipartiteGraph(std::uint32_t N, std::uint32_t M, std::uint32_t r, std::vector<std::uint32_t> flat)
    : n_(N), m_(M), r_(r), right_(std::move(flat)) {
    build_left();
}

BipartiteGraph::BipartiteGraph(std::uint32_t N, std::vector<std::vector<std::uint32_t>> right_adj) : n_(N) {
    if (right_adj.empty()) throw std::invalid_argument("graph needs at least one right node");
    m_ = static_cast<std::uint32_t>(right_adj.size());
    r_ = static_cast<std::uint32_t>(right_adj.front().size());
    if (r_ == 0) throw std::invalid_argument("right degree must be positive");
    right_.reserve(static_cast<std::size_t>(m_) * r_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        const auto& row = right_adj[i];
        if (row.size() != r_)
            throw std::invalid_argument("right node " + std::to_string(i) + " has degree " +
                                        std::to_string(row.size()) + ", expected " + std::to_string(r_));
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] >= N) throw std::invalid_argument("left index out of range in right node " + std::to_string(i));
            if (k > 0 && row[k] <= row[k - 1])
                throw std::invalid_argument("right node " + std::to_string(i) + " is not strictly ascending");
        }
        right_.insert(right_.end(), row.begin(), row.end());
    }
    build_left();
}

void BipartiteGraph::build_left() {
    left_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::uint32_t v : right_) ++left_offsets_[v + 1];
    for (std::uint32_t v = 0; v < n_; ++v) left_offsets_[v + 1] += left_offsets_[v];
    left_.resize(right_.size());
    std::vector<std::uint32_t> fill(left_offsets_.begin(), left_offsets_.end() - 1);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t p = 0; p < r_; ++p) {
            const std::uint32_t v = right_[static_cast<std::size_t>(i) * r_ + p];
            left_[fill[v]++] = Incidence{i, p};
        }
}

std::vector<std::vector<std::uint32_t>> BipartiteGraph::right_adjacency() const {
    std::vector<std::vector<std::uint32_t>> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        auto nb = right_neighbors(i);
        out[i].assign(nb.begin(), nb.end());
    }
    return out;
}

void BipartiteGraph::validate() const {
    if (right_.size() != static_cast<std::size_t>(m_) * r_) throw std::logic_error("right adjacency size mismatch");
    for (std::uint32_t i = 0; i < m_; ++i) {
        auto nb = right_neighbors(i);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (nb[k] >= n_) throw std::logic_error("left index out of range");
            if (k > 0 && nb[k] <= nb[k - 1]) throw std::logic_error("right node not strictly ascending");
        }
    }
    if (left_offsets_.size() != static_cast<std::size_t>(n_) + 1 || left_offsets_.back() != right_.size())
        throw std::logic_error("edge balance violated: left degrees do not sum to M * r");
    for (std::uint32_t v = 0; v < n_; ++v)
        for (const auto& inc : left_incidences(v)) {
            if (inc.node >= m_ || inc.position >= r_ || right_neighbors(inc.node)[inc.position] != v)
                throw std::logic_error("left/right adjacency disagree at item " + std::to_string(v));
        }
}

namespace {

struct StubAssignment {
    std::vector<std::uint32_t> stubs;         // slot -> left node; right node = slot / r
    std::vector<std::uint32_t> slot_offsets;  // per left node
    std::vector<std::uint32_t> slots;         // slots owned by each left node
};

std::vector<std::uint32_t> draw_degrees(std::uint32_t N, std::uint64_t edges, std::uint32_t cap,
                                        const DegreeProfile& profile, Rng& rng) {
    const auto L = profile.node_fractions();
    std::discrete_distribution<int> pick(L.begin(), L.end());
    std::vector<std::uint32_t> deg(N);
    std::uint64_t total = 0;
    for (auto& d : deg) {
        d = std::min<std::uint32_t>(static_cast<std::uint32_t>(pick(rng) + 1), cap);
        total += d;
    }

    // Random left nodes absorb the mismatch, staying within [1, cap].
    const bool grow = total < edges;
    std::vector<std::uint32_t> eligible;
    for (std::uint32_t v = 0; v < N; ++v)
        if (grow ? deg[v] < cap : deg[v] > 1) eligible.push_back(v);
    while (total != edges) {
        std::uniform_int_distribution<std::size_t> u(0, eligible.size() - 1);
        const std::size_t k = u(rng);
        const std::uint32_t v = eligible[k];
        if (grow) {
            ++deg[v];
            ++total;
        } else {
            --deg[v];
            --total;
        }
        if (grow ? deg[v] == cap : deg[v] == 1) {
            eligible[k] = eligible.back();
            eligible.pop_back();
        }
    }
    return deg;
}

bool adjacent_except(const StubAssignment& a, std::uint32_t v, std::uint32_t node, std::uint32_t skip_slot,
                     std::uint32_t r) {
    for (std::uint32_t k = a.slot_offsets[v]; k < a.slot_offsets[v + 1]; ++k) {
        const std::uint32_t s = a.slots[k];
        if (s != skip_slot && s / r == node) return true;
    }
    return false;
}

void move_slot(StubAssignment& a, std::uint32_t v, std::uint32_t from, std::uint32_t to) {
    for (std::uint32_t k = a.slot_offsets[v]; k < a.slot_offsets[v + 1]; ++k)
        if (a.slots[k] == from) {
            a.slots[k] = to;
            return;
        }
}

std::vector<std::uint32_t> duplicate_slots(const StubAssignment& a, std::uint32_t N, std::uint32_t r) {
    std::vector<std::uint32_t> bad;
    for (std::uint32_t v = 0; v < N; ++v)
        for (std::uint32_t k = a.slot_offsets[v]; k < a.slot_offsets[v + 1]; ++k)
            for (std::uint32_t j = a.slot_offsets[v]; j < k; ++j)
                if (a.slots[j] / r == a.slots[k] / r) {
                    bad.push_back(a.slots[k]);
                    break;
                }
    return bad;
}

bool try_sample(std::uint32_t N, std::uint32_t M, std::uint32_t r, const DegreeProfile& profile, Rng& rng,
                std::vector<std::uint32_t>& out) {
    const std::uint64_t edges = static_cast<std::uint64_t>(M) * r;
    const std::uint32_t cap = std::min<std::uint32_t>(static_cast<std::uint32_t>(profile.max_degree()), M);
    const auto deg = draw_degrees(N, edges, cap, profile, rng);

    StubAssignment a;
    a.stubs.reserve(edges);
    for (std::uint32_t v = 0; v < N; ++v) a.stubs.insert(a.stubs.end(), deg[v], v);
    std::shuffle(a.stubs.begin(), a.stubs.end(), rng);

    a.slot_offsets.assign(static_cast<std::size_t>(N) + 1, 0);
    for (std::uint32_t v = 0; v < N; ++v) a.slot_offsets[v + 1] = a.slot_offsets[v] + deg[v];
    a.slots.resize(edges);
    {
        std::vector<std::uint32_t> fill(a.slot_offsets.begin(), a.slot_offsets.end() - 1);
        for (std::uint32_t s = 0; s < edges; ++s) a.slots[fill[a.stubs[s]]++] = s;
    }

    constexpr int kPasses = 16;
    constexpr int kSwapTries = 256;
    std::uniform_int_distribution<std::uint32_t> any_slot(0, static_cast<std::uint32_t>(edges - 1));
    for (int pass = 0; pass < kPasses; ++pass) {
        const auto bad = duplicate_slots(a, N, r);
        if (bad.empty()) {
            out = std::move(a.stubs);
            return true;
        }
        for (std::uint32_t sa : bad) {
            const std::uint32_t u = a.stubs[sa];
            const std::uint32_t node_a = sa / r;
            if (!adjacent_except(a, u, node_a, sa, r)) continue;  // fixed by an earlier swap
            for (int attempt = 0; attempt < kSwapTries; ++attempt) {
                const std::uint32_t sb = any_slot(rng);
                const std::uint32_t w = a.stubs[sb];
                const std::uint32_t node_b = sb / r;
                if (node_b == node_a || w == u) continue;
                if (adjacent_except(a, u, node_b, sa, r) || adjacent_except(a, w, node_a, sb, r)) continue;
                std::swap(a.stubs[sa], a.stubs[sb]);
                move_slot(a, u, sa, sb);
                move_slot(a, w, sb, sa);
                break;
            }
        }
    }
    return false;
}

}  // namespace

BipartiteGraph sample_graph(std::uint32_t N, std::uint32_t M, std::uint32_t r, const DegreeProfile& profile,
                            std::uint64_t seed) {
    if (N == 0 || M == 0 || r == 0) throw std::invalid_argument("graph dimensions must be positive");
    if (profile.max_degree() == 0) throw std::invalid_argument("empty degree profile");
    if (r > N) throw std::domain_error("right degree r exceeds the number of items");
    const std::uint64_t edges = static_cast<std::uint64_t>(M) * r;
    const std::uint64_t cap = std::min<std::uint64_t>(static_cast<std::uint64_t>(profile.max_degree()), M);
    if (edges < N || edges > static_cast<std::uint64_t>(N) * cap)
        throw std::domain_error("degree repair infeasible: M*r=" + std::to_string(edges) + " outside [" +
                                std::to_string(N) + ", " + std::to_string(static_cast<std::uint64_t>(N) * cap) + "]");
    if (edges > 0xFFFFFFFFull) throw std::domain_error("graph has too many edges");

    constexpr int kRetries = 8;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<std::uint32_t> flat;
        if (!try_sample(N, M, r, profile, rng, flat)) continue;
        for (std::uint32_t i = 0; i < M; ++i) {
            auto first = flat.begin() + static_cast<std::ptrdiff_t>(i) * r;
            std::sort(first, first + r);
        }
        return BipartiteGraph(N, M, r, std::move(flat));
    }
    throw std::domain_error("multi-edge removal did not converge; graph too dense for the degree profile");
}

}  // namespace qgt
