#include "qgt/qgt.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qgt {

std::vector<std::uint8_t> SignatureMatrix::column(std::uint32_t col) const {
    auto h = h_.column(col);
    std::vector<std::uint8_t> out;
    out.reserve(h.size() + 1);
    out.push_back(1);
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

void SignatureMatrix::accumulate(std::span<std::int32_t> block, std::uint32_t col, std::int32_t sign) const {
    const int q = h_.q();
    block[0] += sign;
    for (int k = 0; k < h_.t(); ++k) {
        std::uint32_t e = h_.element(col, k);
        std::int32_t* rows = block.data() + 1 + k * q;
        while (e != 0) {
            const int bit = std::countr_zero(e);
            rows[q - 1 - bit] += sign;
            e &= e - 1;
        }
    }
}

SignatureMatrix build_signature(int t, std::uint32_t r) { return SignatureMatrix(t, r); }

TestPlan::TestPlan(BipartiteGraph g, int t, std::uint64_t seed_)
    : graph(std::move(g)), signature(t, graph.right_degree()), seed(seed_) {}

std::vector<std::uint8_t> TestPlan::dense_matrix() const {
    const std::size_t n = items();
    const int s = tests_per_node();
    std::vector<std::uint8_t> a(tests() * n, 0);
    for (std::uint32_t i = 0; i < nodes(); ++i) {
        auto nb = graph.right_neighbors(i);
        for (std::uint32_t p = 0; p < nb.size(); ++p)
            for (int row = 0; row < s; ++row)
                a[(static_cast<std::size_t>(i) * s + row) * n + nb[p]] =
                    static_cast<std::uint8_t>(signature.entry(row, p));
    }
    return a;
}

SupportVector::SupportVector(std::uint32_t n, std::vector<std::uint32_t> items) : N(n), defectives(std::move(items)) {
    std::sort(defectives.begin(), defectives.end());
    if (std::adjacent_find(defectives.begin(), defectives.end()) != defectives.end())
        throw std::invalid_argument("support has duplicate items");
    if (!defectives.empty() && defectives.back() >= N)
        throw std::invalid_argument("support item " + std::to_string(defectives.back()) + " out of range");
}

TestResults encode(const TestPlan& plan, const SupportVector& x) {
    if (x.N != plan.items())
        throw std::invalid_argument("support covers " + std::to_string(x.N) + " items, plan has " +
                                    std::to_string(plan.items()));
    std::vector<std::uint8_t> defective(x.N, 0);
    for (std::uint32_t v : x.defectives) defective[v] = 1;

    TestResults y;
    y.blocks = plan.nodes();
    y.block_size = plan.tests_per_node();
    y.values.assign(plan.tests(), 0);
    for (std::uint32_t i = 0; i < plan.nodes(); ++i) {
        std::span<std::int32_t> block(y.values.data() + static_cast<std::size_t>(i) * y.block_size,
                                      static_cast<std::size_t>(y.block_size));
        auto nb = plan.graph.right_neighbors(i);
        for (std::uint32_t p = 0; p < nb.size(); ++p)
            if (defective[nb[p]]) plan.signature.accumulate(block, p, 1);
    }
    return y;
}

namespace {

void check_conservation(const TestPlan& plan, const SupportVector& truth, const std::vector<std::uint32_t>& identified,
                        const std::vector<std::int32_t>& residual) {
    std::vector<std::uint32_t> sorted_ids(identified);
    std::sort(sorted_ids.begin(), sorted_ids.end());
    std::vector<std::uint32_t> remaining;
    std::set_difference(truth.defectives.begin(), truth.defectives.end(), sorted_ids.begin(), sorted_ids.end(),
                        std::back_inserter(remaining));
    const auto expect = encode(plan, SupportVector(truth.N, std::move(remaining)));
    if (expect.values != residual) throw std::logic_error("peeling residual differs from re-encoded remaining support");
}

}  // namespace

DecodeOutcome peel_decode(const TestPlan& plan, const TestResults& y, const DecodeOptions& options) {
    const std::uint32_t M = plan.nodes();
    const int s = plan.tests_per_node();
    const int t = plan.t();
    if (y.blocks != M || y.block_size != s || y.values.size() != plan.tests())
        throw std::invalid_argument("test results do not match plan dimensions");
    const int max_iterations = options.max_iterations > 0 ? options.max_iterations : static_cast<int>(M) + 1;

    const auto& h = plan.signature.parity_check();
    const int q = h.q();
    std::vector<std::int32_t> residual(y.values);
    std::vector<std::uint8_t> resolved(M, 0), failed(M, 0), queued(M, 1);

    DecodeOutcome out;
    out.resolved_in.assign(M, 0);
    std::vector<std::uint32_t> work(M);
    for (std::uint32_t i = 0; i < M; ++i) work[i] = i;
    std::vector<std::uint32_t> next_work, fresh;
    std::unordered_set<std::uint32_t> fresh_set;
    std::vector<std::uint32_t> syndromes(t);

    for (int iter = 1; iter <= max_iterations && !work.empty(); ++iter) {
        std::sort(work.begin(), work.end());
        std::uint32_t newly_resolved = 0;
        fresh.clear();
        fresh_set.clear();
        for (std::uint32_t i : work) {
            queued[i] = 0;
            if (resolved[i]) continue;
            const std::int32_t* block = residual.data() + static_cast<std::size_t>(i) * s;
            const std::int32_t count = block[0];
            if (count > t) continue;
            std::optional<std::vector<std::uint32_t>> positions;
            if (count >= 0) {
                for (int k = 0; k < t; ++k) {
                    std::uint32_t e = 0;
                    for (int j = 0; j < q; ++j)
                        e = (e << 1) | static_cast<std::uint32_t>(block[1 + k * q + j] & 1);
                    syndromes[k] = e;
                }
                positions = syndrome_decode_packed(h, syndromes, count);
            }
            if (!positions) {
                failed[i] = 1;
                ++out.decode_failures;
                continue;
            }
            failed[i] = 0;
            resolved[i] = 1;
            out.resolved_in[i] = static_cast<std::uint32_t>(iter);
            ++newly_resolved;
            auto nb = plan.graph.right_neighbors(i);
            for (std::uint32_t p : *positions)
                if (fresh_set.insert(nb[p]).second) fresh.push_back(nb[p]);
        }
        work.clear();
        if (newly_resolved == 0) break;
        out.iterations = iter;
        out.resolved_nodes += newly_resolved;

        next_work.clear();
        for (std::uint32_t v : fresh) {
            out.identified.push_back(v);
            for (const auto& inc : plan.graph.left_incidences(v)) {
                std::span<std::int32_t> block(residual.data() + static_cast<std::size_t>(inc.node) * s,
                                              static_cast<std::size_t>(s));
                plan.signature.accumulate(block, inc.position, -1);
                if (!resolved[inc.node]) {
                    failed[inc.node] = 0;
                    if (!queued[inc.node]) {
                        queued[inc.node] = 1;
                        next_work.push_back(inc.node);
                    }
                }
            }
        }
        out.identified_after.push_back(static_cast<std::uint32_t>(out.identified.size()));
        if (options.conservation_check) check_conservation(plan, *options.conservation_check, out.identified, residual);
        std::swap(work, next_work);
    }

    for (std::uint32_t i = 0; i < M; ++i) {
        if (resolved[i]) continue;
        if (residual[static_cast<std::size_t>(i) * s] > t) out.stalled = true;
        else if (failed[i]) ++out.failed_nodes;
    }
    std::sort(out.identified.begin(), out.identified.end());
    return out;
}

}  // namespace qgt
