#pragma once

// Slow, independent reference implementations used as test oracles.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qgt/qgt.hpp"

namespace oracle {

/// Carry-less multiply then reduce by the modulus polynomial.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int q) {
    std::uint64_t acc = 0;
    for (int i = 0; i < q; ++i)
        if ((b >> i) & 1u) acc ^= static_cast<std::uint64_t>(a) << i;
    for (int i = 2 * q - 2; i >= q; --i)
        if ((acc >> i) & 1u) acc ^= static_cast<std::uint64_t>(poly) << (i - q);
    return static_cast<std::uint32_t>(acc);
}

/// Multiplicative order of x modulo poly, by stepping.
inline std::uint64_t order_of_x(std::uint32_t poly, int q) {
    std::uint32_t x = 2;
    std::uint64_t k = 1;
    while (x != 1) {
        x = gf_mul(x, 2, poly, q);
        ++k;
        if (k > (1ull << q)) return 0;
    }
    return k;
}

/// Binary syndrome of a column set, straight from bit(row, col).
inline std::vector<std::uint8_t> binary_syndrome(const qgt::ParityCheckMatrix& h, const std::vector<std::uint32_t>& cols) {
    std::vector<std::uint8_t> s(h.rows(), 0);
    for (auto c : cols)
        for (int row = 0; row < h.rows(); ++row) s[row] ^= static_cast<std::uint8_t>(h.bit(row, c));
    return s;
}

template <class F>
void for_each_subset(std::uint32_t n, int k, F&& f) {
    std::vector<std::uint32_t> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        f(idx);
        return;
    }
    if (static_cast<std::uint32_t>(k) > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Minimum Hamming weight of a nonzero codeword of the binary code with parity check h.
inline int min_distance(const qgt::ParityCheckMatrix& h) {
    const std::uint32_t r = h.cols();
    std::vector<std::uint64_t> colmask(r, 0);
    for (std::uint32_t c = 0; c < r; ++c)
        for (int row = 0; row < h.rows(); ++row)
            if (h.bit(row, c)) colmask[c] |= 1ull << row;
    int best = static_cast<int>(r) + 1;
    // Gray-code walk over all 2^r words.
    std::uint64_t syn = 0;
    std::uint32_t word = 0;
    for (std::uint64_t i = 1; i < (1ull << r); ++i) {
        const int bit = std::countr_zero(i);
        word ^= 1u << bit;
        syn ^= colmask[bit];
        if (syn == 0) best = std::min(best, std::popcount(word));
    }
    return best;
}

/// Every 0/1 vector x of length N with A x = y, by Gray-code enumeration. Stops after `cap` hits.
inline std::vector<std::vector<std::uint32_t>> consistent_supports(const qgt::TestPlan& plan,
                                                                   const std::vector<std::int32_t>& y,
                                                                   std::size_t cap = 2) {
    const std::uint32_t N = plan.items();
    const std::size_t m = plan.tests();
    const auto a = plan.dense_matrix();
    std::vector<std::int32_t> acc(m, 0);
    std::vector<std::uint8_t> x(N, 0);
    std::vector<std::vector<std::uint32_t>> hits;
    auto record = [&] {
        std::vector<std::uint32_t> s;
        for (std::uint32_t v = 0; v < N; ++v)
            if (x[v]) s.push_back(v);
        hits.push_back(std::move(s));
    };
    if (acc == y) record();
    for (std::uint64_t i = 1; i < (1ull << N) && hits.size() < cap; ++i) {
        const int v = std::countr_zero(i);
        const int sign = x[v] ? -1 : 1;
        x[v] ^= 1;
        for (std::size_t row = 0; row < m; ++row) acc[row] += sign * a[row * N + v];
        if (acc == y) record();
    }
    return hits;
}

inline double binomial_cdf_below(int t, int n, double p) {
    double s = 0.0;
    for (int k = 0; k < t; ++k)
        s += std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) + k * std::log(p) +
                      (n - k) * std::log1p(-p));
    return s;
}

}  // namespace oracle
