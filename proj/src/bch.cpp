#include "qgt/bch.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace qgt {

namespace {

int degree_for_length(std::uint32_t r) {
    // Smallest q with 2^q - 1 >= r, never below the smallest supported field.
    const int q = std::bit_width(r);
    return std::max(q, Field::kMinDegree);
}

std::uint32_t evaluate(const Field& f, std::span<const std::uint32_t> coeffs, std::uint32_t x) {
    std::uint32_t acc = 1;
    for (std::uint32_t c : coeffs) acc = f.mul(acc, x) ^ c;
    return acc;
}

/// All x with a*x + b*x^2 + c*x^4 = rhs. The left side is GF(2)-linear in x,
/// so the solution set is an affine subspace found by elimination over bits.
std::vector<std::uint32_t> solve_affine(const Field& f, std::uint32_t a, std::uint32_t b,
                                        std::uint32_t c, std::uint32_t rhs) {
    const int q = f.degree();
    std::array<std::uint32_t, Field::kMaxDegree> pivot_val{};
    std::array<std::uint32_t, Field::kMaxDegree> pivot_combo{};
    std::array<bool, Field::kMaxDegree> has_pivot{};
    std::vector<std::uint32_t> kernel;

    auto reduce = [&](std::uint32_t& val, std::uint32_t& combo) {
        for (int bit = q - 1; bit >= 0; --bit) {
            if (((val >> bit) & 1u) && has_pivot[bit]) {
                val ^= pivot_val[bit];
                combo ^= pivot_combo[bit];
            }
        }
    };

    for (int i = 0; i < q; ++i) {
        const std::uint32_t e = 1u << i;
        const std::uint32_t e2 = f.square(e);
        std::uint32_t val = f.mul(a, e) ^ f.mul(b, e2) ^ f.mul(c, f.square(e2));
        std::uint32_t combo = e;
        reduce(val, combo);
        if (val == 0) {
            kernel.push_back(combo);
        } else {
            const int top = std::bit_width(val) - 1;
            has_pivot[top] = true;
            pivot_val[top] = val;
            pivot_combo[top] = combo;
        }
    }

    std::uint32_t residual = rhs;
    std::uint32_t particular = 0;
    reduce(residual, particular);
    if (residual != 0) return {};

    std::vector<std::uint32_t> out{particular};
    for (std::uint32_t k : kernel) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ k);
    }
    return out;
}

/// Solve the v x v system over GF(2^q) in place; returns false when singular.
bool gauss_solve(const Field& f, std::array<std::array<std::uint32_t, kMaxCorrectable + 1>, kMaxCorrectable>& m,
                 int v) {
    for (int col = 0; col < v; ++col) {
        int piv = col;
        while (piv < v && m[piv][col] == 0) ++piv;
        if (piv == v) return false;
        std::swap(m[piv], m[col]);
        const std::uint32_t inv = f.inv(m[col][col]);
        for (int k = col; k <= v; ++k) m[col][k] = f.mul(m[col][k], inv);
        for (int row = 0; row < v; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const std::uint32_t factor = m[row][col];
            for (int k = col; k <= v; ++k) m[row][k] ^= f.mul(factor, m[col][k]);
        }
    }
    return true;
}

}  // namespace

ParityCheckMatrix::ParityCheckMatrix(int t, std::uint32_t r) : t_(t), r_(r) {
    if (t < 1 || t > kMaxCorrectable)
        throw std::invalid_argument("BCH correction capability t=" + std::to_string(t) + " outside [1, 4]");
    if (r < 3) throw std::invalid_argument("BCH length r must be at least 3");
    if (r > (1u << Field::kMaxDegree) - 1)
        throw std::invalid_argument("BCH length r=" + std::to_string(r) + " exceeds 2^20 - 1");
    field_ = make_field(degree_for_length(r));
    elements_.resize(static_cast<std::size_t>(r) * t);
    for (std::uint32_t col = 0; col < r; ++col)
        for (int k = 0; k < t; ++k)
            elements_[static_cast<std::size_t>(col) * t + k] =
                field_->exp(static_cast<std::uint64_t>(2 * k + 1) * col);
}

std::vector<std::uint8_t> ParityCheckMatrix::column(std::uint32_t col) const {
    if (col >= r_) throw std::out_of_range("column index out of range");
    std::vector<std::uint8_t> out(rows());
    for (int row = 0; row < rows(); ++row) out[row] = static_cast<std::uint8_t>(bit(row, col));
    return out;
}

std::vector<std::uint32_t> ParityCheckMatrix::pack(std::span<const std::uint8_t> bits) const {
    if (static_cast<int>(bits.size()) != rows())
        throw std::invalid_argument("syndrome length " + std::to_string(bits.size()) + " != " +
                                    std::to_string(rows()));
    const int qq = q();
    std::vector<std::uint32_t> out(t_, 0);
    for (int k = 0; k < t_; ++k)
        for (int j = 0; j < qq; ++j)
            out[k] |= static_cast<std::uint32_t>(bits[k * qq + j] & 1u) << (qq - 1 - j);
    return out;
}

std::vector<std::uint32_t> ParityCheckMatrix::syndrome_of(std::span<const std::uint32_t> positions) const {
    std::vector<std::uint32_t> out(t_, 0);
    for (std::uint32_t p : positions) {
        if (p >= r_) throw std::out_of_range("column index out of range");
        for (int k = 0; k < t_; ++k) out[k] ^= element(p, k);
    }
    return out;
}

ParityCheckMatrix build_parity_check(int t, std::uint32_t r) { return ParityCheckMatrix(t, r); }

std::vector<std::uint32_t> locator_roots(const Field& f, std::span<const std::uint32_t> coeffs) {
    std::vector<std::uint32_t> cand;
    switch (coeffs.size()) {
        case 0:
            return {};
        case 1:
            return {coeffs[0]};
        case 2:
            cand = solve_affine(f, coeffs[0], 1, 0, coeffs[1]);
            break;
        case 3: {
            // (x + a)(x^3 + a x^2 + b x + c) has no cubic term, hence is affine.
            const std::uint32_t a = coeffs[0], b = coeffs[1], c = coeffs[2];
            cand = solve_affine(f, c ^ f.mul(a, b), b ^ f.square(a), 1, f.mul(a, c));
            break;
        }
        case 4: {
            const std::uint32_t a = coeffs[0], b = coeffs[1], c = coeffs[2], d = coeffs[3];
            if (a == 0) {
                cand = solve_affine(f, c, b, 1, d);
                break;
            }
            // x = y + e kills the linear term; y = 1/z then kills the cubic one.
            const std::uint32_t e = f.sqrt(f.div(c, a));
            const std::uint32_t b2 = f.mul(a, e) ^ b;
            const std::uint32_t d2 = evaluate(f, coeffs, e);
            if (d2 == 0) {
                // y^2 (y^2 + a y + b2): e is a repeated root.
                cand = solve_affine(f, a, 1, 0, b2);
                for (auto& y : cand) y ^= e;
                cand.push_back(e);
                break;
            }
            const std::uint32_t inv_d2 = f.inv(d2);
            auto zs = solve_affine(f, f.mul(a, inv_d2), f.mul(b2, inv_d2), 1, inv_d2);
            for (std::uint32_t z : zs)
                if (z != 0) cand.push_back(f.inv(z) ^ e);
            break;
        }
        default:
            throw std::invalid_argument("locator degree above 4 is not supported");
    }
    std::vector<std::uint32_t> roots;
    for (std::uint32_t x : cand)
        if (evaluate(f, coeffs, x) == 0) roots.push_back(x);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<std::uint32_t> chien_search(const Field& f, std::span<const std::uint32_t> coeffs,
                                        std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    limit = std::min(limit, f.order());
    for (std::uint32_t i = 0; i < limit; ++i)
        if (evaluate(f, coeffs, f.exp(i)) == 0) out.push_back(i);
    return out;
}

std::optional<std::vector<std::uint32_t>> syndrome_decode_packed(const ParityCheckMatrix& h,
                                                                 std::span<const std::uint32_t> odd,
                                                                 int weight) {
    const int t = h.t();
    if (weight < 0 || weight > t)
        throw std::invalid_argument("expected weight " + std::to_string(weight) + " outside [0, t]");
    if (static_cast<int>(odd.size()) != t) throw std::invalid_argument("expected t packed syndromes");
    const bool zero = std::all_of(odd.begin(), odd.end(), [](std::uint32_t s) { return s == 0; });
    if (weight == 0) {
        if (zero) return std::vector<std::uint32_t>{};
        return std::nullopt;
    }
    if (zero) return std::nullopt;

    const Field& f = h.field();
    const int v = weight;
    // S_1 .. S_{2v}; even syndromes are squares in characteristic 2.
    std::array<std::uint32_t, 2 * kMaxCorrectable + 1> S{};
    for (int j = 1; j <= 2 * v; ++j) S[j] = (j & 1) ? odd[(j - 1) / 2] : f.square(S[j / 2]);

    // Newton identities at odd j: S_j + sum_{k<j} sigma_k S_{j-k} + sigma_j = 0.
    std::array<std::array<std::uint32_t, kMaxCorrectable + 1>, kMaxCorrectable> m{};
    for (int e = 0; e < v; ++e) {
        const int j = 2 * e + 1;
        for (int k = 1; k <= v; ++k) {
            if (k < j) m[e][k - 1] = S[j - k];
            else if (k == j) m[e][k - 1] = 1;
        }
        m[e][v] = S[j];
    }
    if (!gauss_solve(f, m, v)) return std::nullopt;

    std::array<std::uint32_t, kMaxCorrectable> sigma{};
    for (int k = 0; k < v; ++k) sigma[k] = m[k][v];
    const auto roots = locator_roots(f, std::span<const std::uint32_t>(sigma.data(), v));
    if (static_cast<int>(roots.size()) != v) return std::nullopt;

    std::vector<std::uint32_t> positions;
    positions.reserve(v);
    for (std::uint32_t x : roots) {
        if (x == 0) return std::nullopt;
        const std::uint32_t p = f.log(x);
        if (p >= h.cols()) return std::nullopt;
        positions.push_back(p);
    }
    std::sort(positions.begin(), positions.end());
    const auto check = h.syndrome_of(positions);
    if (!std::equal(check.begin(), check.end(), odd.begin())) return std::nullopt;
    return positions;
}

std::optional<std::vector<std::uint32_t>> syndrome_decode(const ParityCheckMatrix& h,
                                                          std::span<const std::uint8_t> syndrome,
                                                          int weight) {
    const auto odd = h.pack(syndrome);
    return syndrome_decode_packed(h, odd, weight);
}

}  // namespace qgt
