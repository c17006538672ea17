#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qgt/gf2m.hpp"

namespace qgt {

inline constexpr int kMaxCorrectable = 4;

/// Parity-check matrix of a binary t-error-correcting BCH code, shortened to r columns.
///
/// Block k (k < t) holds the q bits of alpha^{(2k+1) i} for column i, most
/// significant bit in the first row of the block. With t = 1, r = 7 this is
/// exactly the H_1 of the classic (7,4) Hamming example.
class ParityCheckMatrix {
public:
    ParityCheckMatrix(int t, std::uint32_t r);

    int t() const { return t_; }
    int q() const { return field_->degree(); }
    /// Unshortened length 2^q - 1.
    std::uint32_t full_length() const { return field_->order(); }
    std::uint32_t cols() const { return r_; }
    int rows() const { return t_ * q(); }
    const Field& field() const { return *field_; }

    /// alpha^{(2k+1) col}: the field element stored in block k of a column.
    std::uint32_t element(std::uint32_t col, int k) const {
        return elements_[static_cast<std::size_t>(col) * t_ + k];
    }
    int bit(int row, std::uint32_t col) const {
        const int k = row / q();
        const int j = row % q();
        return static_cast<int>((element(col, k) >> (q() - 1 - j)) & 1u);
    }
    std::vector<std::uint8_t> column(std::uint32_t col) const;

    /// Pack a binary syndrome (length rows()) into its t odd-power field syndromes.
    std::vector<std::uint32_t> pack(std::span<const std::uint8_t> bits) const;
    /// Field syndromes S_1, S_3, ..., S_{2t-1} of a set of column positions.
    std::vector<std::uint32_t> syndrome_of(std::span<const std::uint32_t> positions) const;

private:
    int t_;
    std::uint32_t r_;
    std::shared_ptr<const Field> field_;
    std::vector<std::uint32_t> elements_;
};

ParityCheckMatrix build_parity_check(int t, std::uint32_t r);

/// Decode a binary syndrome known to stem from exactly `weight` columns.
///
/// Returns the ascending column positions, or nullopt (decode failure) when no
/// consistent in-range set of that weight exists.
std::optional<std::vector<std::uint32_t>> syndrome_decode(const ParityCheckMatrix& h,
                                                          std::span<const std::uint8_t> syndrome,
                                                          int weight);

/// Same as syndrome_decode, on already packed odd syndromes S_1, S_3, ..., S_{2t-1}.
std::optional<std::vector<std::uint32_t>> syndrome_decode_packed(const ParityCheckMatrix& h,
                                                                 std::span<const std::uint32_t> odd,
                                                                 int weight);

/// Distinct roots of x^v + c[0] x^{v-1} + ... + c[v-1], v = c.size() <= 4.
/// Uses affine-polynomial reduction and GF(2) linear algebra, O(q^2) per call.
std::vector<std::uint32_t> locator_roots(const Field& f, std::span<const std::uint32_t> coeffs);

/// Reference root search: exponents i < limit with alpha^i a root of the same monic polynomial.
std::vector<std::uint32_t> chien_search(const Field& f, std::span<const std::uint32_t> coeffs,
                                        std::uint32_t limit);

}  // namespace qgt
