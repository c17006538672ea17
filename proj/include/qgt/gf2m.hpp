#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qgt {

/// Arithmetic in GF(2^q), 3 <= q <= 20, via log/antilog tables.
///
/// Elements are polynomial-basis bitmasks: bit k is the coefficient of
/// alpha^k. Tables are generated from a fixed primitive polynomial per
/// degree, so every instance with the same q is identical.
class Field {
public:
    static constexpr int kMinDegree = 3;
    static constexpr int kMaxDegree = 20;

    explicit Field(int q);

    int degree() const { return q_; }
    /// Multiplicative group order 2^q - 1.
    std::uint32_t order() const { return order_; }
    std::uint32_t primitive_polynomial() const { return poly_; }

    /// alpha^i for any i (reduced mod order).
    std::uint32_t exp(std::uint64_t i) const { return antilog_[i % order_]; }
    /// Discrete log of a nonzero element.
    std::uint32_t log(std::uint32_t x) const { return log_[x]; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= order_) e -= order_;
        return antilog_[e];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const { return div(1, a); }
    std::uint32_t square(std::uint32_t a) const { return mul(a, a); }
    /// Unique square root (squaring is a field automorphism in characteristic 2).
    std::uint32_t sqrt(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

private:
    int q_;
    std::uint32_t order_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;
};

/// Primitive polynomial used for GF(2^q), including the x^q term.
std::uint32_t primitive_polynomial(int q);

/// Shared, immutable field for degree q. Throws std::invalid_argument when q is out of range.
std::shared_ptr<const Field> make_field(int q);

}  // namespace qgt
