#include "qgt/gf2m.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

namespace qgt {

namespace {

// Minimum-weight primitive polynomials (Lin & Costello table), x^q term included.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kPrimitive = {
    0, 0, 0,
    0xB,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x89,      // x^7 + x^3 + 1
    0x11D,     // x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // x^9 + x^4 + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1053,    // x^12 + x^6 + x^4 + x + 1
    0x201B,    // x^13 + x^4 + x^3 + x + 1
    0x4443,    // x^14 + x^10 + x^6 + x + 1
    0x8003,    // x^15 + x + 1
    0x1100B,   // x^16 + x^12 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40081,   // x^18 + x^7 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
};

void check_degree(int q) {
    if (q < Field::kMinDegree || q > Field::kMaxDegree)
        throw std::invalid_argument("field degree q=" + std::to_string(q) + " outside [3, 20]");
}

}  // namespace

std::uint32_t primitive_polynomial(int q) {
    check_degree(q);
    return kPrimitive[q];
}

Field::Field(int q) : q_(q), order_(0), poly_(qgt::primitive_polynomial(q)) {
    order_ = (1u << q) - 1;
    log_.assign(std::size_t{1} << q, 0);
    antilog_.resize(order_);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        antilog_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x & (1u << q)) x ^= poly_;
    }
    if (x != 1) throw std::logic_error("polynomial is not primitive");
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
    if (b == 0) throw std::domain_error("division by zero in GF(2^q)");
    if (a == 0) return 0;
    std::uint32_t e = log_[a] + order_ - log_[b];
    if (e >= order_) e -= order_;
    return antilog_[e];
}

std::uint32_t Field::sqrt(std::uint32_t a) const {
    if (a == 0) return 0;
    // order is odd, so halving the log is well defined modulo order.
    std::uint64_t e = log_[a];
    if (e & 1) e += order_;
    return antilog_[e / 2];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return antilog_[(static_cast<std::uint64_t>(log_[a]) * (k % order_)) % order_];
}

std::shared_ptr<const Field> make_field(int q) {
    check_degree(q);
    static std::array<std::shared_ptr<const Field>, Field::kMaxDegree + 1> cache;
    static std::array<std::once_flag, Field::kMaxDegree + 1> flags;
    std::call_once(flags[q], [q] { cache[q] = std::make_shared<const Field>(q); });
    return cache[q];
}

}  // namespace qgt
