#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qgt/gf2m.hpp"

TEST_SUITE("gf2m") {

TEST_CASE("every tabulated polynomial is primitive") {
    for (int q = qgt::Field::kMinDegree; q <= qgt::Field::kMaxDegree; ++q) {
        CAPTURE(q);
        const auto poly = qgt::primitive_polynomial(q);
        CHECK((poly >> q) == 1u);
        CHECK(oracle::order_of_x(poly, q) == (1ull << q) - 1);
    }
}

TEST_CASE("degree bounds") {
    CHECK_THROWS_AS(qgt::make_field(2), std::invalid_argument);
    CHECK_THROWS_AS(qgt::make_field(21), std::invalid_argument);
    CHECK(qgt::make_field(8) == qgt::make_field(8));
}

TEST_CASE("table arithmetic agrees with carry-less multiplication") {
    std::mt19937_64 rng(11);
    for (int q = qgt::Field::kMinDegree; q <= qgt::Field::kMaxDegree; ++q) {
        const auto f = qgt::make_field(q);
        std::uniform_int_distribution<std::uint32_t> el(0, f->order());
        for (int i = 0; i < 2000; ++i) {
            const auto a = el(rng), b = el(rng);
            REQUIRE(f->mul(a, b) == oracle::gf_mul(a, b, f->primitive_polynomial(), q));
        }
    }
}

TEST_CASE("division, inverse, square root and powers") {
    std::mt19937_64 rng(5);
    for (int q : {3, 4, 8, 13, 20}) {
        const auto f = qgt::make_field(q);
        std::uniform_int_distribution<std::uint32_t> nz(1, f->order());
        for (int i = 0; i < 500; ++i) {
            const auto a = nz(rng), b = nz(rng);
            CHECK(f->mul(f->div(a, b), b) == a);
            CHECK(f->mul(a, f->inv(a)) == 1u);
            CHECK(f->square(f->sqrt(a)) == a);
            std::uint32_t p = 1;
            for (int k = 0; k < 7; ++k) p = f->mul(p, a);
            CHECK(f->pow(a, 7) == p);
            CHECK(f->exp(f->log(a)) == a);
        }
        CHECK(f->sqrt(0) == 0u);
        CHECK(f->pow(0, 0) == 1u);
        CHECK(f->div(0, 3) == 0u);
        CHECK_THROWS_AS(f->div(1, 0), std::domain_error);
    }
}

TEST_CASE("GF(8) powers of alpha") {
    const auto f = qgt::make_field(3);
    const std::uint32_t expect[] = {1, 2, 4, 3, 6, 7, 5};
    for (int i = 0; i < 7; ++i) CHECK(f->exp(i) == expect[i]);
    CHECK(f->exp(7) == 1u);
}

}
