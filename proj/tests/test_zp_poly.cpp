#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ruv/zp_poly.hpp"

using namespace ruv;

namespace {
PolyZp P(int p, std::vector<int> c) { return PolyZp(p, std::move(c)); }

PolyZp random_poly(std::mt19937& rng, int p, int maxdeg) {
    std::uniform_int_distribution<int> coeff(0, p - 1);
    std::uniform_int_distribution<int> deg(-1, maxdeg);
    int d = deg(rng);
    std::vector<int> c;
    for (int i = 0; i <= d; ++i) c.push_back(coeff(rng));
    return PolyZp(p, std::move(c));
}
}  // namespace

TEST_CASE("primality checks") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(PolyZp(6), std::invalid_argument);
}

TEST_CASE("addition") {
    // (x+1) + (2x+2) = 0 mod 3
    CHECK(poly_add(P(3, {1, 1}), P(3, {2, 2})).is_zero());
    // x^2 + 0 = x^2
    CHECK(poly_add(P(3, {0, 0, 1}), PolyZp::zero(3)) == P(3, {0, 0, 1}));
    // (x+1) + (x^2+1) = x^2+x mod 2
    CHECK(poly_add(P(2, {1, 1}), P(2, {1, 0, 1})) == P(2, {0, 1, 1}));
    CHECK_THROWS_AS(poly_add(P(2, {1}), P(3, {1})), std::invalid_argument);
}

TEST_CASE("multiplication") {
    // (x-1)^3 = x^3 - 1 = x^3 + 2 mod 3
    PolyZp xm1 = P(3, {2, 1});
    CHECK(poly_mul(poly_mul(xm1, xm1), xm1) == P(3, {2, 0, 0, 1}));
    // (x+1)(x^2+x+1) = x^3+1 mod 2
    CHECK(poly_mul(P(2, {1, 1}), P(2, {1, 1, 1})) == P(2, {1, 0, 0, 1}));
    // f * 1 = f
    PolyZp f = P(5, {4, 0, 3});
    CHECK(poly_mul(f, PolyZp::one(5)) == f);
}

TEST_CASE("division algorithm") {
    // x^2 / (x+2) over Z_3: q = x+1, r = 1
    auto [q, r] = poly_divmod(P(3, {0, 0, 1}), P(3, {2, 1}));
    CHECK(q == P(3, {1, 1}));
    CHECK(r == P(3, {1}));
    // (x^3-1) / (x-1) = (x-1)^2 exactly
    auto [q2, r2] = poly_divmod(PolyZp::x_pow_minus_one(3, 3), P(3, {2, 1}));
    CHECK(q2 == poly_mul(P(3, {2, 1}), P(3, {2, 1})));
    CHECK(r2.is_zero());
    // (x^2+x) / x = x+1 exactly, mod 2
    auto [q3, r3] = poly_divmod(P(2, {0, 1, 1}), P(2, {0, 1}));
    CHECK(q3 == P(2, {1, 1}));
    CHECK(r3.is_zero());
    CHECK_THROWS_AS(poly_divmod(P(2, {1}), PolyZp::zero(2)), std::domain_error);
}

TEST_CASE("division identity on random pairs") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 2000; ++iter) {
        int p = (iter % 2) ? 3 : 5;
        PolyZp f = random_poly(rng, p, 8);
        PolyZp g = random_poly(rng, p, 5);
        if (g.is_zero()) continue;
        auto [q, r] = poly_divmod(f, g);
        CHECK(poly_add(poly_mul(g, q), r) == f);
        CHECK(r.deg() < g.deg());
    }
}

TEST_CASE("gcd") {
    PolyZp xm1 = P(3, {2, 1});
    CHECK(poly_gcd(poly_pow(xm1, 3), poly_pow(xm1, 2)) == poly_pow(xm1, 2));
    CHECK(poly_gcd(P(2, {1, 0, 0, 1}), P(2, {1, 1})) == P(2, {1, 1}));
    // gcd(f, 0) = monic(f)
    CHECK(poly_gcd(P(3, {0, 2}), PolyZp::zero(3)) == P(3, {0, 1}));
    CHECK_THROWS_AS(poly_gcd(PolyZp::zero(3), PolyZp::zero(3)), std::domain_error);
}

TEST_CASE("gcd divides both and is monic") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        PolyZp f = random_poly(rng, 3, 6), g = random_poly(rng, 3, 6);
        if (f.is_zero() && g.is_zero()) continue;
        PolyZp d = poly_gcd(f, g);
        CHECK(d.is_monic());
        CHECK(divides(d, f));
        CHECK(divides(d, g));
    }
}

TEST_CASE("divisibility") {
    PolyZp xm1 = P(3, {2, 1});
    CHECK(divides(poly_pow(xm1, 2), PolyZp::x_pow_minus_one(3, 3)));
    CHECK_FALSE(divides(poly_pow(xm1, 3), poly_pow(xm1, 2)));
    CHECK(divides(P(3, {1, 1}), PolyZp::zero(3)));
    CHECK_THROWS_AS(divides(PolyZp::zero(3), P(3, {1})), std::domain_error);
}

TEST_CASE("degree sentinel") {
    CHECK(PolyZp::zero(3).deg() == kNegInfDeg);
    CHECK(kNegInfDeg < -1000000);
    CHECK(P(3, {0, 0, 5}).deg() == 2);
}

TEST_CASE("factorization of x^n - 1") {
    // (x-1)^3 over Z_3
    auto f33 = factor_xn_minus_1(3, 3);
    REQUIRE(f33.size() == 1);
    CHECK(f33[0].first == P(3, {2, 1}));
    CHECK(f33[0].second == 3);
    // (x+1)(x^2+x+1) over Z_2
    auto f23 = factor_xn_minus_1(2, 3);
    REQUIRE(f23.size() == 2);
    CHECK(f23[0].first == P(2, {1, 1}));
    CHECK(f23[0].second == 1);
    CHECK(f23[1].first == P(2, {1, 1, 1}));
    CHECK(f23[1].second == 1);
    // (x-1)(x+1) over Z_3
    auto f32 = factor_xn_minus_1(3, 2);
    REQUIRE(f32.size() == 2);
    CHECK(f32[0].first == P(3, {1, 1}));
    CHECK(f32[1].first == P(3, {2, 1}));
}

TEST_CASE("factor product reconstructs x^n - 1 and factors are irreducible") {
    for (auto [p, n] : {std::pair{2, 6}, {3, 4}, {5, 4}, {2, 8}, {3, 9}}) {
        auto factors = factor_xn_minus_1(p, n);
        PolyZp prod = PolyZp::one(p);
        for (const auto& [f, mult] : factors) {
            CHECK(f.is_monic());
            CHECK(poly_is_irreducible(f));
            prod = poly_mul(prod, poly_pow(f, mult));
        }
        CHECK(prod == PolyZp::x_pow_minus_one(p, n));
    }
}

TEST_CASE("divisor lattice of x^n - 1") {
    auto divs = divisors_of_xn_minus_1(3, 3);
    REQUIRE(divs.size() == 4);  // (x-1)^0 .. (x-1)^3
    CHECK(divs[0].is_one());
    CHECK(divs[3] == PolyZp::x_pow_minus_one(3, 3));
    auto divs26 = divisors_of_xn_minus_1(2, 6);  // (x+1)^2 (x^2+x+1)^2
    CHECK(divs26.size() == 9);
    for (const auto& d : divs26) CHECK(divides(d, PolyZp::x_pow_minus_one(2, 6)));
}

TEST_CASE("rendering") {
    CHECK(poly_to_string(P(3, {1, 1, 1})) == "x^2 + x + 1");
    CHECK(poly_to_string(P(3, {2})) == "2");
    CHECK(poly_to_string(PolyZp::zero(3)) == "0");
    CHECK(poly_to_string(P(3, {0, 2})) == "2*x");
}
