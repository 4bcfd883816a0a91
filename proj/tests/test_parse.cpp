#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ruv/parse.hpp"

using namespace ruv;

TEST_CASE("basic expressions") {
    // (x-1)^2 + u*(x+2) at p=3: a-layer x^2+x+1, u-layer x+2
    PolyR f = parse_poly("(x-1)^2 + u*(x+2)", 3, 0);
    CHECK(f.layer(0) == PolyZp(3, {1, 1, 1}));
    CHECK(f.layer(1) == PolyZp(3, {2, 1}));
    CHECK(f.layer(2).is_zero());
    CHECK(f.layer(3).is_zero());

    PolyR uv = parse_poly("u*v", 3, 0);
    CHECK(uv.layer(3).is_one());
    CHECK(uv.layer(0).is_zero());

    // numbers reduce mod p, nilpotents square to zero
    CHECK(parse_poly("4", 3, 0).layer(0) == PolyZp::constant(3, 1));
    CHECK(parse_poly("u*u", 3, 0).is_zero());
    CHECK(parse_poly("v^2", 3, 0).is_zero());
}

TEST_CASE("reduction into the quotient") {
    // x^3 = 1 at n = 3
    PolyR f = parse_poly("x^3", 3, 3);
    CHECK(f.n == 3);
    CHECK(f.layer(0).is_one());
    // x^3 - 1 = 0
    CHECK(parse_poly("x^3 - 1", 3, 3).is_zero());
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_poly("x^", 3, 0), ParseError);
    try {
        parse_poly("x^", 3, 0);
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
    CHECK_THROWS_AS(parse_poly("(x+1", 3, 0), ParseError);
    CHECK_THROWS_AS(parse_poly("x+*2", 3, 0), ParseError);
    CHECK_THROWS_AS(parse_poly("y", 3, 0), ParseError);
    CHECK_THROWS_AS(parse_poly("", 3, 0), ParseError);
    CHECK_THROWS_AS(parse_poly("x^999999", 3, 0), ParseError);  // exponent guard
}

TEST_CASE("round trip through rendering") {
    std::mt19937 rng(4321);
    std::uniform_int_distribution<int> coeff(0, 2);
    for (int iter = 0; iter < 300; ++iter) {
        int p = (iter % 2) ? 2 : 3;
        int n = 2 + iter % 3;
        PolyR w(p, n);
        for (auto& e : w.c)
            for (auto& x : e.w) x = coeff(rng) % p;
        PolyR back = parse_poly(polyr_to_string(w), p, n);
        CHECK(back == w);
    }
    // scalar rendering round trip
    for (int p : {2, 3}) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d) {
                        RElem e(p, a, b, c, d);
                        PolyR w = PolyR::from_coeffs(p, 1, {e});
                        CHECK(parse_poly(polyr_to_string(w), p, 1) == w);
                    }
    }
}

TEST_CASE("whitespace and nesting") {
    PolyR a = parse_poly("  ( x - 1 ) ^ 2  *  ( x + 2 )  ", 3, 0);
    PolyR b = parse_poly("(x-1)^3", 3, 0);
    CHECK(a == b);  // x + 2 = x - 1 mod 3
}
