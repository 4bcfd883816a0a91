#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "ruv/ring.hpp"

using namespace ruv;

namespace {
std::vector<RElem> all_elements(int p) {
    std::vector<RElem> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) out.emplace_back(p, a, b, c, d);
    return out;
}
}  // namespace

TEST_CASE("defining relations") {
    for (int p : {2, 3}) {
        RElem u = RElem::u(p), v = RElem::v(p);
        CHECK(relem_mul(u, u).is_zero());
        CHECK(relem_mul(v, v).is_zero());
        CHECK(relem_mul(u, v) == RElem::uv(p));
        CHECK(relem_mul(v, u) == RElem::uv(p));
    }
}

TEST_CASE("spot products") {
    // (1+u)(1-u) = 1
    RElem one_plus_u(3, 1, 1, 0, 0), one_minus_u(3, 1, -1, 0, 0);
    CHECK(relem_mul(one_plus_u, one_minus_u) == RElem::scalar(3, 1));
    // (u+v)^2 = 2uv at p=3
    RElem upv(3, 0, 1, 1, 0);
    CHECK(relem_mul(upv, upv) == RElem(3, 0, 0, 0, 2));
}

TEST_CASE("units are exactly the elements with nonzero residue") {
    CHECK(relem_is_unit(RElem(3, 1, 0, 0, 1)));   // 1 + uv
    CHECK_FALSE(relem_is_unit(RElem(3, 0, 1, 1, 0)));  // u + v
    CHECK_FALSE(relem_is_unit(RElem(3, 0, 0, 0, 0)));
    // exhaustive agreement with invertibility
    for (int p : {2, 3}) {
        auto elems = all_elements(p);
        for (const auto& x : elems) {
            bool invertible = false;
            for (const auto& y : elems)
                if (relem_mul(x, y) == RElem::scalar(p, 1)) invertible = true;
            CHECK(invertible == relem_is_unit(x));
        }
    }
}

TEST_CASE("inverse formula") {
    for (int p : {2, 3, 5}) {
        for (const auto& x : all_elements(p)) {
            if (!relem_is_unit(x)) {
                CHECK_THROWS_AS(relem_inv(x), std::domain_error);
                continue;
            }
            CHECK(relem_mul(x, relem_inv(x)) == RElem::scalar(p, 1));
        }
    }
}

TEST_CASE("commutativity and associativity, exhaustive for p=2 and sampled triples for p=3") {
    for (const auto& x : all_elements(2))
        for (const auto& y : all_elements(2)) CHECK(relem_mul(x, y) == relem_mul(y, x));
    auto e3 = all_elements(3);
    for (size_t i = 0; i < e3.size(); i += 7)
        for (size_t j = 0; j < e3.size(); j += 11)
            for (size_t k = 0; k < e3.size(); k += 13) {
                CHECK(relem_mul(e3[i], e3[j]) == relem_mul(e3[j], e3[i]));
                CHECK(relem_mul(relem_mul(e3[i], e3[j]), e3[k]) == relem_mul(e3[i], relem_mul(e3[j], e3[k])));
            }
}

TEST_CASE("projections") {
    RElem x(3, 1, 2, 1, 2);  // 1 + 2u + v + 2uv
    CHECK(psi(x) == RElem(3, 1, 2, 0, 0));
    CHECK(phi_v(x) == RElem(3, 1, 0, 1, 0));
    CHECK(mu(x) == 1);
    CHECK(psi(RElem::v(3)).is_zero());
    CHECK(phi_v(RElem::u(3)).is_zero());
    CHECK(phi_v(RElem::uv(3)).is_zero());
    CHECK(mu(RElem::uv(3)) == 0);
    CHECK(mu(RElem::scalar(3, 2)) == 2);
}

TEST_CASE("projections are ring homomorphisms (exhaustive p=2,3)") {
    for (int p : {2, 3}) {
        auto elems = all_elements(p);
        for (size_t i = 0; i < elems.size(); i += (p == 2 ? 1 : 5))
            for (size_t j = 0; j < elems.size(); j += (p == 2 ? 1 : 3)) {
                const auto &x = elems[i], &y = elems[j];
                CHECK(psi(relem_add(x, y)) == relem_add(psi(x), psi(y)));
                CHECK(psi(relem_mul(x, y)) == relem_mul(psi(x), psi(y)));
                CHECK(phi_v(relem_add(x, y)) == relem_add(phi_v(x), phi_v(y)));
                CHECK(phi_v(relem_mul(x, y)) == relem_mul(phi_v(x), phi_v(y)));
                CHECK(mu(relem_add(x, y)) == zp_add(mu(x), mu(y), p));
                CHECK(mu(relem_mul(x, y)) == zp_mul(mu(x), mu(y), p));
            }
    }
}

TEST_CASE("ideal lattice of R for p=3") {
    // Principal-ideal closures of single elements, plus the two-generator
    // maximal ideal: {0}, <uv>, <u>, <v>, <u+v>, <u+2v>, <u,v>, <1>.
    // (Eight ideals: the nonzero ones below <u,v> are <uv> and the four
    // lines through it.)
    const int p = 3;
    auto elems = all_elements(p);
    auto closure = [&](const std::vector<RElem>& gens) {
        std::vector<RElem> ideal;
        auto contains = [&](const RElem& e) {
            for (const auto& t : ideal)
                if (t == e) return true;
            return false;
        };
        // additive closure of all multiples
        std::vector<RElem> seeds;
        for (const auto& g : gens)
            for (const auto& r : elems) seeds.push_back(relem_mul(r, g));
        ideal.push_back(RElem(p));
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& s : seeds)
                for (const auto& t : std::vector<RElem>(ideal)) {
                    RElem sum = relem_add(s, t);
                    if (!contains(sum)) {
                        ideal.push_back(sum);
                        grew = true;
                    }
                }
        }
        std::sort(ideal.begin(), ideal.end(), [](const RElem& a, const RElem& b) { return a.w < b.w; });
        return ideal;
    };

    std::vector<std::vector<RElem>> distinct;
    auto add_ideal = [&](const std::vector<RElem>& gens) {
        auto id = closure(gens);
        for (const auto& d : distinct)
            if (d == id) return;
        distinct.push_back(id);
    };
    for (const auto& e : elems) add_ideal({e});
    add_ideal({RElem::u(p), RElem::v(p)});

    // {0}, <uv>, <u>, <v>, <u+v>, <u+2v>, <u,v>, R  -- 8 ideals
    CHECK(distinct.size() == 8);
    std::vector<size_t> sizes;
    for (const auto& d : distinct) sizes.push_back(d.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 3, 9, 9, 9, 9, 27, 81});
}

TEST_CASE("rendering") {
    CHECK(relem_to_string(RElem(3, 1, 0, 0, 2)) == "1 + uv*2");
    CHECK(relem_to_string(RElem::u(3)) == "u");
    CHECK(relem_to_string(RElem(3, 0, 0, 0, 0)) == "0");
}
