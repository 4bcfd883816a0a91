#ifndef RUV_POLY_RING_HPP
#define RUV_POLY_RING_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ruv/ring.hpp"
#include "ruv/zp_poly.hpp"

namespace ruv {

/// Polynomial over R. With n == 0 this is a free element of R[x] (trailing
/// zero coefficients trimmed). With n > 0 it is an element of R[x]/<x^n - 1>
/// stored as exactly n coefficients, never trimmed, so the cyclic shift is a
/// plain index rotation.
///
/// The degree of a polynomial is deg(mu(f)), the degree of its image over the
/// residue field -- NOT the highest index holding a nonzero (possibly
/// nilpotent) coefficient.
struct PolyR {
    int p = 0;
    int n = 0;  // 0 = free polynomial, > 0 = quotient modulus
    std::vector<RElem> c;

    PolyR() = default;
    PolyR(int prime, int modulus) : p(prime), n(modulus) {
        require_prime(prime);
        if (modulus < 0) throw std::invalid_argument("negative modulus");
        if (modulus > 0) c.assign(static_cast<size_t>(modulus), RElem(prime));
    }

    static PolyR zero(int p, int n) { return PolyR(p, n); }

    static PolyR from_coeffs(int p, int n, std::vector<RElem> coeffs) {
        PolyR f(p, n);
        if (n == 0) {
            f.c = std::move(coeffs);
            f.trim();
        } else {
            for (size_t i = 0; i < coeffs.size(); ++i) {
                size_t pos = i % static_cast<size_t>(n);
                f.c[pos] = relem_add(f.c[pos], coeffs[i]);
            }
        }
        return f;
    }

    /// Builds layer*f for layer in {1,u,v,uv} indexed 0..3 from a Z_p poly.
    static PolyR from_zp(const PolyZp& f, int layer, int n) {
        std::vector<RElem> coeffs(f.c.size(), RElem(f.p));
        for (size_t i = 0; i < f.c.size(); ++i) coeffs[i].w[static_cast<size_t>(layer)] = f.c[i];
        return from_coeffs(f.p, n, std::move(coeffs));
    }

    static PolyR from_layers(int n, const PolyZp& a, const PolyZp& b, const PolyZp& c_, const PolyZp& d) {
        PolyR f = from_zp(a, 0, n);
        f = polyr_add_impl(f, from_zp(b, 1, n));
        f = polyr_add_impl(f, from_zp(c_, 2, n));
        f = polyr_add_impl(f, from_zp(d, 3, n));
        return f;
    }

    void trim() {
        if (n != 0) return;
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool is_zero() const {
        for (const auto& e : c)
            if (!e.is_zero()) return false;
        return true;
    }

    RElem coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return RElem(p);
        return c[static_cast<size_t>(i)];
    }

    /// Z_p polynomial formed by one component layer (0=a, 1=b, 2=c, 3=d).
    PolyZp layer(int which) const {
        PolyZp f(p);
        f.c.resize(c.size(), 0);
        for (size_t i = 0; i < c.size(); ++i) f.c[i] = c[i].w[static_cast<size_t>(which)];
        f.trim();
        return f;
    }

    bool operator==(const PolyR& o) const { return p == o.p && n == o.n && c == o.c; }
    bool operator!=(const PolyR& o) const { return !(*this == o); }

  private:
    static PolyR polyr_add_impl(const PolyR& f, const PolyR& g);
    friend PolyR polyr_add(const PolyR&, const PolyR&);
};

inline void require_compatible(const PolyR& f, const PolyR& g) {
    if (f.p != g.p || f.n != g.n) throw std::invalid_argument("polynomial context mismatch");
}

inline PolyR polyr_add(const PolyR& f, const PolyR& g) { return PolyR::polyr_add_impl(f, g); }

inline PolyR PolyR::polyr_add_impl(const PolyR& f, const PolyR& g) {
    require_compatible(f, g);
    PolyR r(f.p, f.n);
    r.c.resize(std::max(f.c.size(), g.c.size()), RElem(f.p));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = relem_add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

inline PolyR polyr_neg(const PolyR& f) {
    PolyR r = f;
    for (auto& e : r.c) e = relem_neg(e);
    return r;
}

inline PolyR polyr_sub(const PolyR& f, const PolyR& g) { return polyr_add(f, polyr_neg(g)); }

/// deg(mu(f)), or kNegInfDeg when the residue image vanishes.
inline int polyr_degree(const PolyR& f) { return f.layer(0).deg(); }

/// Regular (= not a zero divisor) iff mu(f) != 0, iff some coefficient is a unit.
inline bool polyr_is_regular(const PolyR& f) { return !f.layer(0).is_zero(); }

inline PolyR polyr_scale(const PolyR& f, const RElem& s) {
    PolyR r = f;
    for (auto& e : r.c) e = relem_mul(e, s);
    r.trim();
    return r;
}

/// Product in R[x] (free polynomials only).
inline PolyR polyr_mul_free(const PolyR& f, const PolyR& g) {
    require_compatible(f, g);
    if (f.n != 0) throw std::invalid_argument("polyr_mul_free: quotient elements; use polyr_mul_mod");
    PolyR r(f.p, 0);
    if (f.c.empty() || g.c.empty()) return r;
    r.c.assign(f.c.size() + g.c.size() - 1, RElem(f.p));
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = relem_add(r.c[i + j], relem_mul(f.c[i], g.c[j]));
    }
    r.trim();
    return r;
}

/// Cyclic convolution in R[x]/<x^n - 1>.
inline PolyR polyr_mul_mod(const PolyR& f, const PolyR& g) {
    require_compatible(f, g);
    if (f.n == 0) throw std::invalid_argument("polyr_mul_mod: free polynomials; use polyr_mul_free");
    const int n = f.n;
    PolyR r(f.p, n);
    for (int i = 0; i < n; ++i) {
        if (f.c[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            int k = (i + j) % n;
            r.c[static_cast<size_t>(k)] =
                relem_add(r.c[static_cast<size_t>(k)], relem_mul(f.c[static_cast<size_t>(i)], g.c[static_cast<size_t>(j)]));
        }
    }
    return r;
}

inline PolyR polyr_mul_mod(const PolyZp& f, const PolyR& g) {
    return polyr_mul_mod(PolyR::from_zp(f, 0, g.n), g);
}

/// Cyclic shift by k positions (multiplication by x^k in the quotient).
inline PolyR polyr_shift(const PolyR& f, int k) {
    if (f.n == 0) throw std::invalid_argument("polyr_shift: quotient elements only");
    const int n = f.n;
    PolyR r(f.p, n);
    for (int i = 0; i < n; ++i) r.c[static_cast<size_t>((i + k % n + n) % n)] = f.c[static_cast<size_t>(i)];
    return r;
}

inline PolyR polyr_to_quotient(const PolyR& f, int n) {
    if (f.n != 0) throw std::invalid_argument("polyr_to_quotient: already reduced");
    return PolyR::from_coeffs(f.p, n, f.c);
}

inline PolyR polyr_to_free(const PolyR& f) {
    PolyR r(f.p, 0);
    r.c = f.c;
    r.trim();
    return r;
}

/// Division algorithm in R[x] for a regular divisor g: f = g*q + r with
/// deg(r) < deg(g). Solved layer by layer against the residue image of g,
/// whose leading coefficient (at index deg via mu) is a unit; nilpotent
/// coefficients of g above that index feed back through the recurrence.
inline std::pair<PolyR, PolyR> polyr_divmod(const PolyR& f, const PolyR& g) {
    require_compatible(f, g);
    if (f.n != 0) throw std::invalid_argument("polyr_divmod: free polynomials only");
    if (!polyr_is_regular(g)) throw std::domain_error("polyr_divmod: divisor is not regular");

    const PolyZp f0 = f.layer(0), f1 = f.layer(1), f2 = f.layer(2), f3 = f.layer(3);
    const PolyZp g0 = g.layer(0), g1 = g.layer(1), g2 = g.layer(2), g3 = g.layer(3);

    auto [q0, r0] = poly_divmod(f0, g0);
    auto [q1, r1] = poly_divmod(poly_sub(f1, poly_mul(g1, q0)), g0);
    auto [q2, r2] = poly_divmod(poly_sub(f2, poly_mul(g2, q0)), g0);
    auto [q3, r3] = poly_divmod(
        poly_sub(f3, poly_add(poly_mul(g1, q2), poly_add(poly_mul(g2, q1), poly_mul(g3, q0)))), g0);

    return {PolyR::from_layers(0, q0, q1, q2, q3), PolyR::from_layers(0, r0, r1, r2, r3)};
}

inline bool polyr_divides(const PolyR& g, const PolyR& f) { return polyr_divmod(f, g).second.is_zero(); }

inline std::string polyr_to_string(const PolyR& f) {
    static const char* kSym[4] = {"", "u", "v", "u*v"};
    std::ostringstream os;
    bool first = true;
    for (int layer = 0; layer < 4; ++layer) {
        PolyZp part = f.layer(layer);
        if (part.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (layer == 0)
            os << poly_to_string(part);
        else
            os << kSym[layer] << "*(" << poly_to_string(part) << ")";
    }
    if (first) return "0";
    return os.str();
}

}  // namespace ruv

#endif
