#ifndef RUV_ZP_POLY_HPP
#define RUV_ZP_POLY_HPP

#include <algorithm>
#include <climits>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "ruv/zp.hpp"

namespace ruv {

/// Degree of the zero polynomial. Compares below every genuine degree; never
/// do arithmetic on it.
inline constexpr int kNegInfDeg = INT_MIN;

/// Dense polynomial over Z_p. Coefficient of x^i sits at index i; trailing
/// zeros are trimmed, so the zero polynomial has an empty coefficient vector.
struct PolyZp {
    int p = 0;
    std::vector<int> c;

    PolyZp() = default;
    explicit PolyZp(int prime) : p(prime) { require_prime(prime); }
    PolyZp(int prime, std::vector<int> coeffs) : p(prime), c(std::move(coeffs)) {
        require_prime(prime);
        for (auto& v : c) v = zp_norm(v, p);
        trim();
    }

    static PolyZp zero(int p) { return PolyZp(p); }
    static PolyZp constant(int p, int v) { return PolyZp(p, {v}); }
    static PolyZp one(int p) { return constant(p, 1); }
    static PolyZp x_pow(int p, int e, int coeff = 1) {
        std::vector<int> v(static_cast<size_t>(e) + 1, 0);
        v.back() = coeff;
        return PolyZp(p, std::move(v));
    }
    /// x^n - 1; doubles as the stored form of a trivial (zero) sub-ideal.
    static PolyZp x_pow_minus_one(int p, int n) {
        std::vector<int> v(static_cast<size_t>(n) + 1, 0);
        v[0] = zp_norm(-1, p);
        v.back() = 1;
        return PolyZp(p, std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    int deg() const { return c.empty() ? kNegInfDeg : static_cast<int>(c.size()) - 1; }
    int coeff(int i) const { return (i < 0 || i >= static_cast<int>(c.size())) ? 0 : c[i]; }
    int lead() const { return c.empty() ? 0 : c.back(); }
    bool is_monic() const { return lead() == 1; }

    bool operator==(const PolyZp& o) const { return p == o.p && c == o.c; }
    bool operator!=(const PolyZp& o) const { return !(*this == o); }
};

inline void require_same_p(const PolyZp& f, const PolyZp& g) {
    if (f.p != g.p) throw std::invalid_argument("polynomial modulus mismatch");
}

inline PolyZp poly_add(const PolyZp& f, const PolyZp& g) {
    require_same_p(f, g);
    PolyZp r(f.p);
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = zp_add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)), f.p);
    r.trim();
    return r;
}

inline PolyZp poly_neg(const PolyZp& f) {
    PolyZp r = f;
    for (auto& v : r.c) v = zp_neg(v, f.p);
    return r;
}

inline PolyZp poly_sub(const PolyZp& f, const PolyZp& g) { return poly_add(f, poly_neg(g)); }

inline PolyZp poly_mul(const PolyZp& f, const PolyZp& g) {
    require_same_p(f, g);
    if (f.is_zero() || g.is_zero()) return PolyZp::zero(f.p);
    PolyZp r(f.p);
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = zp_norm(r.c[i + j] + static_cast<long long>(f.c[i]) * g.c[j], f.p);
    }
    r.trim();
    return r;
}

inline PolyZp poly_scale(const PolyZp& f, int s) {
    PolyZp r = f;
    for (auto& v : r.c) v = zp_mul(v, zp_norm(s, f.p), f.p);
    r.trim();
    return r;
}

/// Euclidean division: f = g*q + r with deg r < deg g.
inline std::pair<PolyZp, PolyZp> poly_divmod(const PolyZp& f, const PolyZp& g) {
    require_same_p(f, g);
    if (g.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    PolyZp q(f.p), r = f;
    if (r.deg() < g.deg()) return {q, r};
    q.c.assign(static_cast<size_t>(r.deg() - g.deg()) + 1, 0);
    const int inv_lead = zp_inv(g.lead(), f.p);
    for (int i = r.deg(); i >= g.deg(); --i) {
        int cf = r.coeff(i);
        if (cf == 0) continue;
        int k = i - g.deg();
        int factor = zp_mul(cf, inv_lead, f.p);
        q.c[k] = factor;
        for (int j = 0; j <= g.deg(); ++j)
            r.c[k + j] = zp_sub(r.c[k + j], zp_mul(factor, g.coeff(j), f.p), f.p);
    }
    q.trim();
    r.trim();
    return {q, r};
}

inline PolyZp poly_mod(const PolyZp& f, const PolyZp& g) { return poly_divmod(f, g).second; }

inline PolyZp poly_make_monic(const PolyZp& f) {
    if (f.is_zero()) return f;
    return poly_scale(f, zp_inv(f.lead(), f.p));
}

/// true iff f | g (f nonzero; everything divides 0).
inline bool divides(const PolyZp& f, const PolyZp& g) {
    require_same_p(f, g);
    if (f.is_zero()) throw std::domain_error("divides: zero divisor polynomial");
    if (g.is_zero()) return true;
    return poly_divmod(g, f).second.is_zero();
}

/// g / f when the division is exact.
inline std::optional<PolyZp> poly_try_div_exact(const PolyZp& g, const PolyZp& f) {
    if (f.is_zero()) return std::nullopt;
    auto [q, r] = poly_divmod(g, f);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

inline PolyZp poly_gcd(PolyZp f, PolyZp g) {
    require_same_p(f, g);
    if (f.is_zero() && g.is_zero()) throw std::domain_error("poly_gcd: gcd(0,0) undefined");
    while (!g.is_zero()) {
        PolyZp r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_make_monic(f);
}

inline PolyZp poly_pow(const PolyZp& f, int e) {
    PolyZp acc = PolyZp::one(f.p);
    for (int i = 0; i < e; ++i) acc = poly_mul(acc, f);
    return acc;
}

namespace detail {

// Monic polynomials of exact degree d in lexicographic coefficient order.
inline std::vector<PolyZp> monic_of_degree(int p, int d) {
    std::vector<PolyZp> out;
    std::vector<int> coeffs(static_cast<size_t>(d) + 1, 0);
    coeffs[d] = 1;
    long long count = pow_clamped(p, d);
    out.reserve(static_cast<size_t>(count));
    for (long long idx = 0; idx < count; ++idx) {
        long long v = idx;
        for (int i = 0; i < d; ++i) {
            coeffs[i] = static_cast<int>(v % p);
            v /= p;
        }
        out.emplace_back(p, coeffs);
    }
    return out;
}

}  // namespace detail

/// Irreducibility by exhaustive trial over monic divisors of degree <= deg/2.
inline bool poly_is_irreducible(const PolyZp& f) {
    int d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int e = 1; 2 * e <= d; ++e) {
        if (pow_clamped(f.p, e) > (1 << 21)) throw BudgetExceeded(pow_clamped(f.p, e), 1 << 21, "poly_is_irreducible");
        for (const auto& g : detail::monic_of_degree(f.p, e))
            if (divides(g, f)) return false;
    }
    return true;
}

/// Factor x^n - 1 into monic irreducibles with multiplicity, by trial
/// division in increasing degree. Smallest-degree divisors found this way are
/// automatically irreducible.
inline std::vector<std::pair<PolyZp, int>> factor_xn_minus_1(int p, int n) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("factor_xn_minus_1: n must be positive");
    PolyZp rest = PolyZp::x_pow_minus_one(p, n);
    std::vector<std::pair<PolyZp, int>> out;
    for (int d = 1; rest.deg() > 0; ++d) {
        if (d > rest.deg()) throw std::logic_error("factor_xn_minus_1: ran past remaining degree");
        if (pow_clamped(p, d) > (1 << 21)) throw BudgetExceeded(pow_clamped(p, d), 1 << 21, "factor_xn_minus_1");
        for (const auto& g : detail::monic_of_degree(p, d)) {
            if (rest.deg() < d) break;
            int mult = 0;
            while (divides(g, rest)) {
                rest = *poly_try_div_exact(rest, g);
                ++mult;
            }
            if (mult > 0) out.emplace_back(g, mult);
        }
    }
    return out;
}

/// All monic divisors of x^n - 1, sorted by (degree, coefficients).
inline std::vector<PolyZp> divisors_of_xn_minus_1(int p, int n) {
    auto factors = factor_xn_minus_1(p, n);
    std::vector<PolyZp> divs{PolyZp::one(p)};
    for (const auto& [f, mult] : factors) {
        std::vector<PolyZp> next;
        PolyZp power = PolyZp::one(p);
        for (int e = 0; e <= mult; ++e) {
            for (const auto& d : divs) next.push_back(poly_mul(d, power));
            if (e < mult) power = poly_mul(power, f);
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), [](const PolyZp& a, const PolyZp& b) {
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        return a.c < b.c;
    });
    return divs;
}

inline std::string poly_to_string(const PolyZp& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.deg(); i >= 0; --i) {
        int cf = f.coeff(i);
        if (cf == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << cf;
        } else {
            if (cf != 1) os << cf << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace ruv

#endif
