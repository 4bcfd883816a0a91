#ifndef RUV_RING_HPP
#define RUV_RING_HPP

#include <array>
#include <sstream>
#include <string>

#include "ruv/zp.hpp"

namespace ruv {

/// Element a + u*b + v*c + uv*d of R = Z_p + uZ_p + vZ_p + uvZ_p with
/// u^2 = v^2 = 0 and uv = vu. A value is a unit iff a != 0; every non-unit is
/// nilpotent (the ring is local with maximal ideal <u,v>).
struct RElem {
    int p = 0;
    std::array<int, 4> w{0, 0, 0, 0};  // (a, b, c, d)

    RElem() = default;
    explicit RElem(int prime) : p(prime) { require_prime(prime); }
    RElem(int prime, int a, int b, int c, int d) : p(prime) {
        require_prime(prime);
        w = {zp_norm(a, p), zp_norm(b, p), zp_norm(c, p), zp_norm(d, p)};
    }

    static RElem scalar(int p, int a) { return RElem(p, a, 0, 0, 0); }
    static RElem u(int p) { return RElem(p, 0, 1, 0, 0); }
    static RElem v(int p) { return RElem(p, 0, 0, 1, 0); }
    static RElem uv(int p) { return RElem(p, 0, 0, 0, 1); }

    int a() const { return w[0]; }
    int b() const { return w[1]; }
    int c() const { return w[2]; }
    int d() const { return w[3]; }

    bool is_zero() const { return w == std::array<int, 4>{0, 0, 0, 0}; }
    bool operator==(const RElem& o) const { return p == o.p && w == o.w; }
    bool operator!=(const RElem& o) const { return !(*this == o); }
};

inline void require_same_p(const RElem& x, const RElem& y) {
    if (x.p != y.p) throw std::invalid_argument("ring element modulus mismatch");
}

inline RElem relem_add(const RElem& x, const RElem& y) {
    require_same_p(x, y);
    RElem r(x.p);
    for (int i = 0; i < 4; ++i) r.w[i] = zp_add(x.w[i], y.w[i], x.p);
    return r;
}

inline RElem relem_neg(const RElem& x) {
    RElem r(x.p);
    for (int i = 0; i < 4; ++i) r.w[i] = zp_neg(x.w[i], x.p);
    return r;
}

inline RElem relem_sub(const RElem& x, const RElem& y) { return relem_add(x, relem_neg(y)); }

inline RElem relem_mul(const RElem& x, const RElem& y) {
    require_same_p(x, y);
    const int p = x.p;
    RElem r(p);
    r.w[0] = zp_mul(x.a(), y.a(), p);
    r.w[1] = zp_add(zp_mul(x.a(), y.b(), p), zp_mul(x.b(), y.a(), p), p);
    r.w[2] = zp_add(zp_mul(x.a(), y.c(), p), zp_mul(x.c(), y.a(), p), p);
    r.w[3] = zp_norm(static_cast<long long>(x.a()) * y.d() + static_cast<long long>(x.b()) * y.c() +
                         static_cast<long long>(x.c()) * y.b() + static_cast<long long>(x.d()) * y.a(),
                     p);
    return r;
}

inline bool relem_is_unit(const RElem& x) { return x.a() != 0; }

/// Inverse of a unit: solve layer by layer against x*y = 1.
inline RElem relem_inv(const RElem& x) {
    if (!relem_is_unit(x)) throw std::domain_error("relem_inv: not a unit");
    const int p = x.p;
    int ia = zp_inv(x.a(), p);
    RElem y(p);
    y.w[0] = ia;
    y.w[1] = zp_neg(zp_mul(x.b(), zp_mul(ia, ia, p), p), p);
    y.w[2] = zp_neg(zp_mul(x.c(), zp_mul(ia, ia, p), p), p);
    // a*yd + b*yc + c*yb + d*ya = 0
    long long s = static_cast<long long>(x.b()) * y.w[2] + static_cast<long long>(x.c()) * y.w[1] +
                  static_cast<long long>(x.d()) * y.w[0];
    y.w[3] = zp_mul(zp_neg(zp_norm(s, p), p), ia, p);
    return y;
}

/// psi : R -> R_{u^2,p}, drops the v and uv components.
inline RElem psi(const RElem& x) { return RElem(x.p, x.a(), x.b(), 0, 0); }

/// phi_v : R -> R_{v^2,p}, drops the u and uv components.
inline RElem phi_v(const RElem& x) { return RElem(x.p, x.a(), 0, x.c(), 0); }

/// mu : R -> Z_p, the image in the residue field R/<u,v>.
inline int mu(const RElem& x) { return x.a(); }

inline std::string relem_to_string(const RElem& x) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const char* sym, int coeff) {
        if (coeff == 0) return;
        if (!first) os << " + ";
        first = false;
        if (sym[0] == '\0') {
            os << coeff;
        } else {
            os << sym;
            if (coeff != 1) os << "*" << coeff;
        }
    };
    term("", x.a());
    term("u", x.b());
    term("v", x.c());
    term("uv", x.d());
    if (first) return "0";
    return os.str();
}

}  // namespace ruv

#endif
