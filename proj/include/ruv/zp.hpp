#ifndef RUV_ZP_HPP
#define RUV_ZP_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace ruv {

// Residue arithmetic modulo a small prime p. Values live in [0, p-1].

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

inline int zp_norm(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

inline int zp_add(int a, int b, int p) {
    int s = a + b;
    return s >= p ? s - p : s;
}

inline int zp_sub(int a, int b, int p) {
    int s = a - b;
    return s < 0 ? s + p : s;
}

inline int zp_mul(int a, int b, int p) { return static_cast<int>(static_cast<long long>(a) * b % p); }

inline int zp_neg(int a, int p) { return a == 0 ? 0 : p - a; }

inline int zp_pow(int a, long long e, int p) {
    long long base = a % p, acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

inline int zp_inv(int a, int p) {
    if (a % p == 0) throw std::domain_error("zp_inv: zero has no inverse");
    return zp_pow(zp_norm(a, p), p - 2, p);
}

// p^e clamped so budget comparisons never overflow.
inline long long pow_clamped(int p, int e, long long cap = std::numeric_limits<long long>::max() / 4) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / p) return cap;
        r *= p;
    }
    return r;
}

// Raised when a desk-scale guard (enumeration or codeword budget) is hit.
struct BudgetExceeded : std::runtime_error {
    long long required;
    long long budget;
    BudgetExceeded(long long req, long long bud, const std::string& what_op)
        : std::runtime_error("budget exceeded in " + what_op + ": requires " + std::to_string(req) +
                             " > budget " + std::to_string(bud)),
          required(req),
          budget(bud) {}
};

}  // namespace ruv

#endif
