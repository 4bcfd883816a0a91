#ifndef RUV_DISTANCE_HPP
#define RUV_DISTANCE_HPP

#include <climits>
#include <numeric>

#include "ruv/code.hpp"

namespace ruv {

/// Distance of the zero code.
inline constexpr int kInfiniteDistance = INT_MAX;

/// Default cap on codeword enumerations (3^16).
inline constexpr long long kDefaultCodewordBudget = 43046721LL;

namespace detail {

/// Minimum weight over the nonzero vectors of a span, where weight counts
/// positions (blocks of `pos_width` adjacent columns) holding any nonzero
/// entry. Walks Z_p^k in reflected Gray order so each step updates the
/// running vector by +/- one basis row, with per-position nonzero counts
/// maintained incrementally.
inline int min_weight_enum(const ZpSpan& span, size_t pos_width, long long budget) {
    const int p = span.p;
    const size_t k = span.rank();
    if (k == 0) return kInfiniteDistance;
    long long words = pow_clamped(p, static_cast<int>(k));
    if (words > budget) throw BudgetExceeded(words, budget, "min_weight_enum");

    const size_t npos = span.cols / pos_width;
    std::vector<uint8_t> cur(span.cols, 0);
    std::vector<int> nz_in_pos(npos, 0);
    int weight = 0;

    struct RowSupport {
        std::vector<size_t> positions;
    };
    std::vector<RowSupport> support(k);
    for (size_t r = 0; r < k; ++r) {
        for (size_t pos = 0; pos < npos; ++pos) {
            bool any = false;
            for (size_t j = 0; j < pos_width; ++j)
                if (span.rows[r][pos * pos_width + j]) {
                    any = true;
                    break;
                }
            if (any) support[r].positions.push_back(pos);
        }
    }

    auto apply_row = [&](size_t r, bool add) {
        const ZpVec& row = span.rows[r];
        for (size_t pos : support[r].positions) {
            bool was = nz_in_pos[pos] > 0;
            int count = 0;
            for (size_t j = 0; j < pos_width; ++j) {
                size_t col = pos * pos_width + j;
                uint8_t rv = row[col];
                if (rv) {
                    cur[col] = static_cast<uint8_t>(add ? zp_add(cur[col], rv, p) : zp_sub(cur[col], rv, p));
                }
                if (cur[col]) ++count;
            }
            nz_in_pos[pos] = count;
            bool now = count > 0;
            if (was != now) weight += now ? 1 : -1;
        }
    };

    std::vector<int> digit(k, 0);
    std::vector<int> dir(k, 1);
    int minw = kInfiniteDistance;
    for (long long step = 1; step < words; ++step) {
        size_t i = 0;
        for (;; ++i) {
            int nd = digit[i] + dir[i];
            if (nd >= 0 && nd < p) {
                digit[i] = nd;
                apply_row(i, dir[i] > 0);
                break;
            }
            dir[i] = -dir[i];
        }
        if (weight < minw) minw = weight;
    }
    return minw;
}

}  // namespace detail

/// Exhaustive minimum Hamming weight of C over R-coordinates (nonzero RElem
/// positions). Infinity for the zero code.
inline int min_hamming_weight(const CyclicCode& C, long long budget = kDefaultCodewordBudget) {
    return detail::min_weight_enum(C.basis, 4, budget);
}

/// Z_p cyclic code <gen> of length n as an echelon span.
inline ZpSpan zp_cyclic_span(const PolyZp& gen, int n) {
    ZpSpan span(gen.p, static_cast<size_t>(n));
    auto coeffs = detail::quotient_coeffs(gen, n);
    for (int s = 0; s < n; ++s) {
        ZpVec row(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) row[static_cast<size_t>((i + s) % n)] = static_cast<uint8_t>(coeffs[static_cast<size_t>(i)]);
        span.insert(std::move(row));
    }
    return span;
}

inline int min_hamming_weight(const PolyZp& gen, int n, long long budget = kDefaultCodewordBudget) {
    return detail::min_weight_enum(zp_cyclic_span(gen, n), 1, budget);
}

/// Generator of C_uv = { f : uv f in C }, i.e. a3. At desk scale the
/// identity against the basis-level computation is re-asserted.
inline PolyZp c_uv_generator(const CyclicCode& C) {
    ResTorTower tw = residue_torsion_tower(C);
    if (!(tw.c4 == C.gens.a3)) throw std::logic_error("c_uv_generator: tower disagrees with canonical a3");
    return C.gens.a3;
}

/// d(C) via the torsion reduction: the minimum distance of C equals that of
/// the p-ary cyclic code <a3>, a far smaller enumeration.
inline int distance_via_torsion(const CyclicCode& C, long long budget = kDefaultCodewordBudget) {
    if (C.k == 0) throw std::domain_error("distance_via_torsion: zero code");
    if (C.n % C.p != 0) throw std::invalid_argument("distance_via_torsion: requires p | n");
    return min_hamming_weight(C.gens.a3, C.n, budget);
}

// ---------------------------------------------------------------------------
// p-adic digit classification and the closed-form distance at length p^l
// ---------------------------------------------------------------------------

enum class PAdicKind { ZeroExpansion, NonZeroExpansion, Full };

struct PAdicExpansion {
    int m = 0, p = 0, l = 0;
    std::vector<int> digits;  // digits[i] = b_i, i = 0..l-1
    PAdicKind kind = PAdicKind::Full;
    int q = 0;  // leading run length (q = l for a full expansion)

    int digit_from_top(int i) const { return digits[static_cast<size_t>(l - i)]; }  // b_{l-i}, 1 <= i <= l
};

inline PAdicExpansion p_adic_classify(int m, int p, int l) {
    require_prime(p);
    if (l < 1 || m <= 0 || m >= pow_clamped(p, l))
        throw std::invalid_argument("p_adic_classify: need 0 < m < p^l");
    PAdicExpansion e;
    e.m = m;
    e.p = p;
    e.l = l;
    e.digits.assign(static_cast<size_t>(l), 0);
    int v = m;
    for (int i = 0; i < l; ++i) {
        e.digits[static_cast<size_t>(i)] = v % p;
        v /= p;
    }
    int q = 0;
    while (q < l && e.digits[static_cast<size_t>(l - 1 - q)] != 0) ++q;
    if (q == l) {
        e.kind = PAdicKind::Full;
        e.q = l;
        return e;
    }
    e.q = q;
    bool tail_nonzero = false;
    for (int i = 0; i < l - 1 - q; ++i)
        if (e.digits[static_cast<size_t>(i)] != 0) tail_nonzero = true;
    e.kind = tail_nonzero ? PAdicKind::NonZeroExpansion : PAdicKind::ZeroExpansion;
    return e;
}

struct HypothesisNotMet : std::runtime_error {
    explicit HypothesisNotMet(const std::string& why) : std::runtime_error("closed form hypothesis not met: " + why) {}
};

/// Closed-form minimum distance for length n = p^l when the canonical tower
/// consists of powers of (x-1) with strict chains t > t1 > t3 > 0 and
/// t > t2 > t3 > 0. Outside that hypothesis HypothesisNotMet is thrown and
/// callers fall back to the torsion enumeration.
inline int distance_closed_form_exponents(int t, int t1, int t2, int t3, int p, int l) {
    if (!(t > t1 && t1 > t3 && t3 > 0 && t > t2 && t2 > t3))
        throw HypothesisNotMet("need t > t1 > t3 > 0 and t > t2 > t3 > 0");
    long long half = pow_clamped(p, l - 1);
    if (t3 <= half) return 2;
    PAdicExpansion e = p_adic_classify(t3, p, l);
    long long d = 1;
    for (int i = 1; i <= e.q; ++i) d *= e.digit_from_top(i) + 1;
    if (e.kind == PAdicKind::NonZeroExpansion) d *= 2;
    return static_cast<int>(d);
}

inline int distance_closed_form(const CanonicalGens& G, int l) {
    const int p = G.p, n = G.n;
    if (pow_clamped(p, l) != n) throw std::invalid_argument("distance_closed_form: n must equal p^l");
    PolyZp xm1 = PolyZp(p, {zp_neg(1, p), 1});
    auto is_power_of_xm1 = [&](const PolyZp& f, int e) { return f == poly_pow(xm1, e); };
    if (!is_power_of_xm1(G.g, G.t) || !is_power_of_xm1(G.a1, G.t1) || !is_power_of_xm1(G.a2, G.t2) ||
        !is_power_of_xm1(G.a3, G.t3))
        throw HypothesisNotMet("tower is not a chain of (x-1) powers");
    return distance_closed_form_exponents(G.t, G.t1, G.t2, G.t3, p, l);
}

/// Distance of <(x^{p^{l-1}} - 1)^b h(x)> at length p^l, given that h
/// generates a length-p^{l-1} code of distance d: the product collapses to
/// (b+1) d.
inline int repeated_root_subcode_distance(int b, int h_distance, int p) {
    if (b < 1 || b >= p) throw std::invalid_argument("repeated_root_subcode_distance: need 1 <= b < p");
    return (b + 1) * h_distance;
}

struct SingletonCheck {
    bool holds = false;
    int slack = 0;  // (n - rank + 1) - d
    int distance = 0;
    int rank = 0;
};

/// Evaluates d(C) <= n - rank(C) + 1. Over this ring the inequality can fail;
/// the result records by how much.
inline SingletonCheck singleton_check(const CyclicCode& C, long long budget = kDefaultCodewordBudget) {
    if (C.k == 0) throw std::domain_error("singleton_check: zero code");
    SingletonCheck s;
    s.rank = rank_and_spanning_set(C).rank;
    s.distance = (C.n % C.p == 0) ? distance_via_torsion(C, budget) : min_hamming_weight(C, budget);
    s.slack = (C.n - s.rank + 1) - s.distance;
    s.holds = s.slack >= 0;
    return s;
}

}  // namespace ruv

#endif
