#ifndef RUV_GRAY_HPP
#define RUV_GRAY_HPP

#include <array>
#include <optional>

#include "ruv/distance.hpp"

namespace ruv {

/// Gray image of a single element: (a+b+c+d, c+d, b+d, d). A Z_p-linear
/// bijection of Z_p^4 for every p (the transition matrix has unit
/// determinant).
inline std::array<int, 4> gray_elem(const RElem& x) {
    const int p = x.p;
    return {zp_norm(static_cast<long long>(x.a()) + x.b() + x.c() + x.d(), p), zp_add(x.c(), x.d(), p),
            zp_add(x.b(), x.d(), p), x.d()};
}

/// Lee weight of an element = Hamming weight of its Gray image.
inline int lee_weight(const RElem& x) {
    auto g = gray_elem(x);
    int w = 0;
    for (int v : g)
        if (v) ++w;
    return w;
}

inline int lee_weight(const PolyR& w) {
    int total = 0;
    for (const auto& e : w.c) total += lee_weight(e);
    return total;
}

/// Blockwise Gray map on a position-major vector of Z_p^{4n}.
inline ZpVec gray_vec(const ZpVec& v, int p) {
    ZpVec out(v.size());
    for (size_t i = 0; i + 3 < v.size(); i += 4) {
        RElem e(p, v[i], v[i + 1], v[i + 2], v[i + 3]);
        auto g = gray_elem(e);
        for (size_t j = 0; j < 4; ++j) out[i + j] = static_cast<uint8_t>(g[j]);
    }
    return out;
}

/// p-ary linear code: echelon generator matrix over Z_p plus cached minimum
/// distance when it has been computed.
struct LinearCodeZp {
    int p = 0;
    size_t N = 0;
    ZpSpan basis;
    int k = 0;
    std::optional<int> d;
};

/// Gray image of a cyclic code as a p-ary [4n, k, d] code. The image of the
/// Z_p basis spans the image code since the map is Z_p-linear; the distance
/// (= minimum Lee weight of C) is computed on the image when requested.
inline LinearCodeZp gray_code(const CyclicCode& C, bool with_distance = true,
                              long long budget = kDefaultCodewordBudget) {
    LinearCodeZp L;
    L.p = C.p;
    L.N = static_cast<size_t>(4 * C.n);
    L.basis = ZpSpan(C.p, L.N);
    for (const auto& row : C.basis.rows) L.basis.insert(gray_vec(row, C.p));
    L.k = static_cast<int>(L.basis.rank());
    if (L.k != C.k) throw std::logic_error("gray_code: image dimension differs from dim C");
    if (with_distance) L.d = detail::min_weight_enum(L.basis, 1, budget);
    return L;
}

/// Cyclic shift by `shift` coordinates on plain vectors.
inline ZpVec rotate_vec(const ZpVec& v, size_t shift) {
    ZpVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[(i + shift) % v.size()] = v[i];
    return out;
}

/// true iff the code is invariant under the shift by ell coordinates.
inline bool is_quasi_cyclic(const LinearCodeZp& code, size_t ell) {
    if (ell == 0 || code.N % ell != 0) throw std::invalid_argument("is_quasi_cyclic: shift must divide the length");
    for (const auto& row : code.basis.rows)
        if (!code.basis.contains(rotate_vec(row, ell))) return false;
    return true;
}

inline std::string generator_matrix_text(const LinearCodeZp& code) {
    std::string out;
    for (const auto& row : code.basis.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(static_cast<int>(row[j]));
        }
        out += '\n';
    }
    return out;
}

}  // namespace ruv

#endif
