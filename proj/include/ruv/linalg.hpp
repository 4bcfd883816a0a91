#ifndef RUV_LINALG_HPP
#define RUV_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ruv/zp.hpp"

namespace ruv {

using ZpVec = std::vector<uint8_t>;

/// Subspace of Z_p^cols kept in reduced row echelon form. Rows are ordered by
/// pivot column, pivots are 1 and cleared above and below, so two spans are
/// equal iff their row lists are byte-identical.
struct ZpSpan {
    int p = 0;
    size_t cols = 0;
    std::vector<ZpVec> rows;
    std::vector<size_t> pivots;

    ZpSpan() = default;
    ZpSpan(int prime, size_t ncols) : p(prime), cols(ncols) { require_prime(prime); }

    size_t rank() const { return rows.size(); }

    /// Reduces v against the current rows in place; afterwards v is the
    /// canonical residual (zero iff v was in the span).
    void reduce(ZpVec& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            uint8_t cf = v[pivots[r]];
            if (cf == 0) continue;
            const ZpVec& row = rows[r];
            for (size_t j = 0; j < cols; ++j)
                v[j] = static_cast<uint8_t>(zp_sub(v[j], zp_mul(cf, row[j], p), p));
        }
    }

    bool contains(ZpVec v) const {
        reduce(v);
        for (uint8_t x : v)
            if (x) return false;
        return true;
    }

    /// Inserts a vector, keeping reduced echelon form. Returns true if the
    /// span grew.
    bool insert(ZpVec v) {
        if (v.size() != cols) throw std::invalid_argument("ZpSpan::insert: length mismatch");
        reduce(v);
        size_t piv = cols;
        for (size_t j = 0; j < cols; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
        if (piv == cols) return false;
        uint8_t inv = static_cast<uint8_t>(zp_inv(v[piv], p));
        for (auto& x : v) x = static_cast<uint8_t>(zp_mul(x, inv, p));
        size_t at = 0;
        while (at < pivots.size() && pivots[at] < piv) ++at;
        rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
        pivots.insert(pivots.begin() + static_cast<long>(at), piv);
        // clear the new pivot column in the rows above
        for (size_t r = 0; r < at; ++r) {
            uint8_t cf = rows[r][piv];
            if (cf == 0) continue;
            for (size_t j = 0; j < cols; ++j)
                rows[r][j] = static_cast<uint8_t>(zp_sub(rows[r][j], zp_mul(cf, rows[at][j], p), p));
        }
        return true;
    }

    /// Canonical byte string; equal spans give equal keys.
    std::string key() const {
        std::string s;
        s.reserve(rows.size() * cols + 8);
        s += std::to_string(rows.size());
        s += ':';
        for (const auto& r : rows) s.append(reinterpret_cast<const char*>(r.data()), r.size());
        return s;
    }

    bool operator==(const ZpSpan& o) const { return p == o.p && cols == o.cols && rows == o.rows; }
};

/// Solves sum_i y_i * basis_row_i subject to linear coordinate constraints
/// (column, value). Returns the combined vector, free coefficients taken as
/// zero, or nullopt if inconsistent. Deterministic for a fixed span.
inline std::optional<ZpVec> solve_in_span(const ZpSpan& span,
                                          const std::vector<std::pair<size_t, uint8_t>>& constraints) {
    const int p = span.p;
    const size_t k = span.rank(), m = constraints.size();
    // Augmented system M y = t with M[r][i] = row_i[col_r].
    std::vector<ZpVec> M(m, ZpVec(k + 1, 0));
    for (size_t r = 0; r < m; ++r) {
        for (size_t i = 0; i < k; ++i) M[r][i] = span.rows[i][constraints[r].first];
        M[r][k] = constraints[r].second;
    }
    std::vector<size_t> pivot_col;
    size_t rr = 0;
    for (size_t col = 0; col < k && rr < m; ++col) {
        size_t sel = rr;
        while (sel < m && M[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(M[rr], M[sel]);
        uint8_t inv = static_cast<uint8_t>(zp_inv(M[rr][col], p));
        for (auto& x : M[rr]) x = static_cast<uint8_t>(zp_mul(x, inv, p));
        for (size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == rr || M[r2][col] == 0) continue;
            uint8_t cf = M[r2][col];
            for (size_t j = 0; j <= k; ++j)
                M[r2][j] = static_cast<uint8_t>(zp_sub(M[r2][j], zp_mul(cf, M[rr][j], p), p));
        }
        pivot_col.push_back(col);
        ++rr;
    }
    for (size_t r = rr; r < m; ++r)
        if (M[r][k] != 0) return std::nullopt;  // inconsistent
    ZpVec y(k, 0);
    for (size_t r = 0; r < rr; ++r) y[pivot_col[r]] = M[r][k];
    ZpVec out(span.cols, 0);
    for (size_t i = 0; i < k; ++i) {
        if (y[i] == 0) continue;
        for (size_t j = 0; j < span.cols; ++j)
            out[j] = static_cast<uint8_t>(zp_add(out[j], zp_mul(y[i], span.rows[i][j], p), p));
    }
    return out;
}

/// The subspace of vectors whose coordinates in `zero_cols` all vanish.
inline ZpSpan subspace_with_zero_columns(const ZpSpan& span, const std::vector<size_t>& zero_cols) {
    std::vector<ZpVec> work = span.rows;
    std::vector<char> consumed(work.size(), 0);
    const int p = span.p;
    for (size_t col : zero_cols) {
        size_t piv = work.size();
        for (size_t r = 0; r < work.size(); ++r)
            if (!consumed[r] && work[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == work.size()) continue;
        consumed[piv] = 1;
        uint8_t inv = static_cast<uint8_t>(zp_inv(work[piv][col], p));
        for (size_t r = 0; r < work.size(); ++r) {
            if (r == piv || consumed[r] || work[r][col] == 0) continue;
            uint8_t cf = static_cast<uint8_t>(zp_mul(work[r][col], inv, p));
            for (size_t j = 0; j < span.cols; ++j)
                work[r][j] = static_cast<uint8_t>(zp_sub(work[r][j], zp_mul(cf, work[piv][j], p), p));
        }
    }
    ZpSpan sub(span.p, span.cols);
    for (size_t r = 0; r < work.size(); ++r)
        if (!consumed[r]) sub.insert(work[r]);
    return sub;
}

/// Projection of a span onto a subset of columns (in the given order).
inline ZpSpan project_columns(const ZpSpan& span, const std::vector<size_t>& cols) {
    ZpSpan out(span.p, cols.size());
    for (const auto& row : span.rows) {
        ZpVec v(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) v[j] = row[cols[j]];
        out.insert(std::move(v));
    }
    return out;
}

}  // namespace ruv

#endif
