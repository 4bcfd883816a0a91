#include "ruv/tables.hpp"

#include "ruv/parse.hpp"

namespace ruv::tables {

// Classification of the nonzero cyclic codes of length 3 over R at p = 3,
// one family per canonical tower (t, t1, t2, t3); 49 families in all. The
// generator strings use g = x - 1 expanded and %k for the family constants.
const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {1, {"u*v*(x-1)^2"}, 0, 3, 3, 3, 2, 1, 3, -1, -1},
        {2, {"u*v*(x-1)"}, 0, 3, 3, 3, 1, 2, 2, -1, -1},
        {3, {"u*v"}, 0, 3, 3, 3, 0, 3, 1, -1, -1},
        {4, {"v*(x-1)^2+u*v*%0*(x-1)"}, 1, 3, 3, 2, 2, 1, 3, -1, -1},
        {5, {"v*(x-1)^2+u*v*%0", "u*v*(x-1)"}, 1, 3, 3, 2, 1, 2, 2, -1, -1},
        {6, {"v*(x-1)^2", "u*v"}, 0, 3, 3, 2, 0, 3, 1, -1, -1},
        {7, {"v*(x-1)+u*v*%0"}, 1, 3, 3, 1, 1, 2, 2, -1, -1},
        {8, {"v*(x-1)", "u*v"}, 0, 3, 3, 1, 0, 3, 1, -1, -1},
        {9, {"v"}, 0, 3, 3, 0, 0, 3, 1, -1, -1},
        {10, {"u*(x-1)^2+v*%0*(x-1)^2+u*v*%1*(x-1)"}, 2, 3, 2, 3, 2, 1, 3, -1, -1},
        {11, {"u*(x-1)^2+v*%0*(x-1)^2+u*v*%1", "u*v*(x-1)"}, 2, 3, 2, 3, 1, 2, 2, -1, -1},
        {12, {"u*(x-1)^2+v*%0*(x-1)^2", "u*v"}, 1, 3, 2, 3, 0, 3, 1, -1, -1},
        {13, {"u*(x-1)^2+u*v*%0*(x-1)", "v*(x-1)^2+u*v*%1*(x-1)"}, 2, 3, 2, 2, 2, 2, 3, -1, -1},
        {14, {"u*(x-1)^2+v*%0*(x-1)+u*v*%1", "v*(x-1)^2+u*v*%2", "u*v*(x-1)"}, 3, 3, 2, 2, 1, 3, 2, 0, 2},
        {15, {"u*(x-1)^2+v*%0*(x-1)", "v*(x-1)^2", "u*v"}, 1, 3, 2, 2, 0, 4, 1, -1, -1},
        {16, {"u*(x-1)^2+u*v*%0", "v*(x-1)+u*v*%1"}, 2, 3, 2, 1, 1, 3, 2, -1, -1},
        {17, {"u*(x-1)^2+v*%0", "v*(x-1)", "u*v"}, 1, 3, 2, 1, 0, 4, 1, -1, -1},
        {18, {"u*(x-1)^2", "v"}, 0, 3, 2, 0, 0, 4, 1, -1, -1},
        {19, {"u*(x-1)+v*%0*(x-1)+u*v*%1"}, 2, 3, 1, 3, 1, 2, 2, -1, -1},
        {20, {"u*(x-1)+v*%0*(x-1)", "u*v"}, 1, 3, 1, 3, 0, 3, 1, -1, -1},
        {21, {"u*(x-1)+v*%0*(x-1)+u*v*%1", "v*(x-1)^2+u*v*%2"}, 3, 3, 1, 2, 1, 3, 2, -1, -1},
        {22, {"u*(x-1)+v*(%0*x+%1)", "v*(x-1)^2", "u*v"}, 2, 3, 1, 2, 0, 4, 1, -1, -1},
        {23, {"u*(x-1)+u*v*%0", "v*(x-1)+u*v*%1"}, 2, 3, 1, 1, 1, 4, 2, -1, -1},
        {24, {"u*(x-1)+v*%0", "v*(x-1)", "u*v"}, 1, 3, 1, 1, 0, 5, 1, -1, -1},
        {25, {"u*(x-1)", "v"}, 0, 3, 1, 0, 0, 5, 1, -1, -1},
        {26, {"u+v*(%0*x^2+%1*x+%2)"}, 3, 3, 0, 3, 0, 3, 1, -1, -1},
        {27, {"u+v*(%0*x+%1)", "v*(x-1)^2"}, 2, 3, 0, 2, 0, 4, 1, -1, -1},
        {28, {"u+v*%0", "v*(x-1)"}, 1, 3, 0, 1, 0, 5, 1, -1, -1},
        {29, {"u", "v"}, 0, 3, 0, 0, 0, 6, 1, -1, -1},
        {30, {"(x-1)^2+u*%0*(x-1)+v*%1*(x-1)+u*v*%2*(x-1)"}, 3, 2, 2, 2, 2, 1, 3, -1, -1},
        {31, {"(x-1)^2+u*%0*(x-1)+v*%1*(x-1)+u*v*%2", "u*v*(x-1)"}, 3, 2, 2, 2, 1, 2, 2, -1, -1},
        {32, {"(x-1)^2+u*%0*(x-1)+v*%1*(x-1)", "u*v"}, 2, 2, 2, 2, 0, 3, 1, -1, -1},
        {33, {"(x-1)^2+u*%0*(x-1)+v*%1+u*v*%2", "v*(x-1)+u*v*%3"}, 4, 2, 2, 1, 1, 2, 2, -1, -1},
        {34, {"(x-1)^2+u*%0*(x-1)+v*%1", "v*(x-1)", "u*v"}, 2, 2, 2, 1, 0, 3, 1, -1, -1},
        {35, {"(x-1)^2+u*%0*(x-1)", "v"}, 1, 2, 2, 0, 0, 3, 1, -1, -1},
        {36, {"(x-1)^2+u*%0+v*%1*(x-1)+u*v*%2", "u*(x-1)+v*%3*(x-1)+u*v*%4"}, 5, 2, 1, 2, 1, 2, 2, -1, -1},
        {37, {"(x-1)^2+u*%0+v*(%1*(x-1)+%0*%2)", "u*(x-1)+v*%2*(x-1)", "u*v"}, 3, 2, 1, 2, 0, 3, 1, -1, -1},
        {38, {"(x-1)^2+u*v*%0", "u*(x-1)+u*v*%1", "v*(x-1)+u*v*%2"}, 3, 2, 1, 1, 1, 3, 2, -1, -1},
        {39, {"(x-1)^2+u*%0+v*%1", "u*(x-1)+v*%2", "v*(x-1)", "u*v"}, 3, 2, 1, 1, 0, 4, 1, 0, 2},
        {40, {"(x-1)^2+u*%0", "u*(x-1)", "v"}, 1, 2, 1, 0, 0, 4, 1, -1, -1},
        {41, {"(x-1)^2+v*%0*(x-1)", "u+v*(%1*x+%2)", "u*v"}, 3, 2, 0, 2, 0, 4, 1, -1, -1},
        {42, {"(x-1)^2+v*%0", "u+v*%1", "v*(x-1)"}, 2, 2, 0, 1, 0, 4, 1, -1, -1},
        {43, {"(x-1)^2", "u", "v"}, 0, 2, 0, 0, 0, 5, 1, -1, -1},
        {44, {"(x-1)+u*%0+v*%1+u*v*%2"}, 3, 1, 1, 1, 1, 2, 2, -1, -1},
        {45, {"(x-1)+u*%0+v*%1", "u*v"}, 2, 1, 1, 1, 0, 3, 1, -1, -1},
        {46, {"(x-1)+u*%0", "v"}, 1, 1, 1, 0, 0, 3, 1, -1, -1},
        {47, {"(x-1)+v*%0", "u+v*%1"}, 2, 1, 0, 1, 0, 3, 1, -1, -1},
        {48, {"(x-1)", "u", "v"}, 0, 1, 0, 0, 0, 4, 1, -1, -1},
        {49, {"1"}, 0, 0, 0, 0, 0, 3, 1, -1, -1},
    };
    return rows;
}

// Ternary Gray images listed for cyclic codes of length 3 over R at p = 3.
const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = {
        {1, {"u*v*(x-1)^2"}, 12, 1, 12},
        {2, {"v*(x-1)^2+u*v*2*(x-1)"}, 12, 2, 8},
        {3, {"u*(x-1)^2+v*(x-1)^2+u*v*2*(x-1)"}, 12, 3, 8},
        {4, {"u*(x-1)^2+v*(x-1)^2+u*v", "u*v*(x-1)"}, 12, 4, 6},
        {5, {"u*(x-1)^2", "v*(x-1)^2", "u*v*(x-1)"}, 12, 5, 6},
        {6, {"u*(x-1)^2+v*(x-1)", "v*(x-1)^2", "u*v*(x-1)"}, 12, 6, 6},
        {7, {"u*(x-1)+v*(x-1)", "u*v"}, 12, 7, 4},
        {8, {"(x-1)^2", "u*(x-1)", "v*(x-1)"}, 12, 8, 3},
        {9, {"(x-1)^2", "u*(x-1)", "v*(x-1)", "u*v"}, 12, 9, 3},
        {10, {"(x-1)^2", "u*(x-1)", "v"}, 12, 10, 2},
        {11, {"(x-1)", "u+2*v"}, 12, 11, 2},
    };
    return rows;
}

PolyR instantiate(const std::string& templ, const std::vector<int>& consts, int p, int n) {
    std::string src;
    src.reserve(templ.size());
    for (size_t i = 0; i < templ.size(); ++i) {
        if (templ[i] == '%' && i + 1 < templ.size() && templ[i + 1] >= '0' && templ[i + 1] <= '9') {
            int idx = templ[i + 1] - '0';
            src += std::to_string(consts.at(static_cast<size_t>(idx)));
            ++i;
        } else {
            src += templ[i];
        }
    }
    return parse_poly(src, p, n);
}

Table1RowResult replay_table1_row(const Table1Row& row) {
    constexpr int p = 3, n = 3;
    Table1RowResult res;
    res.id = row.id;

    long long total = pow_clamped(p, row.num_constants);
    std::vector<int> consts(static_cast<size_t>(std::max(row.num_constants, 1)), 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (int i = 0; i < row.num_constants; ++i) {
            consts[static_cast<size_t>(i)] = static_cast<int>(v % p);
            v /= p;
        }
        if (row.constraint_a >= 0 &&
            consts[static_cast<size_t>(row.constraint_a)] * consts[static_cast<size_t>(row.constraint_b)] % p != 0)
            continue;
        ++res.assignments;

        std::vector<PolyR> gens;
        for (const auto& t : row.generators) gens.push_back(instantiate(t, consts, p, n));
        CyclicCode C = code_from_generators(gens, p, n);
        const CanonicalGens& G = C.gens;
        if (G.t != row.t || G.t1 != row.t1 || G.t2 != row.t2 || G.t3 != row.t3) continue;  // degenerate
        ++res.admissible;

        RankInfo ri = rank_and_spanning_set(C);
        int d = distance_via_torsion(C);
        res.computed_rank = ri.rank;
        res.computed_dist = d;
        res.nakayama = nakayama_rank(C);
        if (ri.rank != row.rank) ++res.rank_mismatches;
        if (d != row.dist) ++res.dist_mismatches;
        res.distinct_code_keys.push_back(C.basis.key());
    }
    return res;
}

Table2RowResult replay_table2_row(const Table2Row& row) {
    constexpr int p = 3, n = 3;
    Table2RowResult res;
    res.id = row.id;
    res.listed_k = row.k;
    res.listed_d = row.d;
    std::vector<PolyR> gens;
    for (const auto& t : row.generators) gens.push_back(parse_poly(t, p, n));
    CyclicCode C = code_from_generators(gens, p, n);
    LinearCodeZp L = gray_code(C);
    res.computed_k = L.k;
    res.computed_d = L.d.value();
    return res;
}

std::vector<Table1RowResult> replay_table1() {
    std::vector<Table1RowResult> out;
    for (const auto& row : table1()) out.push_back(replay_table1_row(row));
    return out;
}

std::vector<Table2RowResult> replay_table2() {
    std::vector<Table2RowResult> out;
    for (const auto& row : table2()) out.push_back(replay_table2_row(row));
    return out;
}

}  // namespace ruv::tables
