#ifndef RUV_TABLES_HPP
#define RUV_TABLES_HPP

#include <string>
#include <vector>

#include "ruv/gray.hpp"

namespace ruv::tables {

/// One family of the bundled classification of nonzero cyclic codes of
/// length 3 over R with p = 3 (written with g = x - 1 expanded). Generators
/// carry placeholders %0..%4 for constants ranging over Z_3. `tower` is the
/// canonical degree quadruple (t, t1, t2, t3) the family is built around; an
/// assignment is admissible precisely when the generated code has that tower
/// (degenerate assignments fall into another family). `constraint_product`
/// marks the listed side condition c_i * c_j = 0 when present.
struct Table1Row {
    int id;
    std::vector<std::string> generators;
    int num_constants;
    int t, t1, t2, t3;
    int rank;
    int dist;
    int constraint_a = -1, constraint_b = -1;  // product must vanish when >= 0
};

/// One row of the bundled ternary Gray-image table: generators of a cyclic
/// code of length 3 over R (p = 3) and the listed [12, k, d] image
/// parameters.
struct Table2Row {
    int id;
    std::vector<std::string> generators;
    int N, k, d;
};

const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();

// ---------------------------------------------------------------------------
// Replay results
// ---------------------------------------------------------------------------

struct Table1RowResult {
    int id = 0;
    int assignments = 0;  // tuples satisfying the printed side constraint
    int admissible = 0;   // of those, tuples whose code has the family tower
    int rank_mismatches = 0;
    int dist_mismatches = 0;
    int computed_rank = -1;   // rank observed on admissible assignments
    int computed_dist = -1;   // distance observed on admissible assignments
    int nakayama = -1;        // independent minimum-generator count
    std::vector<std::string> distinct_code_keys;  // echelon keys of admissible codes
    bool ok() const { return admissible > 0 && rank_mismatches == 0 && dist_mismatches == 0; }
};

struct Table2RowResult {
    int id = 0;
    int listed_k = 0, listed_d = 0;
    int computed_k = 0, computed_d = 0;
    bool ok() const { return listed_k == computed_k && listed_d == computed_d; }
};

Table1RowResult replay_table1_row(const Table1Row& row);
Table2RowResult replay_table2_row(const Table2Row& row);

std::vector<Table1RowResult> replay_table1();
std::vector<Table2RowResult> replay_table2();

/// Substitutes constants into a generator template and parses it.
PolyR instantiate(const std::string& templ, const std::vector<int>& consts, int p, int n);

}  // namespace ruv::tables

#endif
