// Acceptance suite: one pass/fail line per criterion. Each criterion prints
// its evidence; a failing criterion reports exactly what disagreed. Run with
// no arguments for all criteria, or pass criterion numbers.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "ruv/gray.hpp"
#include "ruv/parse.hpp"
#include "ruv/tables.hpp"

using namespace ruv;

namespace {

PolyR random_word(std::mt19937& rng, int p, int n) {
    std::uniform_int_distribution<int> coeff(0, p - 1);
    PolyR w(p, n);
    for (auto& e : w.c)
        for (auto& x : e.w) x = coeff(rng);
    return w;
}

PolyZp xm1_pow(int p, int e) { return poly_pow(PolyZp(p, {zp_neg(1, p), 1}), e); }

// --------------------------------------------------------------------------
// 1. classification replay: rank and distance of every family, every
//    admissible constant assignment
// --------------------------------------------------------------------------
bool criterion1(std::ostream& os) {
    auto results = tables::replay_table1();
    int rows_bad = 0, assignments = 0, admissible = 0, excluded = 0;
    for (const auto& res : results) {
        assignments += res.assignments;
        admissible += res.admissible;
        excluded += res.assignments - res.admissible;
        if (!res.ok()) {
            ++rows_bad;
            const auto& row = tables::table1()[static_cast<size_t>(res.id - 1)];
            os << "    row " << res.id << ": listed (rank " << row.rank << ", d " << row.dist
               << ") but computed (rank " << res.computed_rank << ", d " << res.computed_dist << ") on "
               << res.admissible << " assignments; independent minimal-generator count " << res.nakayama
               << "\n";
        }
    }
    os << "    49 families, " << assignments << " constant assignments, " << admissible
       << " admissible (" << excluded << " degenerate, classified under their own towers)\n";
    return rows_bad == 0;
}

// --------------------------------------------------------------------------
// 2. ternary image replay: [12, k, d] of the 11 listed codes
// --------------------------------------------------------------------------
bool criterion2(std::ostream& os) {
    auto results = tables::replay_table2();
    int bad = 0;
    for (const auto& res : results) {
        if (!res.ok()) {
            ++bad;
            os << "    row " << res.id << ": listed [12, " << res.listed_k << ", " << res.listed_d
               << "] but the image computes to [12, " << res.computed_k << ", " << res.computed_d << "]\n";
        }
    }
    os << "    " << (11 - bad) << "/11 rows match exactly\n";
    return bad == 0;
}

// --------------------------------------------------------------------------
// 3. torsion-distance equivalence, exhaustive over all codes at (2,2), (2,4), (3,3)
// --------------------------------------------------------------------------
bool criterion3(std::ostream& os) {
    bool ok = true;
    for (auto [p, n] : {std::pair{2, 2}, {2, 4}, {3, 3}}) {
        auto codes = enumerate_codes(p, n, 10'000'000);
        int checked = 0;
        for (const auto& C : codes) {
            if (C.k == 0) continue;
            int full = min_hamming_weight(C);
            int torsion = min_hamming_weight(C.gens.a3, n);
            if (full != torsion) {
                ok = false;
                os << "    (" << p << "," << n << "): code with tower (" << C.gens.t << "," << C.gens.t1
                   << "," << C.gens.t2 << "," << C.gens.t3 << ") has d=" << full << " but torsion code gives "
                   << torsion << "\n";
            }
            ++checked;
        }
        os << "    (" << p << "," << n << "): " << checked << " nonzero codes, full enumeration == torsion code distance\n";
    }
    return ok;
}

// --------------------------------------------------------------------------
// 4. closed-form distance audit at n = p^l
// --------------------------------------------------------------------------
bool criterion4(std::ostream& os) {
    bool ok = true;

    // n = 4, p = 2: every canonical tuple with the strict chain, against the
    // full codeword enumeration
    {
        auto codes = enumerate_codes(2, 4, 10'000'000);
        int checked = 0;
        for (const auto& C : codes) {
            const auto& G = C.gens;
            if (!(G.t > G.t1 && G.t1 > G.t3 && G.t3 > 0 && G.t > G.t2 && G.t2 > G.t3)) continue;
            int cf = distance_closed_form(G, 2);
            int oracle = min_hamming_weight(C);
            if (cf != oracle) {
                ok = false;
                os << "    n=4: tuple (" << G.t << "," << G.t1 << "," << G.t2 << "," << G.t3
                   << ") closed form " << cf << " vs oracle " << oracle << "\n";
            }
            ++checked;
        }
        os << "    n=4 (p=2): " << checked << " strict-chain tuples, closed form == full oracle\n";
    }

    // n = 9, p = 3: every strict chain, against exhaustive enumeration of the
    // torsion code <(x-1)^t3>; representative codes are built per chain and
    // routed through the torsion reduction, with a full-code oracle where the
    // dimension permits
    {
        int chains = 0, represented = 0;
        for (int t = 3; t <= 9; ++t)
            for (int t1 = 2; t1 < t; ++t1)
                for (int t2 = 2; t2 < t; ++t2)
                    for (int t3 = 1; t3 < std::min(t1, t2); ++t3) {
                        int cf = distance_closed_form_exponents(t, t1, t2, t3, 3, 2);
                        int oracle = min_hamming_weight(xm1_pow(3, t3), 9);
                        if (cf != oracle) {
                            ok = false;
                            os << "    n=9: chain (" << t << "," << t1 << "," << t2 << "," << t3
                               << ") closed form " << cf << " vs torsion oracle " << oracle << "\n";
                        }
                        ++chains;
                        int k = 36 - t - t1 - t2 - t3;
                        if (k <= 12) {
                            CanonicalGens G;
                            G.p = 3;
                            G.n = 9;
                            G.g = xm1_pow(3, t);
                            G.a1 = xm1_pow(3, t1);
                            G.a2 = xm1_pow(3, t2);
                            G.a3 = xm1_pow(3, t3);
                            G.p1 = G.q1 = G.r1 = G.q2 = G.r2 = G.r3 = PolyZp::zero(3);
                            G.t = t;
                            G.t1 = t1;
                            G.t2 = t2;
                            G.t3 = t3;
                            G.t_min = std::min(t1, t2);
                            CyclicCode C = code_from_canonical(G);
                            int full = min_hamming_weight(C);
                            if (full != cf) {
                                ok = false;
                                os << "    n=9: chain (" << t << "," << t1 << "," << t2 << "," << t3
                                   << ") full-code oracle " << full << " vs closed form " << cf << "\n";
                            }
                            ++represented;
                        }
                    }
        os << "    n=9 (p=3): " << chains << " strict chains, closed form == torsion-code oracle ("
           << represented << " additionally verified by full-code enumeration)\n";
    }

    // n = 27, p = 3: partial check, the closed form against the structured
    // subcode factorization (x-1)^{9b+r} = (x^9-1)^b (x-1)^r; small torsion
    // degrees give the weight-2 witness x^9-1 directly, large ones also admit
    // the direct oracle
    {
        int checked = 0, direct = 0;
        for (int t3 = 1; t3 <= 25; ++t3) {
            int cf = distance_closed_form_exponents(t3 + 2, t3 + 1, t3 + 1, t3, 3, 3);
            if (t3 <= 9) {
                // (x-1)^{9-t3} * (x-1)^{t3} = x^9 - 1: a weight-2 codeword;
                // weight 1 is impossible since every codeword vanishes at 1
                if (cf != 2) {
                    ok = false;
                    os << "    n=27: t3=" << t3 << " closed form " << cf << " but a weight-2 witness exists\n";
                }
            } else {
                int b = t3 / 9, r = t3 % 9;
                int d9 = (r == 0) ? 1 : min_hamming_weight(xm1_pow(3, r), 9);
                int lemma = repeated_root_subcode_distance(b, d9, 3);
                if (cf != lemma) {
                    ok = false;
                    os << "    n=27: t3=" << t3 << " closed form " << cf << " vs structured subcode value "
                       << lemma << "\n";
                }
            }
            if (27 - t3 <= 10) {
                int oracle = min_hamming_weight(xm1_pow(3, t3), 27);
                if (cf != oracle) {
                    ok = false;
                    os << "    n=27: t3=" << t3 << " closed form " << cf << " vs direct oracle " << oracle
                       << "\n";
                }
                ++direct;
            }
            ++checked;
        }
        os << "    n=27 (p=3): " << checked
           << " torsion degrees checked against the structured subcode values (" << direct
           << " also by direct enumeration); this is a partial check by design\n";
    }
    return ok;
}

// --------------------------------------------------------------------------
// 5. cardinality-formula audit: every mismatch must be flagged, never silent
// --------------------------------------------------------------------------
bool criterion5(std::ostream& os) {
    bool ok = true;
    long long silent = 0, flagged = 0, agreed = 0;
    auto audit = [&](const CyclicCode& C) {
        RankInfo ri = rank_and_spanning_set(C);
        bool mismatch = ri.formula_log_cardinality != ri.exact_log_cardinality;
        if (mismatch && !ri.formula_discrepancy) ++silent;
        if (!mismatch && ri.formula_discrepancy) ++silent;  // would be a spurious flag
        if (mismatch)
            ++flagged;
        else
            ++agreed;
    };
    for (auto [p, n] : {std::pair{2, 2}, {2, 4}, {3, 3}}) {
        auto codes = enumerate_codes(p, n, 10'000'000);
        for (const auto& C : codes) audit(C);
    }
    std::mt19937 rng(20240817);
    for (auto [p, n] : {std::pair{3, 3}, {2, 4}, {3, 2}}) {
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<PolyR> gens;
            for (int i = 0; i <= iter % 3; ++i) gens.push_back(random_word(rng, p, n));
            audit(code_from_generators(gens, p, n));
        }
    }
    if (silent != 0) {
        ok = false;
        os << "    " << silent << " silent or spurious mismatches\n";
    }
    os << "    " << agreed << " codes where the closed-form size matches the exact dimension, " << flagged
       << " flagged discrepancies (every one surfaced)\n";
    return ok;
}

// --------------------------------------------------------------------------
// 6. canonicalization: uniqueness, degree bounds, conditions
// --------------------------------------------------------------------------
bool criterion6(std::ostream& os) {
    bool ok = true;
    std::mt19937 rng(613);
    const std::pair<int, int> spots[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
    int done = 0, failures = 0;
    while (done < 500) {
        auto [p, n] = spots[done % 5];
        std::vector<PolyR> gens;
        for (int i = 0; i <= done % 3; ++i) gens.push_back(random_word(rng, p, n));
        CyclicCode C = code_from_generators(gens, p, n);
        ++done;

        const CanonicalGens& G = C.gens;
        bool bounds = (G.p1.is_zero() || G.p1.deg() < G.t1) && (G.q1.is_zero() || G.q1.deg() < G.t2) &&
                      (G.r1.is_zero() || G.r1.deg() < G.t3) && (G.q2.is_zero() || G.q2.deg() < G.t2) &&
                      (G.r2.is_zero() || G.r2.deg() < G.t3) && (G.r3.is_zero() || G.r3.deg() < G.t3);
        bool conditions = check_conditions(G).empty();

        // a different generating set with the same echelon basis
        PolyR m = random_word(rng, p, n);
        std::vector<PolyR> gens2 = {polyr_add(G.A1(), polyr_mul_mod(m, G.A2())),
                                    polyr_add(G.A2(), polyr_mul_mod(m, G.A3())),
                                    polyr_add(G.A3(), polyr_mul_mod(m, G.A4())), G.A4()};
        for (const auto& g0 : gens) gens2.push_back(g0);
        CyclicCode C2 = code_from_generators(gens2, p, n);
        bool same_basis = (C2.basis == C.basis);
        bool same_gens = (C2.gens == C.gens);

        if (!bounds || !conditions || !same_basis || !same_gens) {
            ++failures;
            if (failures <= 5)
                os << "    (" << p << "," << n << "): bounds=" << bounds << " conditions=" << conditions
                   << " basis=" << same_basis << " tuple=" << same_gens << "\n";
        }
    }
    os << "    500 random generator sets across five (p,n) pairs, " << failures << " failures\n";
    if (failures) ok = false;
    return ok;
}

// --------------------------------------------------------------------------
// 7. gray map properties and 4-quasi-cyclicity
// --------------------------------------------------------------------------
bool criterion7(std::ostream& os) {
    bool ok = true;

    // bijectivity and isometry, exhaustive for p = 2, 3
    for (int p : {2, 3}) {
        std::set<std::array<int, 4>> images;
        int count = 0;
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d) {
                        RElem x(p, a, b, c, d);
                        auto g = gray_elem(x);
                        images.insert(g);
                        int hw = 0;
                        for (int v : g)
                            if (v) ++hw;
                        if (hw != lee_weight(x)) ok = false;
                        ++count;
                    }
        if (static_cast<int>(images.size()) != count) {
            ok = false;
            os << "    p=" << p << ": image not injective\n";
        }
    }
    os << "    bijectivity and isometry exhaustive for p in {2,3}\n";

    // shift commutation on 1000 random vectors per (p,n)
    std::mt19937 rng(777);
    for (auto [p, n] : {std::pair{2, 4}, {3, 3}}) {
        int bad = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            PolyR w = random_word(rng, p, n);
            if (gray_vec(vectorize(polyr_shift(w, 1)), p) != rotate_vec(gray_vec(vectorize(w), p), 4)) ++bad;
        }
        if (bad) {
            ok = false;
            os << "    (" << p << "," << n << "): " << bad << " commutation failures\n";
        }
    }
    os << "    shift commutation holds on 1000 random vectors per (p,n) in {(2,4),(3,3)}\n";

    // every image from the table replays and the three enumerations is
    // closed under the 4-fold shift
    int images = 0, bad_images = 0;
    auto check_code = [&](const CyclicCode& C) {
        LinearCodeZp L = gray_code(C, false);
        if (!is_quasi_cyclic(L, 4)) ++bad_images;
        ++images;
    };
    for (auto [p, n] : {std::pair{2, 2}, {2, 4}, {3, 3}})
        for (const auto& C : enumerate_codes(p, n, 10'000'000)) check_code(C);
    for (const auto& row : tables::table2()) {
        std::vector<PolyR> gens;
        for (const auto& t : row.generators) gens.push_back(parse_poly(t, 3, 3));
        check_code(code_from_generators(gens, 3, 3));
    }
    if (bad_images) {
        ok = false;
        os << "    " << bad_images << " images not 4-quasi-cyclic\n";
    }
    os << "    " << images << " gray images closed under the 4-fold shift\n";
    return ok;
}

// --------------------------------------------------------------------------
// 8. the singleton-style bound fails over this ring
// --------------------------------------------------------------------------
bool criterion8(std::ostream& os) {
    auto codes = enumerate_codes(3, 3, 10'000'000);
    int witnesses = 0;
    bool shown = false;
    for (const auto& C : codes) {
        if (C.k == 0) continue;
        RankInfo ri = rank_and_spanning_set(C);
        int d = distance_via_torsion(C);
        if (d > 3 - ri.rank + 1) {
            ++witnesses;
            if (!shown && ri.rank == 2 && d == 3) {
                shown = true;
                os << "    witness: tower (" << C.gens.t << "," << C.gens.t1 << "," << C.gens.t2 << ","
                   << C.gens.t3 << ") with rank 2 and d 3, so d > n - rank + 1 = 2\n";
            }
        }
    }
    os << "    " << witnesses << " codes at (3,3) violate d <= n - rank + 1\n";
    return witnesses > 0 && shown;
}

// --------------------------------------------------------------------------
// 9. division algorithm property on random pairs
// --------------------------------------------------------------------------
bool criterion9(std::ostream& os) {
    std::mt19937 rng(515);
    int done = 0, bad = 0;
    auto random_free = [&](int p, int maxdeg) {
        std::uniform_int_distribution<int> coeff(0, p - 1);
        std::uniform_int_distribution<int> deg(-1, maxdeg);
        int d = deg(rng);
        std::vector<RElem> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(p, coeff(rng), coeff(rng), coeff(rng), coeff(rng));
        return PolyR::from_coeffs(p, 0, std::move(c));
    };
    while (done < 10000) {
        auto [p, n] = (done % 2) ? std::pair{3, 5} : std::pair{2, 6};
        PolyR f = random_free(p, 2 * n);
        PolyR g = random_free(p, n);
        if (!polyr_is_regular(g)) continue;
        ++done;
        auto [q, r] = polyr_divmod(f, g);
        if (!(polyr_add(polyr_mul_free(g, q), r) == f) || !(polyr_degree(r) < polyr_degree(g))) ++bad;
    }
    os << "    10000 random (f, g regular) pairs over (3,5) and (2,6), " << bad << " failures\n";
    return bad == 0;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::ostream&);
};

const Criterion kCriteria[] = {
    {1, "classification replay (rank, distance per family)", criterion1},
    {2, "ternary gray image replay [12, k, d]", criterion2},
    {3, "distance equals torsion-code distance, exhaustive", criterion3},
    {4, "closed-form distance audit at n = p^l", criterion4},
    {5, "cardinality formula audit (no silent mismatch)", criterion5},
    {6, "canonicalization uniqueness and conditions", criterion6},
    {7, "gray isometry, commutation, 4-quasi-cyclicity", criterion7},
    {8, "singleton-style bound violation exists", criterion8},
    {9, "division algorithm on random pairs", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    int failures = 0;
    for (const auto& crit : kCriteria) {
        if (!wanted.empty() && !wanted.count(crit.id)) continue;
        std::ostringstream detail;
        bool pass = false;
        try {
            pass = crit.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.name << "\n"
                  << detail.str();
        if (!pass) ++failures;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
