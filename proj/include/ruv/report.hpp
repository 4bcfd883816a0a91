#ifndef RUV_REPORT_HPP
#define RUV_REPORT_HPP

#include <string>

#include "json.hpp"
#include "ruv/gray.hpp"

namespace ruv {

/// Full analysis of one cyclic code, rendered as deterministic JSON (fixed
/// field order, no timestamps) or plain text.
struct AnalysisReport {
    int p = 0, n = 0;
    std::vector<std::string> input_generators;
    CanonicalGens gens;
    RankInfo rank;
    bool free_code = false;
    int distance = kInfiniteDistance;
    std::string distance_method;  // "closed-form" | "torsion" | "oracle" | "none"
    // When the closed form applies, the reported distance is still the
    // enumerated one; the formula value rides along with a mismatch flag.
    bool closed_form_applied = false;
    int closed_form_value = 0;
    bool closed_form_matches = true;
    LinearCodeZp gray;
    bool gray_quasi_cyclic_4 = false;
    SingletonCheck singleton;
    bool singleton_available = false;
    std::vector<int> condition_violations;
    bool coprime = false;
    bool coprime_form_available = false;
    std::string coprime_g1, coprime_g2;
};

enum class DistanceMethod { Auto, Oracle, ClosedForm };

inline AnalysisReport analyze_code(const CyclicCode& C, std::vector<std::string> inputs,
                                   DistanceMethod method = DistanceMethod::Auto,
                                   long long codeword_budget = kDefaultCodewordBudget) {
    AnalysisReport rep;
    rep.p = C.p;
    rep.n = C.n;
    rep.input_generators = std::move(inputs);
    rep.gens = C.gens;
    rep.rank = rank_and_spanning_set(C);
    rep.free_code = is_free(C).is_free;
    rep.condition_violations = check_conditions(C.gens);

    const bool zero_code = (C.k == 0);
    const bool p_divides_n = (C.n % C.p == 0);
    if (zero_code) {
        rep.distance = kInfiniteDistance;
        rep.distance_method = "none";
    } else {
        switch (method) {
            case DistanceMethod::Oracle:
                rep.distance = min_hamming_weight(C, codeword_budget);
                rep.distance_method = "oracle";
                break;
            case DistanceMethod::ClosedForm: {
                int l = 0;
                long long q = 1;
                while (q < C.n) {
                    q *= C.p;
                    ++l;
                }
                int enumerated = p_divides_n ? distance_via_torsion(C, codeword_budget)
                                             : min_hamming_weight(C, codeword_budget);
                rep.distance = enumerated;
                try {
                    if (q != C.n) throw HypothesisNotMet("length is not p^l");
                    rep.closed_form_value = distance_closed_form(C.gens, l);
                    rep.closed_form_applied = true;
                    rep.closed_form_matches = (rep.closed_form_value == enumerated);
                    rep.distance_method = "closed-form";
                } catch (const HypothesisNotMet&) {
                    rep.distance_method = p_divides_n ? "torsion" : "oracle";
                }
                break;
            }
            case DistanceMethod::Auto:
            default:
                if (p_divides_n) {
                    rep.distance = distance_via_torsion(C, codeword_budget);
                    rep.distance_method = "torsion";
                } else {
                    rep.distance = min_hamming_weight(C, codeword_budget);
                    rep.distance_method = "oracle";
                }
                break;
        }
        rep.singleton = singleton_check(C, codeword_budget);
        rep.singleton_available = true;
    }

    rep.gray = gray_code(C, !zero_code, codeword_budget);
    rep.gray_quasi_cyclic_4 = is_quasi_cyclic(rep.gray, 4);

    if (C.n % C.p != 0) {
        rep.coprime = true;
        try {
            CoprimeForm cf = coprime_form(C);
            rep.coprime_form_available = true;
            rep.coprime_g1 = polyr_to_string(cf.G1);
            rep.coprime_g2 = polyr_to_string(cf.G2);
        } catch (const CoprimeFormUnavailable&) {
            rep.coprime_form_available = false;
        }
    }
    return rep;
}

inline nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["generators"] = r.input_generators;
    j["canonical"] = {{"A1", polyr_to_string(r.gens.A1())},
                      {"A2", polyr_to_string(r.gens.A2())},
                      {"A3", polyr_to_string(r.gens.A3())},
                      {"A4", polyr_to_string(r.gens.A4())}};
    j["tower"] = {{"g", poly_to_string(r.gens.g)},
                  {"a1", poly_to_string(r.gens.a1)},
                  {"a2", poly_to_string(r.gens.a2)},
                  {"a3", poly_to_string(r.gens.a3)}};
    j["degrees"] = {{"t", r.gens.t}, {"t1", r.gens.t1}, {"t2", r.gens.t2}, {"t3", r.gens.t3}, {"t_min", r.gens.t_min}};
    j["rank"] = r.rank.rank;
    j["free_rank"] = r.rank.free_rank;
    j["is_free"] = r.free_code;
    j["log_p_cardinality"] = r.rank.exact_log_cardinality;
    j["cardinality_formula"] = {{"log_p", r.rank.formula_log_cardinality},
                                {"matches_exact", !r.rank.formula_discrepancy}};
    if (r.distance == kInfiniteDistance) {
        j["distance"] = {{"value", nullptr}, {"method", r.distance_method}};
    } else {
        nlohmann::ordered_json d;
        d["value"] = r.distance;
        d["method"] = r.distance_method;
        if (r.closed_form_applied) {
            d["closed_form_value"] = r.closed_form_value;
            d["closed_form_matches"] = r.closed_form_matches;
        }
        j["distance"] = d;
    }
    nlohmann::ordered_json gray;
    gray["N"] = r.gray.N;
    gray["k"] = r.gray.k;
    if (r.gray.d)
        gray["d"] = *r.gray.d;
    else
        gray["d"] = nullptr;
    gray["quasi_cyclic_4"] = r.gray_quasi_cyclic_4;
    j["gray"] = gray;
    if (r.singleton_available)
        j["singleton"] = {{"holds", r.singleton.holds}, {"slack", r.singleton.slack}};
    else
        j["singleton"] = nullptr;
    j["condition_violations"] = r.condition_violations;
    if (r.coprime && r.coprime_form_available)
        j["coprime_form"] = {{"G1", r.coprime_g1}, {"G2", r.coprime_g2}};
    else if (r.coprime)
        j["coprime_form"] = {{"available", false}};
    else
        j["coprime_form"] = nullptr;
    return j;
}

/// Compact JSON record for enumeration streams.
inline nlohmann::ordered_json code_record(const CyclicCode& C, const RankInfo& ri, int d) {
    nlohmann::ordered_json j;
    j["p"] = C.p;
    j["n"] = C.n;
    std::vector<std::string> gens;
    for (const PolyR& A : {C.gens.A1(), C.gens.A2(), C.gens.A3(), C.gens.A4()})
        if (!A.is_zero()) gens.push_back(polyr_to_string(A));
    j["generators"] = gens;
    j["tower"] = {{"g", poly_to_string(C.gens.g)},
                  {"a1", poly_to_string(C.gens.a1)},
                  {"a2", poly_to_string(C.gens.a2)},
                  {"a3", poly_to_string(C.gens.a3)}};
    j["rank"] = ri.rank;
    j["free_rank"] = ri.free_rank;
    j["log_p_cardinality"] = C.k;
    j["conditions_ok"] = check_conditions(C.gens).empty();
    if (d == kInfiniteDistance)
        j["d"] = nullptr;
    else
        j["d"] = d;
    return j;
}

inline std::string report_to_text(const AnalysisReport& r) {
    std::string s;
    auto line = [&](const std::string& k, const std::string& v) { s += k + ": " + v + "\n"; };
    line("p", std::to_string(r.p));
    line("n", std::to_string(r.n));
    line("A1", polyr_to_string(r.gens.A1()));
    line("A2", polyr_to_string(r.gens.A2()));
    line("A3", polyr_to_string(r.gens.A3()));
    line("A4", polyr_to_string(r.gens.A4()));
    line("tower", "g=" + poly_to_string(r.gens.g) + ", a1=" + poly_to_string(r.gens.a1) +
                      ", a2=" + poly_to_string(r.gens.a2) + ", a3=" + poly_to_string(r.gens.a3));
    line("rank", std::to_string(r.rank.rank));
    line("free_rank", std::to_string(r.rank.free_rank));
    line("is_free", r.free_code ? "yes" : "no");
    line("log_p |C|", std::to_string(r.rank.exact_log_cardinality));
    line("formula log_p |C|", std::to_string(r.rank.formula_log_cardinality) +
                                  (r.rank.formula_discrepancy ? "  ** disagrees with exact dimension **" : ""));
    if (r.distance == kInfiniteDistance)
        line("distance", "infinite (zero code)");
    else
        line("distance", std::to_string(r.distance) + " (" + r.distance_method + ")");
    line("gray image", "[" + std::to_string(r.gray.N) + ", " + std::to_string(r.gray.k) + ", " +
                           (r.gray.d ? std::to_string(*r.gray.d) : std::string("-")) + "]");
    line("gray 4-quasi-cyclic", r.gray_quasi_cyclic_4 ? "yes" : "no");
    if (r.singleton_available)
        line("singleton bound", std::string(r.singleton.holds ? "holds" : "fails") +
                                    " (slack " + std::to_string(r.singleton.slack) + ")");
    return s;
}

}  // namespace ruv

#endif
