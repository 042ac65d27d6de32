#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "charsums.hpp"
#include "codes.hpp"
#include "error.hpp"
#include "field.hpp"

namespace ocyc {

/// sum_{i<k} ceil(d / q^i)
inline std::int64_t griesmer_bound(std::int64_t q, std::int64_t k, std::int64_t d) {
    if (q < 2 || k < 1 || d < 1) throw ConfigError("griesmer_bound needs q >= 2, k >= 1, d >= 1");
    std::int64_t sum = 0, qi = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi <= d) qi *= q;  // once q^i > d every term is 1
    }
    return sum;
}

inline bool is_griesmer_optimal(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q) {
    return n == griesmer_bound(q, k, d);
}

/// gcd(e3, q^2-1) = 1 and e3 = e2 (mod q-1).
inline bool dim3_conditions(std::int64_t q, std::int64_t e2, std::int64_t e3) {
    return gcd(e3, q * q - 1) == 1 && mod(e3 - e2, q - 1) == 0;
}

using ExponentTriple = std::array<std::int64_t, 3>;
using ExponentPair = std::array<std::int64_t, 2>;

/// (e1, e2, e3) with e1, e2 in [0, q-1) and e3 in [0, q^2-1) satisfying the dimension-4
/// conditions, with pairwise distinct minimal polynomials.
inline std::vector<ExponentTriple> admissible_triples(const FieldContext& f) {
    const std::int64_t q = f.q();
    if (q < 3) throw ConfigError("the dimension-4 family needs q >= 3");
    std::vector<ExponentTriple> out;
    for (std::int64_t e1 = 0; e1 < q - 1; ++e1)
        for (std::int64_t e2 = 0; e2 < q - 1; ++e2)
            for (std::int64_t e3 = 0; e3 < q * q - 1; ++e3) {
                if (!dim4_conditions(q, e1, e2, e3)) continue;
                const std::set<std::int64_t> leaders{f.coset_leader((q + 1) * e1), f.coset_leader((q + 1) * e2),
                                                     f.coset_leader(e3)};
                if (leaders.size() == 3) out.push_back({e1, e2, e3});
            }
    return out;
}

inline std::vector<ExponentPair> admissible_pairs(const FieldContext& f) {
    const std::int64_t q = f.q();
    if (q < 3) throw ConfigError("the dimension-3 family needs q >= 3");
    std::vector<ExponentPair> out;
    for (std::int64_t e2 = 0; e2 < q - 1; ++e2)
        for (std::int64_t e3 = 0; e3 < q * q - 1; ++e3)
            if (dim3_conditions(q, e2, e3) && f.coset_leader((q + 1) * e2) != f.coset_leader(e3))
                out.push_back({e2, e3});
    return out;
}

/// Sorted coset leaders of the check exponents; two codes coincide iff these agree.
inline std::vector<std::int64_t> code_signature(const FieldContext& f, const std::vector<std::int64_t>& check_exponents) {
    std::vector<std::int64_t> sig;
    for (auto a : check_exponents) sig.push_back(f.coset_leader(a));
    std::sort(sig.begin(), sig.end());
    return sig;
}

struct FamilyCount {
    std::int64_t q = 0;
    std::string family;  // "dim4" or "dim3"
    std::size_t admissible_tuples = 0;
    std::int64_t distinct_codes = 0;
    std::int64_t formula = 0;
    // One entry per distinct code: the first admissible tuple found and its coset signature.
    std::vector<std::vector<std::int64_t>> representatives;
    std::vector<std::vector<std::int64_t>> signatures;
};

namespace detail {

inline void add_distinct(FamilyCount& out, std::set<std::vector<std::int64_t>>& seen, std::vector<std::int64_t> tuple,
                         std::vector<std::int64_t> signature) {
    if (!seen.insert(signature).second) return;
    out.representatives.push_back(std::move(tuple));
    out.signatures.push_back(std::move(signature));
    ++out.distinct_codes;
}

}  // namespace detail

inline FamilyCount count_distinct_dim4(const FieldContext& f) {
    const std::int64_t q = f.q();
    const auto triples = admissible_triples(f);
    FamilyCount out{q, "dim4", triples.size(), 0, (q - 1) * euler_phi(q * q - 1) / 4};
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& [e1, e2, e3] : triples)
        detail::add_distinct(out, seen, {e1, e2, e3}, code_signature(f, {(q + 1) * e1, (q + 1) * e2, e3}));
    return out;
}

inline FamilyCount count_distinct_dim3(const FieldContext& f) {
    const std::int64_t q = f.q();
    const auto pairs = admissible_pairs(f);
    FamilyCount out{q, "dim3", pairs.size(), 0, euler_phi(q * q - 1) / 2};
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& [e2, e3] : pairs) detail::add_distinct(out, seen, {e2, e3}, code_signature(f, {(q + 1) * e2, e3}));
    return out;
}

/// True when the check exponents can be read as ((q+1)e1, (q+1)e2, e3), in some order and up
/// to cyclotomic cosets, with (e1, e2, e3) meeting the dimension-4 conditions.
inline bool matches_dim4_family(const FieldContext& f, const std::vector<std::int64_t>& check_exponents) {
    const std::int64_t q = f.q();
    if (q < 3 || check_exponents.size() != 3) return false;
    const auto target = code_signature(f, check_exponents);
    for (std::int64_t e1 = 0; e1 < q - 1; ++e1)
        for (std::int64_t e2 = 0; e2 < q - 1; ++e2)
            for (std::int64_t e3 = 0; e3 < q * q - 1; ++e3)
                if (dim4_conditions(q, e1, e2, e3) &&
                    code_signature(f, {(q + 1) * e1, (q + 1) * e2, e3}) == target)
                    return true;
    return false;
}

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::skipped: return "SKIPPED";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string computed;
};

struct VerificationReport {
    std::string claim;  // "theorem2", "theorem3", "counterexample_c25"
    std::int64_t q = 0;
    std::vector<std::int64_t> params;
    Status status = Status::skipped;
    std::string reason;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;  // informational, never affects status
    double elapsed_ms = 0.0;

    void check(std::string name, bool ok, std::string expected, std::string computed) {
        checks.push_back({std::move(name), ok, std::move(expected), std::move(computed)});
    }
    void finish() {
        status = Status::pass;
        for (const auto& c : checks)
            if (!c.passed) status = Status::fail;
    }
};

namespace detail {

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Structural checks shared by both verifiers.
inline void check_structure(VerificationReport& r, const CodeSpec& spec, const WeightDistribution& w, unsigned workers) {
    const auto marginal = complete_weight_distribution(spec, workers).marginalize();
    r.check("cwe_marginalizes_to_weights", marginal == w, w.to_string(), marginal.to_string());
    const bool same = equivalence_check(spec);
    r.check("delsarte_equivalence", same, "trace set == polynomial set", same ? "equal" : "different");
    const auto back = macwilliams_dual(macwilliams_dual(w));
    r.check("macwilliams_involution", back == w, w.to_string(), back.to_string());
}

}  // namespace detail

inline VerificationReport verify_theorem2(std::shared_ptr<const FieldContext> field, std::int64_t e1, std::int64_t e2,
                                          std::int64_t e3, unsigned workers = 1) {
    const detail::Stopwatch clock;
    const auto& f = *field;
    const std::int64_t q = f.q();
    VerificationReport r{"theorem2", q, {e1, e2, e3}};
    if (q < 3 || !dim4_conditions(q, e1, e2, e3)) {
        r.status = Status::skipped;
        r.reason = "exponents fail gcd(q+1,e3)=1, gcd(q-1,e2-e1)=1 or e3=e1+e2 (mod q-1)";
        return r;
    }
    const auto spec = dim4_code(field, e1, e2, e3);
    const int n = spec.n;

    // The three one-weight constituents.
    const auto sub3 = build_code(field, {e3});
    const auto ow3 = one_weight_check(sub3);
    r.check("h_e3_one_weight_dim2", ow3.is_one_weight && sub3.k == 2 && ow3.weight == q * (q - 1),
            "dim 2, weight " + std::to_string(q * (q - 1)),
            "dim " + std::to_string(sub3.k) + ", weight " + std::to_string(ow3.weight) +
                (ow3.is_one_weight ? "" : " (not one-weight)"));
    for (auto e : {e1, e2}) {
        const auto sub = build_code(field, {(q + 1) * e});
        const auto ow = one_weight_check(sub);
        r.check("h_" + std::to_string((q + 1) * e) + "_one_weight_dim1", ow.is_one_weight && sub.k == 1, "dim 1, one weight",
                "dim " + std::to_string(sub.k) + (ow.is_one_weight ? ", one weight" : ", several weights"));
    }

    // The code itself.
    const auto w = weight_distribution(spec, workers);
    const auto expected = expected_table2(q);
    r.check("weight_distribution", w == expected, expected.to_string(), w.to_string());
    const int d = w.support().size() > 1 ? w.support()[1] : 0;
    r.check("griesmer_optimal", d > 0 && is_griesmer_optimal(n, spec.k, d, q),
            "[" + std::to_string(n) + ",4," + std::to_string(q * (q - 1) - 2) + "], n = bound",
            "[" + std::to_string(n) + "," + std::to_string(spec.k) + "," + std::to_string(d) + "], bound " +
                (d > 0 ? std::to_string(griesmer_bound(q, spec.k, d)) : "n/a"));

    const auto dual = macwilliams_dual(w);
    const bool low_zero = dual.counts[1] == 0 && dual.counts[2] == 0 && dual.counts[3] == 0;
    r.check("dual_A1_A2_A3_zero", low_zero, "0 0 0",
            dual.counts[1].str() + " " + dual.counts[2].str() + " " + dual.counts[3].str());
    r.check("dual_A4_pless", dual.counts[4] == pless_A4(q), pless_A4(q).str(), dual.counts[4].str());
    r.check("dual_parameters", dual.k == n - 4 && dual_min_distance(dual) == 4,
            "[" + std::to_string(n) + "," + std::to_string(n - 4) + ",4]",
            "[" + std::to_string(n) + "," + std::to_string(dual.k) + "," + std::to_string(dual_min_distance(dual)) + "]");
    detail::check_structure(r, spec, w, workers);
    r.finish();
    r.elapsed_ms = clock.ms();
    return r;
}

inline VerificationReport verify_theorem3(std::shared_ptr<const FieldContext> field, std::int64_t e2, std::int64_t e3,
                                          unsigned workers = 1) {
    const detail::Stopwatch clock;
    const auto& f = *field;
    const std::int64_t q = f.q();
    VerificationReport r{"theorem3", q, {e2, e3}};
    if (q < 3 || !dim3_conditions(q, e2, e3)) {
        r.status = Status::skipped;
        r.reason = "exponents fail gcd(e3,q^2-1)=1 or e3=e2 (mod q-1)";
        return r;
    }
    const auto spec = dim3_code(field, e2, e3);
    const auto w = weight_distribution(spec, workers);
    const auto expected = expected_theorem3_weights(q);
    r.check("weight_distribution", w == expected, expected.to_string(), w.to_string());
    auto cwe = complete_weight_distribution(spec, workers);
    const auto cwe_expected = expected_cwe_theorem3(q);
    r.check("complete_weight_distribution", cwe == cwe_expected, cwe_expected.to_string(), cwe.to_string());
    const int d = w.support().size() > 1 ? w.support()[1] : 0;
    r.check("griesmer_optimal", d > 0 && is_griesmer_optimal(spec.n, spec.k, d, q),
            "[" + std::to_string(spec.n) + ",3," + std::to_string(q * (q - 1) - 1) + "], n = bound",
            "[" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "," + std::to_string(d) + "], bound " +
                (d > 0 ? std::to_string(griesmer_bound(q, spec.k, d)) : "n/a"));
    r.check("implied_gcd_conditions", gcd(q - 1, 2 * e2 - e3) == 1 && gcd(q + 1, e3) == 1,
            "gcd(q-1,2e2-e3)=1, gcd(q+1,e3)=1",
            "gcd(q-1,2e2-e3)=" + std::to_string(gcd(q - 1, 2 * e2 - e3)) + ", gcd(q+1,e3)=" +
                std::to_string(gcd(q + 1, e3)));
    detail::check_structure(r, spec, w, workers);
    r.finish();
    r.elapsed_ms = clock.ms();
    return r;
}

namespace detail {

inline FieldElement inner_product(const FieldContext& f, const Codeword& x, const Codeword& y) {
    FieldElement acc = FieldElement::zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
    return acc;
}

// All vectors of F_q^n orthogonal to every codeword; brute force over q^n vectors.
inline CodewordSet brute_force_dual(const FieldContext& f, const CodewordSet& code, int n) {
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= f.q();
        if (total > kDefaultMaxCodewords) throw BoundError("ambient space too large for a brute-force dual");
    }
    CodewordSet out;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Codeword v(n);
        std::int64_t t = idx;
        for (int i = 0; i < n; ++i, t /= f.q()) v[i] = f.subfield_element(t % f.q());
        const bool orthogonal = std::all_of(code.begin(), code.end(),
                                            [&](const Codeword& c) { return inner_product(f, v, c).is_zero(); });
        if (orthogonal) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Image of a code under c_i -> c_{-i mod n}; maps the code with nonzeros Z to the one with nonzeros Z^-1.
inline CodewordSet reverse_coordinates(const CodewordSet& code) {
    CodewordSet out;
    out.reserve(code.size());
    for (const auto& w : code) {
        const std::size_t n = w.size();
        Codeword r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = w[(n - i) % n];
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The cyclic code C_(2,5) over F_3: a five-weight [8,4,4] code outside the dimension-4 family.
inline VerificationReport counterexample_c25() {
    const detail::Stopwatch clock;
    auto field = std::make_shared<const FieldContext>(build_field(3, 1));
    const auto& f = *field;
    VerificationReport r{"counterexample_c25", 3, {2, 5}};
    const auto spec = build_code(field, {2, 5});
    const auto w = weight_distribution(spec);
    const std::string final_enumerator = "1 + 20z^4 + 32z^5 + 8z^6 + 16z^7 + 4z^8";
    r.check("weight_enumerator", w.to_string() == final_enumerator, final_enumerator, w.to_string());
    const int d = w.support()[1];
    r.check("parameters_8_4_4", spec.n == 8 && spec.k == 4 && d == 4, "[8,4,4]",
            "[" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "," + std::to_string(d) + "]");
    r.check("griesmer_optimal", is_griesmer_optimal(spec.n, spec.k, d, 3), "n = 8",
            "bound " + std::to_string(griesmer_bound(3, spec.k, d)));
    r.check("check_polynomial_degrees", spec.factors[0].degree() == 2 && spec.factors[1].degree() == 2, "2 2",
            std::to_string(spec.factors[0].degree()) + " " + std::to_string(spec.factors[1].degree()));
    r.check("outside_dim4_family", !matches_dim4_family(f, spec.check_exponents), "not admissible",
            matches_dim4_family(f, spec.check_exponents) ? "admissible" : "not admissible");
    // Under h_a = minimal polynomial of gamma^(-a), the dual of C_(0,4,1) is C_(1,2) and
    // C_(2,5) is its image under the coordinate reversal i -> -i mod n.
    const auto primal = dim4_code(field, 0, 1, 1);
    const auto dual_set = detail::brute_force_dual(f, code_as_set(primal), primal.n);
    const auto c25_set = code_as_set(spec);
    const auto reversed = reverse_coordinates(c25_set);
    r.check("dual_of_C_0_4_1_up_to_reversal", dual_set == reversed, "dual(C_(0,4,1)) = reverse(C_(2,5))",
            dual_set == reversed ? "equal" : "different");
    r.notes.push_back(std::string("literal set equality C_(2,5) = dual(C_(0,4,1)): ") +
                      (dual_set == c25_set ? "holds" : "does not hold"));
    r.notes.push_back(std::string("literal dual equals C_(1,2): ") +
                      (dual_set == code_as_set(build_code(field, {1, 2})) ? "yes" : "no"));
    r.finish();
    r.elapsed_ms = clock.ms();
    return r;
}

struct CensusClass {
    CompleteWeightDistribution cwe;
    std::vector<std::vector<std::int64_t>> codes;  // check exponents (a, b)
};

struct CensusResult {
    std::int64_t q = 0;
    std::string search_space;
    std::size_t examined = 0;
    std::size_t qualifying = 0;
    std::vector<CensusClass> classes;
    std::int64_t conjectured = 0;  // q - 1, reported only
};

/// Dimension-3 cyclic codes with parity check h_a h_b (deg h_a = 1, deg h_b = 2) whose weight
/// enumerator is the optimal three-weight one, grouped by complete weight enumerator.
inline CensusResult cwe_census(std::shared_ptr<const FieldContext> field, unsigned workers = 1) {
    const auto& f = *field;
    const std::int64_t q = f.q();
    if (q < 3 || q > 5) throw ConfigError("cwe_census supports q in {3, 4, 5}");
    CensusResult out;
    out.q = q;
    out.search_space = "parity check h_a*h_b with deg h_a = 1, deg h_b = 2, length q^2-1";
    out.conjectured = q - 1;
    const auto expected = expected_theorem3_weights(q);
    std::vector<std::int64_t> deg2;
    for (std::int64_t b = 0; b < q * q - 1; ++b)
        if (f.coset_leader(b) == b && f.cyclotomic_coset(b).size() == 2) deg2.push_back(b);
    std::map<std::map<Composition, BigInt>, std::size_t> index;
    for (std::int64_t j = 0; j < q - 1; ++j) {
        for (auto b : deg2) {
            const std::int64_t a = (q + 1) * j;
            const auto spec = build_code(field, {a, b});
            ++out.examined;
            const auto w = weight_distribution(spec, workers);
            if (w != expected || !is_griesmer_optimal(spec.n, spec.k, w.support()[1], q)) continue;
            ++out.qualifying;
            auto cwe = complete_weight_distribution(spec, workers);
            auto [it, fresh] = index.emplace(cwe.counts, out.classes.size());
            if (fresh) out.classes.push_back({std::move(cwe), {}});
            out.classes[it->second].codes.push_back({a, b});
        }
    }
    return out;
}

}  // namespace ocyc
