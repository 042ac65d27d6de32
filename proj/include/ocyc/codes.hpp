#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "charsums.hpp"
#include "error.hpp"
#include "field.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"

namespace ocyc {

using BigInt = boost::multiprecision::cpp_int;
using Codeword = std::vector<FieldElement>;

/// Upper bound on q^k for anything that enumerates a whole code.
inline constexpr std::int64_t kDefaultMaxCodewords = std::int64_t{1} << 24;

enum class CodeFamily { general, dim4, dim3 };

/// One irreducible factor h_a of the parity-check polynomial.
struct CheckFactor {
    std::int64_t exponent;  // a reduced mod q^2 - 1
    Polynomial h;
    int degree() const { return h.degree(); }
};

/// The cyclic code C_(a_1, ..., a_l) of length q^2 - 1 over F_q with parity-check
/// polynomial h_{a_1} ... h_{a_l}.
struct CodeSpec {
    std::shared_ptr<const FieldContext> field;
    std::vector<std::int64_t> check_exponents;
    std::vector<CheckFactor> factors;
    Polynomial parity_check;
    Polynomial generator;
    int n = 0;
    int k = 0;
    CodeFamily family = CodeFamily::general;

    std::int64_t q() const { return field->q(); }
    std::int64_t size_exponent() const { return k; }
};

inline CodeSpec build_code(std::shared_ptr<const FieldContext> field, const std::vector<std::int64_t>& check_exponents,
                           CodeFamily family = CodeFamily::general) {
    if (!field) throw ConfigError("code needs a field");
    if (check_exponents.empty()) throw ConfigError("code needs at least one check exponent");
    const auto& f = *field;
    if (family != CodeFamily::general && f.q() == 2) throw ConfigError("the code families need q != 2");

    CodeSpec spec;
    spec.field = field;
    spec.family = family;
    spec.check_exponents = check_exponents;
    spec.n = static_cast<int>(f.order());
    spec.parity_check.coeffs = {f.one()};
    std::set<std::int64_t> leaders;
    for (auto a : check_exponents) {
        if (!leaders.insert(f.coset_leader(a)).second)
            throw ConfigError("check exponents " + std::to_string(a) + " repeats a minimal polynomial");
        CheckFactor factor{mod(a, f.order()), minimal_poly(f, a)};
        spec.parity_check = poly::mul(f, spec.parity_check, factor.h);
        spec.k += factor.degree();
        spec.factors.push_back(std::move(factor));
    }
    const auto dm = poly::divmod(f, poly::x_pow_minus_one(f, spec.n), spec.parity_check);
    if (!dm.remainder.is_zero()) throw std::logic_error("parity-check polynomial does not divide x^n - 1");
    spec.generator = dm.quotient;
    return spec;
}

/// C_((q+1)e1, (q+1)e2, e3)
inline CodeSpec dim4_code(std::shared_ptr<const FieldContext> field, std::int64_t e1, std::int64_t e2, std::int64_t e3) {
    const auto q = field->q();
    return build_code(field, {(q + 1) * e1, (q + 1) * e2, e3}, CodeFamily::dim4);
}

/// C_((q+1)e2, e3)
inline CodeSpec dim3_code(std::shared_ptr<const FieldContext> field, std::int64_t e2, std::int64_t e3) {
    const auto q = field->q();
    return build_code(field, {(q + 1) * e2, e3}, CodeFamily::dim3);
}

inline int hamming_weight(const Codeword& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](FieldElement x) { return !x.is_zero(); }));
}

inline Codeword trace_codeword_dim4(const FieldContext& f, std::int64_t e1, std::int64_t e2, std::int64_t e3,
                                    FieldElement a, FieldElement b, FieldElement c) {
    if (!f.in_subfield(a) || !f.in_subfield(b)) throw std::domain_error("a and b must lie in F_q");
    const std::int64_t q = f.q(), n = f.order();
    Codeword w(n);
    for (std::int64_t i = 0; i < n; ++i) {
        auto v = f.add(f.mul(a, f.pow(f.gamma(), (q + 1) * i % n * mod(e1, n))),
                       f.mul(b, f.pow(f.gamma(), (q + 1) * i % n * mod(e2, n))));
        w[i] = f.add(v, f.trace_rel(f.mul(c, f.pow(f.gamma(), i * mod(e3, n)))));
    }
    return w;
}

inline Codeword trace_codeword_dim3(const FieldContext& f, std::int64_t e2, std::int64_t e3, FieldElement b,
                                    FieldElement c) {
    return trace_codeword_dim4(f, 0, e2, e3, FieldElement::zero(), b, c);
}

/// Number of codewords q^k, or BoundError if it exceeds max_codewords.
inline std::int64_t enumerable_size(const CodeSpec& spec, std::int64_t max_codewords = kDefaultMaxCodewords) {
    std::int64_t total = 1;
    for (int i = 0; i < spec.k; ++i) {
        total *= spec.q();
        if (total > max_codewords)
            throw BoundError("code has more than " + std::to_string(max_codewords) + " codewords");
    }
    return total;
}

/// Codeword number `index` in row-major message order. Each degree-1 factor h_a takes a
/// coefficient lambda in F_q (order: 0, delta^0, delta^1, ...) and contributes lambda gamma^(ia);
/// each degree-2 factor takes lambda in F_{q^2} (order: 0, gamma^0, gamma^1, ...) and
/// contributes Tr_rel(lambda gamma^(ia)). The first factor is the most significant digit.
inline Codeword trace_codeword(const CodeSpec& spec, std::int64_t index) {
    const auto& f = *spec.field;
    const std::int64_t n = spec.n;
    Codeword w(n, FieldElement::zero());
    for (auto it = spec.factors.rbegin(); it != spec.factors.rend(); ++it) {
        const std::int64_t radix = it->degree() == 1 ? f.q() : f.size();
        const std::int64_t digit = index % radix;
        index /= radix;
        if (digit == 0) continue;
        const auto lambda = it->degree() == 1 ? f.subfield_element(digit) : f.from_exponent(digit - 1);
        for (std::int64_t i = 0; i < n; ++i) {
            const auto term = f.mul(lambda, f.from_exponent(i * it->exponent % n));
            w[i] = f.add(w[i], it->degree() == 1 ? term : f.trace_rel(term));
        }
    }
    return w;
}

/// Codeword m(x) g(x) for the message polynomial whose coefficients are the base-q digits of
/// `index` (subfield symbol order, coefficient of x^0 least significant).
inline Codeword polynomial_codeword(const CodeSpec& spec, std::int64_t index) {
    const auto& f = *spec.field;
    Polynomial msg;
    for (int i = 0; i < spec.k; ++i, index /= f.q()) msg.coeffs.push_back(f.subfield_element(index % f.q()));
    msg.trim();
    const auto prod = poly::mul(f, msg, spec.generator);
    Codeword w(spec.n, FieldElement::zero());
    for (int i = 0; i <= prod.degree(); ++i) w[i] = prod.coeffs[i];
    return w;
}

using CodewordSet = std::vector<Codeword>;  // sorted, unique

inline CodewordSet code_as_set(const CodeSpec& spec, std::int64_t max_codewords = kDefaultMaxCodewords) {
    const auto total = enumerable_size(spec, max_codewords);
    CodewordSet out;
    out.reserve(total);
    for (std::int64_t i = 0; i < total; ++i) out.push_back(trace_codeword(spec, i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline CodewordSet polynomial_code_set(const CodeSpec& spec, std::int64_t max_codewords = kDefaultMaxCodewords) {
    const auto total = enumerable_size(spec, max_codewords);
    CodewordSet out;
    out.reserve(total);
    for (std::int64_t i = 0; i < total; ++i) out.push_back(polynomial_codeword(spec, i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The trace description and the generator-polynomial description give the same set.
inline bool equivalence_check(const CodeSpec& spec, std::int64_t max_codewords = kDefaultMaxCodewords) {
    const auto traces = code_as_set(spec, max_codewords);
    return static_cast<std::int64_t>(traces.size()) == enumerable_size(spec, max_codewords) &&
           traces == polynomial_code_set(spec, max_codewords);
}

struct WeightDistribution {
    std::int64_t q = 0;
    int n = 0;
    int k = 0;
    std::vector<BigInt> counts;  // counts[j] = A_j, size n + 1

    WeightDistribution() = default;
    WeightDistribution(std::int64_t q_, int n_, int k_) : q(q_), n(n_), k(k_), counts(n_ + 1, 0) {}

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
    std::vector<int> support() const {
        std::vector<int> out;
        for (int j = 0; j <= n; ++j)
            if (counts[j] != 0) out.push_back(j);
        return out;
    }
    /// "1 + 20z^4 + 32z^5 + ...", ascending weights.
    std::string to_string() const {
        std::string s;
        for (int j = 0; j <= n; ++j) {
            if (counts[j] == 0) continue;
            if (!s.empty()) s += " + ";
            s += counts[j].str();
            if (j > 0) s += "z^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }
    bool operator==(const WeightDistribution&) const = default;
};

using Composition = std::vector<int>;

/// Codeword counts by symbol composition (t_0, ..., t_{q-1}), where t_i counts positions
/// equal to u_i with u_0 = 0 and u_i = delta^(i-1).
struct CompleteWeightDistribution {
    std::int64_t q = 0;
    int n = 0;
    int k = 0;
    std::vector<std::int64_t> symbols;  // polynomial-basis encodings of u_0..u_{q-1}; may be empty
    std::map<Composition, BigInt> counts;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [c, v] : counts) t += v;
        return t;
    }

    WeightDistribution marginalize() const {
        WeightDistribution w(q, n, k);
        for (const auto& [t, v] : counts) w.counts[n - t[0]] += v;
        return w;
    }

    /// Polynomial in z0..z{q-1}; terms by increasing count, ties by increasing composition.
    std::string to_string() const {
        std::vector<std::pair<BigInt, Composition>> terms;
        for (const auto& [t, v] : counts) terms.emplace_back(v, t);
        std::sort(terms.begin(), terms.end());
        std::string s;
        for (const auto& [v, t] : terms) {
            if (!s.empty()) s += " + ";
            if (v != 1) s += v.str();
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == 0) continue;
                s += "z" + std::to_string(i);
                if (t[i] != 1) s += "^" + std::to_string(t[i]);
            }
        }
        return s;
    }

    bool operator==(const CompleteWeightDistribution& o) const {
        return q == o.q && n == o.n && k == o.k && counts == o.counts;
    }
};

inline std::vector<std::int64_t> symbol_table(const FieldContext& f) {
    std::vector<std::int64_t> out;
    for (auto x : f.subfield_elements()) out.push_back(f.encode(x));
    return out;
}

/// Parses "z0^15 + 3z1^5z2^5z3^5 + 15z0^3z1^4z2^4z3^4 + ..." into a distribution.
inline CompleteWeightDistribution parse_cwe_polynomial(std::int64_t q, int n, int k, const std::string& text) {
    CompleteWeightDistribution out;
    out.q = q;
    out.n = n;
    out.k = k;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::string {
        const auto start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    };
    while (true) {
        skip();
        if (pos >= text.size()) break;
        BigInt coef = 1;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) coef = BigInt(number());
        Composition t(q, 0);
        skip();
        while (pos < text.size() && text[pos] == 'z') {
            ++pos;
            const auto var = number();
            if (var.empty()) throw ConfigError("expected a variable index in CWE polynomial");
            const auto i = std::stoll(var);
            if (i < 0 || i >= q) throw ConfigError("CWE variable index out of range");
            int e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = std::stoi(number());
            }
            t[i] += e;
            skip();
        }
        int sum = 0;
        for (auto v : t) sum += v;
        if (sum != n) throw ConfigError("CWE monomial degree differs from the code length");
        out.counts[t] += coef;
        skip();
        if (pos < text.size()) {
            if (text[pos] != '+') throw ConfigError("unexpected character in CWE polynomial");
            ++pos;
        }
    }
    return out;
}

/// Exhaustive weight distribution over all q^k codewords.
inline WeightDistribution weight_distribution(const CodeSpec& spec, unsigned workers = 1,
                                              std::int64_t max_codewords = kDefaultMaxCodewords) {
    const auto total = enumerable_size(spec, max_codewords);
    std::vector<std::int64_t> init(spec.n + 1, 0);
    const auto tally = parallel_reduce(
        static_cast<std::size_t>(total), workers, init,
        [&](std::size_t i, std::vector<std::int64_t>& acc) {
            ++acc[hamming_weight(trace_codeword(spec, static_cast<std::int64_t>(i)))];
        },
        [](std::vector<std::int64_t>& into, std::vector<std::int64_t>&& from) {
            for (std::size_t j = 0; j < into.size(); ++j) into[j] += from[j];
        });
    WeightDistribution w(spec.q(), spec.n, spec.k);
    for (int j = 0; j <= spec.n; ++j) w.counts[j] = tally[j];
    return w;
}

inline Composition composition(const FieldContext& f, const Codeword& w) {
    Composition t(f.q(), 0);
    for (auto x : w) ++t[f.subfield_index(x)];
    return t;
}

/// Exhaustive complete weight distribution.
inline CompleteWeightDistribution complete_weight_distribution(const CodeSpec& spec, unsigned workers = 1,
                                                               std::int64_t max_codewords = kDefaultMaxCodewords) {
    const auto total = enumerable_size(spec, max_codewords);
    using Tally = std::map<Composition, std::int64_t>;
    const auto tally = parallel_reduce(
        static_cast<std::size_t>(total), workers, Tally{},
        [&](std::size_t i, Tally& acc) {
            ++acc[composition(*spec.field, trace_codeword(spec, static_cast<std::int64_t>(i)))];
        },
        [](Tally& into, Tally&& from) {
            for (auto& [t, v] : from) into[t] += v;
        });
    CompleteWeightDistribution out;
    out.q = spec.q();
    out.n = spec.n;
    out.k = spec.k;
    out.symbols = symbol_table(*spec.field);
    for (const auto& [t, v] : tally) out.counts[t] = v;
    return out;
}

/// The five-weight distribution of the dimension-4 family at q.
inline WeightDistribution expected_table2(std::int64_t q) {
    if (q < 3) throw ConfigError("the five-weight table needs q >= 3");
    const int n = static_cast<int>(q * q - 1);
    WeightDistribution w(q, n, 4);
    w.counts[0] = 1;
    w.counts[q * (q - 1) - 2] = (q - 1) * (q - 1) * (q * q - q - 1);
    w.counts[q * (q - 1) - 1] = 2 * (q * q - 1) * (q - 1);
    w.counts[q * (q - 1)] = q * q - 1;
    w.counts[q * q - 2] = (q * q - 1) * (q - 1);
    w.counts[q * q - 1] = 2 * (q - 1);
    return w;
}

/// The three-weight distribution of the dimension-3 family at q.
inline WeightDistribution expected_theorem3_weights(std::int64_t q) {
    if (q < 3) throw ConfigError("the three-weight enumerator needs q >= 3");
    const int n = static_cast<int>(q * q - 1);
    WeightDistribution w(q, n, 3);
    w.counts[0] = 1;
    w.counts[q * (q - 1) - 1] = (q * q - 1) * (q - 1);
    w.counts[q * (q - 1)] = q * q - 1;
    w.counts[q * q - 1] = q - 1;
    return w;
}

/// Closed-form complete weight enumerator of the dimension-3 family at q.
inline CompleteWeightDistribution expected_cwe_theorem3(std::int64_t q) {
    if (q < 3) throw ConfigError("the complete weight enumerator formula needs q >= 3");
    CompleteWeightDistribution out;
    out.q = q;
    out.n = static_cast<int>(q * q - 1);
    out.k = 3;
    const int qi = static_cast<int>(q);
    Composition t(q, 0);
    t[0] = out.n;
    out.counts[t] = 1;
    t.assign(q, qi + 1);
    t[0] = 0;
    out.counts[t] += q - 1;
    t.assign(q, qi);
    t[0] = qi - 1;
    out.counts[t] += q * q - 1;
    for (int j = 1; j < qi; ++j) {
        t.assign(q, qi + 1);
        t[0] = qi;
        t[j] = 1;
        out.counts[t] += q * q - 1;
    }
    return out;
}

namespace detail {

inline BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    BigInt c = 1;
    for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

}  // namespace detail

/// Dual distribution A_j^perp = |C|^-1 sum_i A_i K_j(i) with q-ary Krawtchouk polynomials
/// K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(n-i, j-s).
inline WeightDistribution macwilliams_dual(const WeightDistribution& w) {
    const int n = w.n;
    const BigInt size = w.total();
    BigInt qk = 1;
    for (int i = 0; i < w.k; ++i) qk *= w.q;
    if (size != qk) throw std::domain_error("weight distribution does not sum to q^k");

    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : BigInt(0));
    }
    std::vector<BigInt> qpow(n + 1, 1);
    for (int j = 1; j <= n; ++j) qpow[j] = qpow[j - 1] * (w.q - 1);

    WeightDistribution dual(w.q, n, n - w.k);
    const auto support = w.support();
    for (int j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (int i : support) {
            BigInt kraw = 0;
            for (int s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i) continue;
                BigInt term = qpow[j - s] * binom[i][s] * binom[n - i][j - s];
                if (s % 2) kraw -= term;
                else kraw += term;
            }
            acc += w.counts[i] * kraw;
        }
        if (acc % size != 0) throw std::domain_error("MacWilliams transform is not integral at weight " + std::to_string(j));
        dual.counts[j] = acc / size;
        if (dual.counts[j] < 0) throw std::domain_error("MacWilliams transform is negative at weight " + std::to_string(j));
    }
    return dual;
}

/// Smallest positive weight present.
inline int dual_min_distance(const WeightDistribution& w) {
    for (int j = 1; j <= w.n; ++j)
        if (w.counts[j] > 0) return j;
    throw std::domain_error("distribution has no nonzero codewords");
}

/// (q^2-3)(q-1)^2(q-2)^2(q+2)(q+1)/24, the number of weight-4 words in the dual.
inline BigInt pless_A4(std::int64_t q) {
    if (q < 3) throw ConfigError("pless_A4 needs q >= 3");
    BigInt num = BigInt(q * q - 3) * (q - 1) * (q - 1) * (q - 2) * (q - 2) * (q + 2) * (q + 1);
    if (num % 24 != 0) throw std::logic_error("A4 numerator not divisible by 24");
    return num / 24;
}

struct OneWeightResult {
    bool is_one_weight = false;
    int weight = 0;
};

inline OneWeightResult one_weight_check(const CodeSpec& spec, std::int64_t max_codewords = kDefaultMaxCodewords) {
    const auto support = weight_distribution(spec, 1, max_codewords).support();
    if (support.size() == 2) return {true, support[1]};
    return {false, support.size() > 1 ? support[1] : 0};
}

}  // namespace ocyc
