#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "field.hpp"
#include "parallel.hpp"

namespace ocyc {

/// Canonical additive character chi(x) = zeta_p^Tr(x), on F_q (base) or F_{q^2} (extension).
inline CyclotomicInt chi(const FieldContext& f, FieldElement x, TraceDomain field = TraceDomain::base) {
    return CyclotomicInt::root(f.p(), f.trace_abs(x, field));
}

/// exp(2 pi i index / order), kept exact as a pair of integers.
struct RootOfUnity {
    std::int64_t index = 0;
    std::int64_t order = 1;

    std::complex<double> value() const {
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(index) / static_cast<double>(order));
    }
    friend RootOfUnity operator*(RootOfUnity a, RootOfUnity b) {
        if (a.order != b.order) throw std::invalid_argument("roots of different orders");
        return {mod(a.index + b.index, a.order), a.order};
    }
    bool operator==(const RootOfUnity&) const = default;
};

/// Multiplicative character psi_j(delta^l) = exp(2 pi i j l / (q - 1)) of F_q.
inline RootOfUnity psi(const FieldContext& f, std::int64_t j, FieldElement x) {
    if (x.is_zero()) throw std::domain_error("multiplicative character at zero");
    if (!f.in_subfield(x)) throw std::domain_error("element is not in F_q");
    const std::int64_t l = x.exponent() / (f.q() + 1);
    return {mod(j * l, f.q() - 1), f.q() - 1};
}

/// eta(delta^k) = (-1)^k for odd q.
inline int quadratic_character(const FieldContext& f, FieldElement x) {
    if (f.q() % 2 == 0) throw std::domain_error("quadratic character needs odd q");
    if (x.is_zero()) throw std::domain_error("quadratic character at zero");
    if (!f.in_subfield(x)) throw std::domain_error("element is not in F_q");
    return (x.exponent() / (f.q() + 1)) % 2 == 0 ? 1 : -1;
}

struct GaussSum {
    std::complex<double> value;
    // Present when psi takes values in {+1, -1}: the trivial and the quadratic character.
    std::optional<CyclotomicInt> exact;
};

/// G(psi_j, chi) = sum over c in F_q^* of psi_j(c) chi(c).
inline GaussSum gauss_sum(const FieldContext& f, std::int64_t j) {
    const std::int64_t q = f.q();
    const std::int64_t r = mod(j, q - 1);
    GaussSum g{0.0, std::nullopt};
    const bool real_valued = r == 0 || (2 * r) % (q - 1) == 0;
    std::vector<std::int64_t> counts(f.p(), 0);
    for (std::int64_t l = 0; l < q - 1; ++l) {
        const auto c = f.delta_power(l);
        const int tr = f.trace_abs(c, TraceDomain::base);
        const auto ps = psi(f, r, c);
        g.value += ps.value() * std::polar(1.0, 2.0 * std::numbers::pi * tr / static_cast<double>(f.p()));
        if (real_valued) counts[tr] += (ps.index == 0) ? 1 : -1;
    }
    if (real_valued) g.exact = CyclotomicInt::from_exponent_counts(f.p(), counts);
    return g;
}

/// Exponents and coefficients of the sums S, T and the zero count Z.
/// a and b must lie in F_q; c ranges over F_{q^2}.
struct CharacterSumParams {
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    std::int64_t e3 = 0;
    FieldElement a;
    FieldElement b;
    FieldElement c;
};

namespace detail {

inline void check_params(const FieldContext& f, const CharacterSumParams& s) {
    if (!f.in_subfield(s.a) || !f.in_subfield(s.b)) throw std::domain_error("a and b must lie in F_q");
}

// Adds the exponent histogram of S(ya, yb, yc) for one y into counts.
inline void s_sum_counts(const FieldContext& f, const CharacterSumParams& s, FieldElement y,
                         std::vector<std::int64_t>& counts) {
    const std::int64_t q = f.q(), n = f.order(), p = f.p();
    const auto ya = f.mul(y, s.a), yb = f.mul(y, s.b), yc = f.mul(y, s.c);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = f.add(f.mul(ya, f.from_exponent(i * (q + 1) % n * mod(s.e1, n))),
                             f.mul(yb, f.from_exponent(i * (q + 1) % n * mod(s.e2, n))));
        const auto v = f.mul(yc, f.from_exponent(i * mod(s.e3, n)));
        ++counts[(f.trace_abs(u, TraceDomain::base) + f.trace_abs(v, TraceDomain::extension)) % p];
    }
}

}  // namespace detail

/// S(a, b, c) = sum over x in F_{q^2}^* of chi(a x^((q+1)e1) + b x^((q+1)e2)) chi'(c x^e3).
inline CyclotomicInt s_sum(const FieldContext& f, const CharacterSumParams& s) {
    detail::check_params(f, s);
    std::vector<std::int64_t> counts(f.p(), 0);
    detail::s_sum_counts(f, s, f.one(), counts);
    return CyclotomicInt::from_exponent_counts(f.p(), counts);
}

/// -sum_{z, x in F_q^*} chi(z + a x^e1 + b x^e2 + z^-1 c^(q+1) x^e3); equals s_sum when
/// c != 0 and gcd(q + 1, e3) = 1.
inline CyclotomicInt s_sum_reduced(const FieldContext& f, const CharacterSumParams& s) {
    detail::check_params(f, s);
    const std::int64_t q = f.q();
    const auto cn = f.norm(s.c);
    std::vector<std::int64_t> counts(f.p(), 0);
    for (std::int64_t zi = 0; zi < q - 1; ++zi) {
        const auto z = f.delta_power(zi);
        const auto zc = f.mul(f.inv(z), cn);
        for (std::int64_t xi = 0; xi < q - 1; ++xi) {
            const auto x = f.delta_power(xi);
            auto arg = f.add(z, f.mul(s.a, f.pow(x, s.e1)));
            arg = f.add(arg, f.mul(s.b, f.pow(x, s.e2)));
            arg = f.add(arg, f.mul(zc, f.pow(x, s.e3)));
            ++counts[f.trace_abs(arg, TraceDomain::base)];
        }
    }
    return -CyclotomicInt::from_exponent_counts(f.p(), counts);
}

/// T(a, b, c) = sum over y in F_q^* of S(ya, yb, yc), evaluated term by term.
/// Throws std::logic_error if the exact value is not a rational integer.
inline std::int64_t t_sum(const FieldContext& f, const CharacterSumParams& s) {
    detail::check_params(f, s);
    std::vector<std::int64_t> counts(f.p(), 0);
    for (std::int64_t j = 0; j < f.q() - 1; ++j) detail::s_sum_counts(f, s, f.delta_power(j), counts);
    const auto total = CyclotomicInt::from_exponent_counts(f.p(), counts);
    if (!total.is_rational()) throw std::logic_error("T sum is not a rational integer: " + total.to_string());
    return total.rational_value();
}

/// Number of 0 <= i < q^2 - 1 with a delta^(i e1) + b delta^(i e2) + Tr_rel(c gamma^(i e3)) = 0.
inline std::int64_t z_count(const FieldContext& f, const CharacterSumParams& s) {
    detail::check_params(f, s);
    const std::int64_t q = f.q(), n = f.order();
    std::int64_t zeros = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        auto w = f.add(f.mul(s.a, f.from_exponent(i * (q + 1) % n * mod(s.e1, n))),
                       f.mul(s.b, f.from_exponent(i * (q + 1) % n * mod(s.e2, n))));
        w = f.add(w, f.trace_rel(f.mul(s.c, f.from_exponent(i * mod(s.e3, n)))));
        if (w.is_zero()) ++zeros;
    }
    return zeros;
}

/// gcd(q+1, e3) = 1, gcd(q-1, e2-e1) = 1 and e3 = e1 + e2 (mod q-1).
inline bool dim4_conditions(std::int64_t q, std::int64_t e1, std::int64_t e2, std::int64_t e3) {
    return gcd(q + 1, e3) == 1 && gcd(q - 1, e2 - e1) == 1 && mod(e3 - e1 - e2, q - 1) == 0;
}

using ValueDistribution = std::map<std::int64_t, std::int64_t>;

/// Exhaustive tally of z_count over (a, b, c) in F_q x F_q x F_{q^2}.
inline ValueDistribution value_distribution(const FieldContext& f, std::int64_t e1, std::int64_t e2, std::int64_t e3,
                                            unsigned workers = 1) {
    if (!dim4_conditions(f.q(), e1, e2, e3))
        throw InadmissibleError("exponents (" + std::to_string(e1) + "," + std::to_string(e2) + "," +
                                std::to_string(e3) + ") violate the gcd/congruence conditions");
    const auto sub = f.subfield_elements();
    const auto all = f.elements();
    return parallel_reduce(
        sub.size(), workers, ValueDistribution{},
        [&](std::size_t ai, ValueDistribution& acc) {
            for (auto b : sub)
                for (auto c : all) ++acc[z_count(f, {e1, e2, e3, sub[ai], b, c})];
        },
        [](ValueDistribution& into, ValueDistribution&& from) {
            for (auto& [v, n] : from) into[v] += n;
        });
}

/// The closed-form value distribution of Z (six values).
inline ValueDistribution expected_table1(std::int64_t q) {
    if (q < 3) throw ConfigError("value distribution needs q >= 3");
    return {{q * q - 1, 1},
            {0, 2 * (q - 1)},
            {q + 1, (q - 1) * (q - 1) * (q * q - q - 1)},
            {q - 1, q * q - 1},
            {q, 2 * (q * q - 1) * (q - 1)},
            {1, (q * q - 1) * (q - 1)}};
}

/// Which of the seven parameter cases (a, b, c) falls in, numbered 1..7.
inline int t_sum_case(const FieldContext& f, FieldElement a, FieldElement b, FieldElement c) {
    const int nonzero = static_cast<int>(!a.is_zero()) + static_cast<int>(!b.is_zero());
    if (c.is_zero()) return nonzero == 0 ? 1 : nonzero == 1 ? 2 : 3;
    if (nonzero == 0) return 4;
    if (nonzero == 1) return 5;
    return a == f.div(f.norm(c), b) ? 6 : 7;
}

/// Closed-form value of T in each case.
inline std::int64_t t_sum_case_value(std::int64_t q, int which) {
    switch (which) {
        case 1: return (q - 1) * (q * q - 1);
        case 2: return 1 - q * q;
        case 3: return q + 1;
        case 4: return 1 - q;
        case 5: return 1;
        case 6: return -q * q + q + 1;
        case 7: return q + 1;
    }
    throw std::invalid_argument("case must be in 1..7");
}

}  // namespace ocyc
