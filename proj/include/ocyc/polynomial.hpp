#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"

namespace ocyc {

/// Polynomial with coefficients in F_{q^2} (F_q when every coefficient is a subfield
/// element), low degree first. The zero polynomial has no coefficients.
struct Polynomial {
    std::vector<FieldElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    FieldElement leading() const { return coeffs.empty() ? FieldElement::zero() : coeffs.back(); }
    FieldElement operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : FieldElement::zero(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    bool operator==(const Polynomial&) const = default;
};

namespace poly {

inline Polynomial monomial(const FieldContext& f, int degree) {
    Polynomial r;
    r.coeffs.assign(degree + 1, FieldElement::zero());
    r.coeffs[degree] = f.one();
    return r;
}

// x^n - 1
inline Polynomial x_pow_minus_one(const FieldContext& f, int n) {
    auto r = monomial(f, n);
    r.coeffs[0] = f.add(r.coeffs[0], f.neg(f.one()));
    r.trim();
    return r;
}

inline Polynomial add(const FieldContext& f, const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = f.add(a[i], b[i]);
    r.trim();
    return r;
}

inline Polynomial mul(const FieldContext& f, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, FieldElement::zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    r.trim();
    return r;
}

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivMod divmod(const FieldContext& f, const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    DivMod out;
    out.remainder = num;
    out.remainder.trim();
    const int dd = den.degree();
    if (out.remainder.degree() < dd) return out;
    out.quotient.coeffs.assign(out.remainder.degree() - dd + 1, FieldElement::zero());
    const auto lead_inv = f.inv(den.leading());
    for (int k = out.remainder.degree(); k >= dd; --k) {
        const auto t = f.mul(out.remainder.coeffs[k], lead_inv);
        if (t.is_zero()) continue;
        out.quotient.coeffs[k - dd] = t;
        for (int i = 0; i <= dd; ++i)
            out.remainder.coeffs[k - dd + i] = f.sub(out.remainder.coeffs[k - dd + i], f.mul(t, den.coeffs[i]));
    }
    out.quotient.trim();
    out.remainder.trim();
    return out;
}

inline FieldElement eval(const FieldContext& f, const Polynomial& a, FieldElement x) {
    FieldElement acc = FieldElement::zero();
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

inline bool over_subfield(const FieldContext& f, const Polynomial& a) {
    for (auto c : a.coeffs)
        if (!f.in_subfield(c)) return false;
    return true;
}

}  // namespace poly

/// h_a(x): the minimal polynomial over F_q of gamma^(-a), the product of (x - gamma^(-a q^j))
/// over the q-cyclotomic coset of -a.
inline Polynomial minimal_poly(const FieldContext& f, std::int64_t a) {
    Polynomial r;
    r.coeffs = {f.one()};
    for (auto e : f.cyclotomic_coset(-a)) {
        Polynomial lin;
        lin.coeffs = {f.neg(f.from_exponent(e)), f.one()};
        r = poly::mul(f, r, lin);
    }
    if (!poly::over_subfield(f, r)) throw std::logic_error("minimal polynomial left F_q");
    return r;
}

}  // namespace ocyc
