#pragma once

#include <cstdint>
#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "numtheory.hpp"

namespace ocyc {

/// An element of F_{q^2} in log form: either zero or gamma^k with 0 <= k < q^2 - 1.
/// Subfield elements (F_q) are the zero element and the powers of delta = gamma^(q+1).
class FieldElement {
public:
    static constexpr std::uint32_t kZeroExp = 0xFFFFFFFFu;

    constexpr FieldElement() = default;

    static constexpr FieldElement zero() { return FieldElement{}; }
    // k must already be reduced modulo q^2 - 1.
    static constexpr FieldElement power(std::uint32_t k) {
        FieldElement e;
        e.exp_ = k;
        return e;
    }

    constexpr bool is_zero() const { return exp_ == kZeroExp; }
    constexpr std::uint32_t exponent() const { return exp_; }

    constexpr auto operator<=>(const FieldElement&) const = default;

private:
    std::uint32_t exp_ = kZeroExp;
};

struct FieldOptions {
    std::int64_t max_q = 16;
};

enum class TraceDomain { base, extension };  // F_q or F_{q^2}

/// The tower F_p < F_q < F_{q^2}, built once and immutable afterwards.
///
/// F_{q^2} is realized as F_p[x]/(f) with f the monic irreducible of degree 2m whose
/// coefficient encoding sum c_i p^i is smallest. gamma is the primitive element with the
/// smallest polynomial-basis encoding. Addition goes through a Zech table.
class FieldContext {
public:
    static FieldContext build(std::int64_t p, int m, FieldOptions opts = {});

    std::int64_t p() const { return p_; }
    int m() const { return m_; }
    std::int64_t q() const { return q_; }
    std::int64_t size() const { return q_ * q_; }
    /// Multiplicative order of gamma, q^2 - 1.
    std::uint32_t order() const { return n_; }
    int degree() const { return 2 * m_; }
    /// Modulus coefficients, low degree first, monic (size 2m + 1).
    const std::vector<int>& modulus() const { return modulus_; }
    std::int64_t gamma_encoding() const { return exp_to_enc_[1 % n_]; }
    std::uint32_t delta_exp() const { return static_cast<std::uint32_t>((q_ + 1) % n_); }
    const std::vector<std::int32_t>& zech_table() const { return zech_; }

    FieldElement one() const { return FieldElement::power(0); }
    FieldElement gamma() const { return from_exponent(1); }
    FieldElement delta() const { return from_exponent(q_ + 1); }
    FieldElement from_exponent(std::int64_t k) const {
        return FieldElement::power(static_cast<std::uint32_t>(mod(k, n_)));
    }
    /// delta^j, an element of F_q^*.
    FieldElement delta_power(std::int64_t j) const { return from_exponent(mod(j, q_ - 1) * (q_ + 1)); }

    FieldElement add(FieldElement x, FieldElement y) const {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        std::uint32_t a = x.exponent(), b = y.exponent();
        if (a > b) std::swap(a, b);
        const std::int32_t z = zech_[b - a];
        if (z < 0) return FieldElement::zero();
        return FieldElement::power(static_cast<std::uint32_t>((std::uint64_t{a} + z) % n_));
    }
    FieldElement neg(FieldElement x) const {
        if (x.is_zero() || p_ == 2) return x;
        return FieldElement::power(static_cast<std::uint32_t>((std::uint64_t{x.exponent()} + n_ / 2) % n_));
    }
    FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }
    FieldElement mul(FieldElement x, FieldElement y) const {
        if (x.is_zero() || y.is_zero()) return FieldElement::zero();
        return FieldElement::power(static_cast<std::uint32_t>((std::uint64_t{x.exponent()} + y.exponent()) % n_));
    }
    FieldElement inv(FieldElement x) const {
        if (x.is_zero()) throw std::domain_error("inverse of zero");
        return FieldElement::power(x.exponent() == 0 ? 0 : n_ - x.exponent());
    }
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    /// x^e for any integer e; 0^0 = 1, negative powers of zero throw.
    FieldElement pow(FieldElement x, std::int64_t e) const {
        if (x.is_zero()) {
            if (e == 0) return one();
            if (e < 0) throw std::domain_error("negative power of zero");
            return x;
        }
        const auto r = static_cast<std::uint64_t>(mod(e, n_));
        return FieldElement::power(static_cast<std::uint32_t>((x.exponent() * r) % n_));
    }

    bool in_subfield(FieldElement x) const { return x.is_zero() || x.exponent() % (q_ + 1) == 0; }

    /// Absolute trace to F_p as an integer in [0, p).
    int trace_abs(FieldElement x, TraceDomain from = TraceDomain::extension) const;
    /// Tr_{F_{q^2}/F_q}(x) = x + x^q.
    FieldElement trace_rel(FieldElement x) const { return add(x, pow(x, q_)); }
    /// N(x) = x^(q+1).
    FieldElement norm(FieldElement x) const { return pow(x, q_ + 1); }

    /// Polynomial-basis integer encoding sum c_i p^i; zero encodes as 0.
    std::int64_t encode(FieldElement x) const { return x.is_zero() ? 0 : exp_to_enc_[x.exponent()]; }
    FieldElement decode(std::int64_t enc) const;
    /// The element t * 1 of the prime field.
    FieldElement from_prime(std::int64_t t) const { return decode(mod(t, p_)); }

    /// Symbol index of an F_q element: zero -> 0, delta^j -> j + 1.
    std::int64_t subfield_index(FieldElement x) const;
    FieldElement subfield_element(std::int64_t index) const {
        if (index < 0 || index >= q_) throw ConfigError("subfield index out of range");
        return index == 0 ? FieldElement::zero() : delta_power(index - 1);
    }

    /// F_q listed as zero, delta^0, delta^1, ..., delta^(q-2).
    std::vector<FieldElement> subfield_elements() const;
    /// F_{q^2} listed as zero, gamma^0, ..., gamma^(q^2-2).
    std::vector<FieldElement> elements() const;

    /// q-cyclotomic coset of a modulo q^2 - 1, sorted.
    std::vector<std::int64_t> cyclotomic_coset(std::int64_t a) const;
    std::int64_t coset_leader(std::int64_t a) const { return cyclotomic_coset(a).front(); }

    bool operator==(const FieldContext&) const = default;

private:
    FieldContext() = default;

    std::int64_t p_ = 0;
    int m_ = 0;
    std::int64_t q_ = 0;
    std::uint32_t n_ = 0;
    std::vector<int> modulus_;
    std::vector<std::int64_t> exp_to_enc_;
    std::vector<std::uint32_t> enc_to_exp_;  // index 0 unused
    std::vector<std::int32_t> zech_;         // -1 where 1 + gamma^k = 0
    std::vector<std::int16_t> trace_ext_;
    std::vector<std::int16_t> trace_base_;    // -1 off the subfield
};

inline FieldContext build_field(std::int64_t p, int m, FieldOptions opts = {}) {
    return FieldContext::build(p, m, opts);
}

namespace detail {

// Dense arithmetic in F_p[x] on coefficient vectors (low degree first).
class PrimePolyRing {
public:
    PrimePolyRing(std::int64_t p, std::vector<int> modulus) : p_(p), f_(std::move(modulus)) {}

    int degree() const { return static_cast<int>(f_.size()) - 1; }

    std::vector<int> decode(std::int64_t enc) const {
        std::vector<int> c(degree(), 0);
        for (int i = 0; i < degree(); ++i, enc /= p_) c[i] = static_cast<int>(enc % p_);
        return c;
    }
    std::int64_t encode(const std::vector<int>& c) const {
        std::int64_t enc = 0;
        for (int i = degree() - 1; i >= 0; --i) enc = enc * p_ + c[i];
        return enc;
    }

    std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b) const {
        const int d = degree();
        std::vector<std::int64_t> prod(2 * d - 1, 0);
        for (int i = 0; i < d; ++i)
            if (a[i])
                for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::int64_t{a[i]} * b[j]) % p_;
        for (int k = 2 * d - 2; k >= d; --k) {
            const std::int64_t t = prod[k];
            if (!t) continue;
            for (int i = 0; i <= d; ++i) prod[k - d + i] = mod(prod[k - d + i] - t * f_[i], p_);
        }
        std::vector<int> out(d);
        for (int i = 0; i < d; ++i) out[i] = static_cast<int>(prod[i]);
        return out;
    }

    std::vector<int> powmod(std::vector<int> base, std::uint64_t e) const {
        std::vector<int> r(degree(), 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    }

private:
    std::int64_t p_;
    std::vector<int> f_;
};

// Remainder of f modulo monic g over F_p is zero.
inline bool divides_monic(const std::vector<int>& g, std::vector<std::int64_t> f, std::int64_t p) {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int k = static_cast<int>(f.size()) - 1; k >= dg; --k) {
        const std::int64_t t = f[k];
        if (!t) continue;
        for (int i = 0; i <= dg; ++i) f[k - dg + i] = mod(f[k - dg + i] - t * g[i], p);
    }
    for (int i = 0; i < dg; ++i)
        if (f[i]) return false;
    return true;
}

inline bool is_irreducible(const std::vector<int>& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return false;
    const std::vector<std::int64_t> wide(f.begin(), f.end());
    for (int k = 1; 2 * k <= d; ++k) {
        const std::int64_t count = ipow(p, static_cast<unsigned>(k));
        for (std::int64_t t = 0; t < count; ++t) {
            std::vector<int> g(k + 1, 0);
            std::int64_t enc = t;
            for (int i = 0; i < k; ++i, enc /= p) g[i] = static_cast<int>(enc % p);
            g[k] = 1;
            if (divides_monic(g, wide, p)) return false;
        }
    }
    return true;
}

}  // namespace detail

inline FieldContext FieldContext::build(std::int64_t p, int m, FieldOptions opts) {
    if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw ConfigError("extension degree must be positive");
    std::int64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > opts.max_q) throw BoundError("q = " + std::to_string(p) + "^" + std::to_string(m) +
                                             " exceeds the configured bound " + std::to_string(opts.max_q));
    }

    FieldContext ctx;
    ctx.p_ = p;
    ctx.m_ = m;
    ctx.q_ = q;
    const std::int64_t size = q * q;
    ctx.n_ = static_cast<std::uint32_t>(size - 1);
    const int d = 2 * m;

    for (std::int64_t t = 0; t < size && ctx.modulus_.empty(); ++t) {
        std::vector<int> f(d + 1, 0);
        std::int64_t enc = t;
        for (int i = 0; i < d; ++i, enc /= p) f[i] = static_cast<int>(enc % p);
        f[d] = 1;
        if (f[0] != 0 && detail::is_irreducible(f, p)) ctx.modulus_ = std::move(f);
    }
    if (ctx.modulus_.empty()) throw std::logic_error("no irreducible modulus found");

    const detail::PrimePolyRing ring(p, ctx.modulus_);
    const std::uint64_t n = ctx.n_;
    const auto prime_factors = prime_divisors(static_cast<std::int64_t>(n));
    std::vector<int> gamma;
    for (std::int64_t enc = 1; enc < size && gamma.empty(); ++enc) {
        auto cand = ring.decode(enc);
        bool primitive = ring.powmod(cand, n) == ring.decode(1);
        for (auto r : prime_factors) {
            if (!primitive) break;
            primitive = ring.powmod(cand, n / static_cast<std::uint64_t>(r)) != ring.decode(1);
        }
        if (primitive) gamma = std::move(cand);
    }
    if (gamma.empty()) throw std::logic_error("no primitive element found");

    ctx.exp_to_enc_.assign(n, 0);
    ctx.enc_to_exp_.assign(size, 0);
    std::vector<bool> seen(size, false);
    std::vector<int> cur = ring.decode(1);
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto enc = ring.encode(cur);
        if (enc == 0 || seen[enc]) throw std::logic_error("gamma is not primitive");
        seen[enc] = true;
        ctx.exp_to_enc_[k] = enc;
        ctx.enc_to_exp_[enc] = static_cast<std::uint32_t>(k);
        cur = ring.mulmod(cur, gamma);
    }

    ctx.zech_.assign(n, -1);
    for (std::uint64_t k = 0; k < n; ++k) {
        auto c = ring.decode(ctx.exp_to_enc_[k]);
        c[0] = static_cast<int>((c[0] + 1) % p);
        const auto enc = ring.encode(c);
        ctx.zech_[k] = enc == 0 ? -1 : static_cast<std::int32_t>(ctx.enc_to_exp_[enc]);
    }

    // Traces by summing Frobenius images p^j.
    auto frobenius_sum = [&](FieldElement x, int terms) {
        FieldElement acc = FieldElement::zero();
        FieldElement y = x;
        for (int j = 0; j < terms; ++j) {
            acc = ctx.add(acc, y);
            y = ctx.pow(y, p);
        }
        const auto v = ctx.encode(acc);
        if (v >= p) throw std::logic_error("trace left the prime field");
        return static_cast<std::int16_t>(v);
    };
    ctx.trace_ext_.assign(n, 0);
    ctx.trace_base_.assign(n, -1);
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto x = FieldElement::power(static_cast<std::uint32_t>(k));
        ctx.trace_ext_[k] = frobenius_sum(x, d);
        if (k % static_cast<std::uint64_t>(q + 1) == 0) ctx.trace_base_[k] = frobenius_sum(x, m);
    }
    return ctx;
}

inline FieldElement FieldContext::decode(std::int64_t enc) const {
    if (enc < 0 || enc >= size()) throw ConfigError("field encoding out of range");
    return enc == 0 ? FieldElement::zero() : FieldElement::power(enc_to_exp_[enc]);
}

inline int FieldContext::trace_abs(FieldElement x, TraceDomain from) const {
    if (x.is_zero()) return 0;
    if (from == TraceDomain::extension) return trace_ext_[x.exponent()];
    const int t = trace_base_[x.exponent()];
    if (t < 0) throw std::domain_error("element is not in the subfield");
    return t;
}

inline std::int64_t FieldContext::subfield_index(FieldElement x) const {
    if (x.is_zero()) return 0;
    if (!in_subfield(x)) throw std::domain_error("element is not in the subfield");
    return x.exponent() / (q_ + 1) + 1;
}

inline std::vector<FieldElement> FieldContext::subfield_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::int64_t i = 0; i < q_; ++i) out.push_back(subfield_element(i));
    return out;
}

inline std::vector<FieldElement> FieldContext::elements() const {
    std::vector<FieldElement> out;
    out.reserve(size());
    out.push_back(FieldElement::zero());
    for (std::uint32_t k = 0; k < n_; ++k) out.push_back(FieldElement::power(k));
    return out;
}

inline std::vector<std::int64_t> FieldContext::cyclotomic_coset(std::int64_t a) const {
    std::vector<std::int64_t> coset;
    std::int64_t x = mod(a, n_);
    do {
        coset.push_back(x);
        x = x * q_ % n_;
    } while (x != coset.front());
    std::sort(coset.begin(), coset.end());
    return coset;
}

}  // namespace ocyc
