#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace ocyc {

/// Exact element of Z[zeta_p], stored as sum_{j=0}^{p-2} n_j zeta^j, i.e. reduced modulo
/// the p-th cyclotomic polynomial. For p = 2 this is Z with zeta = -1.
class CyclotomicInt {
public:
    explicit CyclotomicInt(std::int64_t p) : p_(p), c_(p > 2 ? p - 1 : 1, 0) {
        if (!is_prime(p)) throw std::invalid_argument("cyclotomic ring needs a prime order");
    }

    static CyclotomicInt integer(std::int64_t p, std::int64_t v) {
        CyclotomicInt r(p);
        r.c_[0] = v;
        return r;
    }

    /// zeta^j
    static CyclotomicInt root(std::int64_t p, std::int64_t j) {
        std::vector<std::int64_t> counts(p, 0);
        counts[mod(j, p)] = 1;
        return from_exponent_counts(p, counts);
    }

    /// sum_t counts[t] zeta^t for t in [0, p).
    static CyclotomicInt from_exponent_counts(std::int64_t p, std::span<const std::int64_t> counts) {
        if (static_cast<std::int64_t>(counts.size()) != p) throw std::invalid_argument("need p exponent counts");
        CyclotomicInt r(p);
        const std::int64_t top = counts[p - 1];
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = counts[j] - top;
        return r;
    }

    std::int64_t p() const { return p_; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_rational() const {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (c_[j] != 0) return false;
        return true;
    }
    std::int64_t rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic integer is not rational: " + to_string());
        return c_[0];
    }

    std::complex<double> to_complex() const {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < c_.size(); ++j)
            acc += static_cast<double>(c_[j]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / p_);
        return acc;
    }

    CyclotomicInt& operator+=(const CyclotomicInt& o) {
        check(o);
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    CyclotomicInt& operator-=(const CyclotomicInt& o) {
        check(o);
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
        return *this;
    }
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator-(CyclotomicInt a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.check(b);
        const std::int64_t p = a.p_;
        std::vector<std::int64_t> w(p, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) w[(i + j) % p] += a.c_[i] * b.c_[j];
        }
        return from_exponent_counts(p, w);
    }
    friend CyclotomicInt operator*(std::int64_t s, CyclotomicInt a) {
        for (auto& v : a.c_) v *= s;
        return a;
    }

    bool operator==(const CyclotomicInt&) const = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (!c_[j]) continue;
            if (!s.empty()) s += c_[j] < 0 ? " - " : " + ";
            s += std::to_string(s.empty() ? c_[j] : (c_[j] < 0 ? -c_[j] : c_[j]));
            if (j) s += "*z^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check(const CyclotomicInt& o) const {
        if (o.p_ != p_) throw std::invalid_argument("mixed cyclotomic rings");
    }

    std::int64_t p_;
    std::vector<std::int64_t> c_;
};

}  // namespace ocyc
