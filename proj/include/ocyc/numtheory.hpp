#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace ocyc {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Distinct prime divisors in increasing order.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (auto r : prime_divisors(n)) result = result / r * (r - 1);
    return result;
}

// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    while (exp--) r *= base;
    return r;
}

// Writes q = p^m with p prime; returns false if q is not a prime power.
inline bool split_prime_power(std::int64_t q, std::int64_t& p, int& m) {
    if (q < 2) return false;
    const auto divs = prime_divisors(q);
    if (divs.size() != 1) return false;
    p = divs.front();
    m = 0;
    for (std::int64_t t = q; t > 1; t /= p) ++m;
    return true;
}

}  // namespace ocyc
