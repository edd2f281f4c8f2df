#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace torsion {

using u64 = std::uint64_t;

inline u64 checked_add(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer sum out of range");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer product out of range");
    return r;
}

inline u64 checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// (prime, exponent) pairs in increasing prime order; empty for n = 1.
struct Factorization {
    std::vector<std::pair<u64, u64>> pairs;

    u64 value() const {
        u64 v = 1;
        for (const auto& [p, e] : pairs) v = checked_mul(v, checked_pow(p, e));
        return v;
    }
};

inline Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        u64 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.pairs.emplace_back(p, e);
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

// Number of divisors.
inline u64 tau(u64 n) {
    u64 t = 1;
    for (const auto& [p, e] : factorize(n).pairs) t = checked_mul(t, e + 1);
    return t;
}

// Sum of divisors.
inline u64 sigma(u64 n) {
    u64 s = 1;
    for (const auto& [p, e] : factorize(n).pairs) {
        u64 term = 1, pk = 1;
        for (u64 i = 0; i < e; ++i) {
            pk = checked_mul(pk, p);
            term = checked_add(term, pk);
        }
        s = checked_mul(s, term);
    }
    return s;
}

// All divisors in increasing order.
inline std::vector<u64> divisors(u64 n) {
    const auto f = factorize(n);
    std::vector<u64> out{1};
    for (const auto& [p, e] : f.pairs) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (u64 i = 0; i < e; ++i) {
            pk = checked_mul(pk, p);
            for (std::size_t j = 0; j < base; ++j) out.push_back(checked_mul(out[j], pk));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// n = 2^r * odd, with odd not divisible by 2.
struct TwoAdicSplit {
    u64 r = 0;    // exponent of 2
    u64 odd = 1;  // odd part, n / 2^r
};

inline TwoAdicSplit split_two_part(u64 n) {
    if (n == 0) throw std::invalid_argument("split_two_part: argument must be positive");
    TwoAdicSplit s;
    s.odd = n;
    while (s.odd % 2 == 0) { s.odd /= 2; ++s.r; }
    return s;
}

inline u64 lcm_u64(u64 a, u64 b) {
    return checked_mul(a / std::gcd(a, b), b);
}

} // namespace torsion
