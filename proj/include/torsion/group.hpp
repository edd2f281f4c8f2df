#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "torsion/errors.hpp"
#include "torsion/numtheory.hpp"

namespace torsion {

// The group <a, b, c | a^(2n) = e, b^2 = a^n, b a b^-1 = a^-1,
//                      c^m = e, ac = ca, bc = cb>,
// i.e. the order-4n dicyclic group times a cyclic factor of order m.
// Every element has a unique normal form a^i b^eps c^k with
// 0 <= i < 2n, eps in {0,1}, 0 <= k < m.
struct GroupSpec {
    u64 n = 1;
    u64 m = 1;
    u64 two_n = 2;
    u64 order = 4;  // 4*n*m

    GroupSpec() = default;

    GroupSpec(u64 n_, u64 m_) : n(n_), m(m_) {
        if (n == 0 || m == 0)
            throw std::invalid_argument("GroupSpec: parameters must be positive");
        two_n = checked_mul(2, n);
        order = checked_mul(checked_mul(4, n), m);
    }

    // True when m is an odd prime not dividing n: the range on which the
    // closed-form counts are proved.
    bool closed_form_valid() const {
        return m % 2 == 1 && is_prime(m) && n % m != 0;
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct GroupElement {
    u64 i = 0;            // exponent of a, mod 2n
    std::uint8_t eps = 0; // exponent of b, 0 or 1
    u64 k = 0;            // exponent of c, mod m

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline bool is_valid(const GroupSpec& g, const GroupElement& x) {
    return x.i < g.two_n && x.eps <= 1 && x.k < g.m;
}

inline GroupElement identity() { return GroupElement{}; }

// Reduce arbitrary exponents to normal form.
inline GroupElement make_element(const GroupSpec& g, u64 i, unsigned eps, u64 k) {
    return GroupElement{i % g.two_n, static_cast<std::uint8_t>(eps % 2), k % g.m};
}

inline GroupElement alpha(const GroupSpec& g) { return make_element(g, 1, 0, 0); }
inline GroupElement beta(const GroupSpec& g) { return make_element(g, 0, 1, 0); }
inline GroupElement gamma(const GroupSpec& g) { return make_element(g, 0, 0, 1); }

// b a^i = a^-i b, and b^2 = a^n; the c part is central.
inline GroupElement multiply(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
    assert(is_valid(g, x) && is_valid(g, y));
    GroupElement r;
    r.k = (x.k + y.k) % g.m;
    if (x.eps == 0) {
        r.i = (x.i + y.i) % g.two_n;
        r.eps = y.eps;
    } else if (y.eps == 0) {
        r.i = (x.i + g.two_n - y.i) % g.two_n;
        r.eps = 1;
    } else {
        r.i = (x.i + g.two_n - y.i + g.n) % g.two_n;
        r.eps = 0;
    }
    return r;
}

inline GroupElement inverse(const GroupSpec& g, const GroupElement& x) {
    assert(is_valid(g, x));
    GroupElement r;
    r.k = (g.m - x.k) % g.m;
    if (x.eps == 0) {
        r.i = (g.two_n - x.i) % g.two_n;
        r.eps = 0;
    } else {
        // (a^i b)^-1 = a^(i+n) b: check (a^i b)(a^(i+n) b) = a^(i-i-n+n) = e.
        r.i = (x.i + g.n) % g.two_n;
        r.eps = 1;
    }
    return r;
}

inline GroupElement power(const GroupSpec& g, GroupElement x, std::int64_t e) {
    assert(is_valid(g, x));
    if (e < 0) {
        x = inverse(g, x);
        // avoid overflow on INT64_MIN
        u64 mag = static_cast<u64>(-(e + 1)) + 1;
        GroupElement acc = identity();
        while (mag) {
            if (mag & 1) acc = multiply(g, acc, x);
            x = multiply(g, x, x);
            mag >>= 1;
        }
        return acc;
    }
    GroupElement acc = identity();
    u64 mag = static_cast<u64>(e);
    while (mag) {
        if (mag & 1) acc = multiply(g, acc, x);
        x = multiply(g, x, x);
        mag >>= 1;
    }
    return acc;
}

// Order of a^i b^eps c^k. For eps = 0 this is lcm of the orders of the
// two cyclic coordinates; any element with eps = 1 squares to a^n, which
// has order 2, so its torsion-part order is exactly 4.
inline u64 element_order(const GroupSpec& g, const GroupElement& x) {
    assert(is_valid(g, x));
    const u64 c_order = g.m / std::gcd(g.m, x.k);
    if (x.eps == 0) {
        const u64 a_order = g.two_n / std::gcd(g.two_n, x.i);
        return lcm_u64(a_order, c_order);
    }
    return lcm_u64(4, c_order);
}

// Bijection onto [0, 4nm): (i * 2 + eps) * m + k.
inline u64 canonical_index(const GroupSpec& g, const GroupElement& x) {
    assert(is_valid(g, x));
    return (x.i * 2 + x.eps) * g.m + x.k;
}

inline GroupElement element_at(const GroupSpec& g, u64 idx) {
    if (idx >= g.order) throw std::out_of_range("element_at: index exceeds group order");
    GroupElement x;
    x.k = idx % g.m;
    const u64 q = idx / g.m;
    x.eps = static_cast<std::uint8_t>(q % 2);
    x.i = q / 2;
    return x;
}

// "a^3 b c^2" style; exponent 1 is suppressed, the identity renders as "e".
inline std::string render_element(const GroupElement& x) {
    std::string out;
    auto append = [&out](const char* sym, u64 e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += sym;
        if (e > 1) out += '^' + std::to_string(e);
    };
    append("a", x.i);
    if (x.eps) {
        if (!out.empty()) out += ' ';
        out += 'b';
    }
    append("c", x.k);
    if (out.empty()) out = "e";
    return out;
}

} // namespace torsion
