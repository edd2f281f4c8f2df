#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "torsion/errors.hpp"
#include "torsion/subgroup.hpp"

namespace torsion {

// p must be an odd prime not dividing n; names the violated condition.
inline void require_odd_prime_coprime(u64 n, u64 p) {
    if (n == 0) throw hypothesis_error("n must be positive");
    if (p % 2 == 0) throw hypothesis_error("cyclic factor order " + std::to_string(p) + " must be odd");
    if (!is_prime(p)) throw hypothesis_error("cyclic factor order " + std::to_string(p) + " must be prime");
    if (n % p == 0)
        throw hypothesis_error("cyclic factor order " + std::to_string(p) + " must not divide n = " + std::to_string(n));
}

// The four parametric families that exhaust the subgroup lattice:
//   H1: <a^i>            for i | 2n             order 2n/i
//   H2: <a^i, a^j b>     for i | n, 1 <= j <= i  order 4n/i
//   H3: <a^i, c>         for i | 2n             order 2nm/i
//   H4: <a^i, a^j b, c>  for i | n, 1 <= j <= i  order 4nm/i
// When m = 1, H3/H4 coincide with H1/H2 and are not emitted.
enum class Family : unsigned { H1, H2, H3, H4 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::H1: return "H1";
        case Family::H2: return "H2";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
    }
    return "?";
}

struct FamilyDescriptor {
    Family family = Family::H1;
    u64 i = 1;
    u64 j = 0;  // 0 for H1/H3 (no coset parameter)
    u64 expected_order = 1;
};

inline bool has_gamma(Family f) { return f == Family::H3 || f == Family::H4; }
inline bool has_beta(Family f) { return f == Family::H2 || f == Family::H4; }

inline std::vector<GroupElement> family_generators(const GroupSpec& g, const FamilyDescriptor& d) {
    std::vector<GroupElement> gens;
    gens.push_back(make_element(g, d.i, 0, 0));
    if (has_beta(d.family)) gens.push_back(make_element(g, d.j, 1, 0));
    if (has_gamma(d.family)) gens.push_back(gamma(g));
    return gens;
}

inline std::string family_generator_text(const GroupSpec& g, const FamilyDescriptor& d) {
    return render_generators(family_generators(g, d));
}

struct FamilyCount {
    u64 h1 = 0;  // tau(2n)
    u64 h2 = 0;  // sigma(n)
    u64 h3 = 0;  // tau(2n)
    u64 h4 = 0;  // sigma(n)
    u64 total = 0;           // h1 + h2 + h3 + h4
    u64 distinct_total = 0;  // m = 1 collapses H3/H4 onto H1/H2
};

inline FamilyCount family_count(const GroupSpec& g) {
    FamilyCount c;
    c.h1 = tau(g.two_n);
    c.h2 = sigma(g.n);
    c.h3 = c.h1;
    c.h4 = c.h2;
    c.total = checked_mul(2, checked_add(c.h1, c.h2));
    c.distinct_total = g.m > 1 ? c.total : checked_add(c.h1, c.h2);
    return c;
}

// Distinct subgroups, in deterministic order (family, then i, then j).
inline std::vector<FamilyDescriptor> family_descriptors(const GroupSpec& g) {
    std::vector<FamilyDescriptor> out;
    const auto div_2n = divisors(g.two_n);
    const auto div_n = divisors(g.n);
    for (u64 i : div_2n) out.push_back({Family::H1, i, 0, g.two_n / i});
    for (u64 i : div_n)
        for (u64 j = 1; j <= i; ++j) out.push_back({Family::H2, i, j, 4 * g.n / i});
    if (g.m > 1) {
        for (u64 i : div_2n) out.push_back({Family::H3, i, 0, g.two_n * g.m / i});
        for (u64 i : div_n)
            for (u64 j = 1; j <= i; ++j) out.push_back({Family::H4, i, j, 4 * g.n * g.m / i});
    }
    return out;
}

struct MaterializedFamily {
    FamilyDescriptor descriptor;
    Subgroup subgroup;
};

// Closure of every descriptor, with the order verified against the formula.
// Memory use is descriptor_count * order / 8 bytes of bitsets; refuses to
// start past `budget_bytes`.
inline std::vector<MaterializedFamily> materialize_families(const GroupSpec& g,
                                                            u64 budget_bytes = u64{1} << 29) {
    const auto descs = family_descriptors(g);
    const u64 bytes = checked_mul(checked_mul((g.order + 63) / 64, 8), descs.size());
    if (bytes > budget_bytes)
        throw resource_error("materialize_families: estimated " + std::to_string(bytes) +
                             " bytes of member sets exceeds budget " + std::to_string(budget_bytes));
    std::vector<MaterializedFamily> out;
    out.reserve(descs.size());
    for (const FamilyDescriptor& d : descs) {
        Subgroup s = closure(g, family_generators(g, d));
        if (s.order != d.expected_order)
            throw std::logic_error("materialize_families: order mismatch in family " +
                                   std::string(family_name(d.family)));
        out.push_back({d, std::move(s)});
    }
    return out;
}

// Number of subgroups of order d, from the family formulas. Valid for
// m = 1 or for m an odd prime not dividing n.
inline u64 subgroups_of_order(const GroupSpec& g, u64 d) {
    if (d == 0) throw std::invalid_argument("subgroups_of_order: order must be positive");
    if (g.m != 1) require_odd_prime_coprime(g.n, g.m);
    if (g.order % d != 0) return 0;
    u64 d0 = d;
    if (g.m > 1 && d % g.m == 0) d0 = d / g.m;
    u64 c = (g.two_n % d0 == 0) ? 1 : 0;
    const u64 four_n = 4 * g.n;
    if (four_n % d0 == 0) {
        const u64 i = four_n / d0;
        if (g.n % i == 0) c += i;
    }
    return c;
}

// Two-part table of subgroup counts, orders factored as 2^(k-1) * lambda
// (part one) and 2^(k-1) * lambda * p (part two), where n = 2^r * odd and
// lambda runs over the divisors of the odd part. Columns k = 1 .. r+3.
struct OrderTable {
    u64 n = 1;
    u64 p = 3;
    u64 r = 0;         // n = 2^r * odd_part
    u64 odd_part = 1;
    bool gamma_part = false;  // part two: orders carry the factor p
    std::vector<u64> column_labels;          // 1, 2, 4, ..., 2^(r+2)
    std::vector<u64> row_labels;             // lambda, or lambda * p in part two
    std::vector<std::vector<u64>> entries;   // entries[row][col]
    std::vector<u64> row_sums;
    std::vector<u64> column_sums;
    u64 total = 0;
};

inline std::pair<OrderTable, OrderTable> order_table(u64 n, u64 p) {
    require_odd_prime_coprime(n, p);
    const TwoAdicSplit split = split_two_part(n);
    const u64 r = split.r;

    OrderTable part;
    part.n = n;
    part.p = p;
    part.r = r;
    part.odd_part = split.odd;
    for (u64 k = 1; k <= r + 3; ++k) part.column_labels.push_back(checked_pow(2, k - 1));
    const auto lambdas = divisors(split.odd);
    part.column_sums.assign(r + 3, 0);
    for (u64 lambda : lambdas) {
        part.row_labels.push_back(lambda);
        std::vector<u64> row;
        for (u64 k = 1; k <= r + 3; ++k) {
            u64 entry = 0;
            if (k <= 2) entry = 1;
            else if (k <= r + 2) entry = n / (checked_pow(2, k - 3) * lambda) + 1;
            else entry = n / (checked_pow(2, r) * lambda);
            row.push_back(entry);
            part.column_sums[k - 1] += entry;
        }
        part.row_sums.push_back(std::accumulate(row.begin(), row.end(), u64{0}));
        part.entries.push_back(std::move(row));
    }
    part.total = std::accumulate(part.row_sums.begin(), part.row_sums.end(), u64{0});

    OrderTable gamma_part = part;
    gamma_part.gamma_part = true;
    for (u64& lambda : gamma_part.row_labels) lambda = checked_mul(lambda, p);
    return {std::move(part), std::move(gamma_part)};
}

} // namespace torsion
