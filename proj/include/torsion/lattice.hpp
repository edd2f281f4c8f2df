#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "torsion/errors.hpp"
#include "torsion/subgroup.hpp"

namespace torsion {

// Brute-force ceiling on the group order; TORSION_COUNT_CAP overrides.
inline u64 default_oracle_cap() {
    if (const char* env = std::getenv("TORSION_COUNT_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<u64>(v);
    }
    return 2000;
}

inline void require_within_cap(const GroupSpec& g, u64 cap, const char* op) {
    if (g.order > cap)
        throw resource_error(std::string(op) + ": group order " + std::to_string(g.order) +
                             " exceeds brute-force cap " + std::to_string(cap));
}

// Every <x>, deduplicated by member set; sorted by (order, member set).
// The generator witness is the first generating element in index order.
inline std::vector<Subgroup> cyclic_subgroups(const GroupSpec& g, u64 cap = default_oracle_cap()) {
    require_within_cap(g, cap, "cyclic_subgroups");
    std::set<MemberSet> seen;
    std::vector<Subgroup> out;
    for (u64 idx = 0; idx < g.order; ++idx) {
        Subgroup c = cyclic_closure(g, element_at(g, idx));
        if (seen.insert(c.members).second) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
}

enum class JoinOrder { forward, reversed };

// Complete subgroup lattice by a cyclic-join fixpoint: seed with all cyclic
// subgroups, then repeatedly join frontier subgroups with cyclic ones until
// nothing new appears. Every subgroup is generated by finitely many cyclic
// subgroups, so the fixpoint is the full lattice. The join schedule does not
// affect the result set; `schedule` exists so tests can prove that.
inline std::vector<Subgroup> all_subgroups(const GroupSpec& g, u64 cap = default_oracle_cap(),
                                           JoinOrder schedule = JoinOrder::forward) {
    require_within_cap(g, cap, "all_subgroups");
    const std::vector<Subgroup> cyclic = cyclic_subgroups(g, cap);

    std::set<MemberSet> seen;
    std::vector<Subgroup> found;
    for (const Subgroup& c : cyclic) {
        seen.insert(c.members);
        found.push_back(c);
    }

    std::vector<std::size_t> frontier(found.size());
    for (std::size_t t = 0; t < frontier.size(); ++t) frontier[t] = t;

    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        auto visit = [&](std::size_t hi, const Subgroup& c) {
            const Subgroup& h = found[hi];
            if (c.members.is_subset_of(h.members)) return;
            std::vector<GroupElement> gens = h.generators;
            gens.insert(gens.end(), c.generators.begin(), c.generators.end());
            Subgroup j = closure(g, gens);
            if (seen.insert(j.members).second) {
                next.push_back(found.size());
                found.push_back(std::move(j));
            }
        };
        if (schedule == JoinOrder::forward) {
            for (std::size_t hi : frontier)
                for (const Subgroup& c : cyclic) visit(hi, c);
        } else {
            for (auto it = frontier.rbegin(); it != frontier.rend(); ++it)
                for (auto ct = cyclic.rbegin(); ct != cyclic.rend(); ++ct) visit(*it, *ct);
        }
        frontier = std::move(next);
    }

    std::sort(found.begin(), found.end(), subgroup_less);
    return found;
}

// order -> how many subgroups of that order (keys ascending).
inline std::map<u64, u64> order_histogram(const std::vector<Subgroup>& subs) {
    std::map<u64, u64> h;
    for (const Subgroup& s : subs) ++h[s.order];
    return h;
}

inline u64 count_cyclic(const GroupSpec& g, const std::vector<Subgroup>& subs) {
    u64 c = 0;
    for (const Subgroup& s : subs)
        if (is_cyclic(g, s)) ++c;
    return c;
}

} // namespace torsion
