#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsion/counting.hpp"
#include "torsion/lattice.hpp"

namespace torsion {

// Isomorphism type of a family member, when cyclic. Valid for m = 1 or for
// m an odd prime not dividing n (the range where the families are proved
// exhaustive and the coprime product of cyclic parts stays cyclic).
struct CyclicType {
    bool cyclic = false;
    u64 order = 0;        // meaningful only when cyclic
    std::string label;    // "C_<order>", empty when not cyclic
};

// H1 and H3 members are always cyclic (the a-part times a coprime c-part).
// An H2/H4 member is cyclic exactly at i = n, where the torsion part
// collapses to <a^j b>, of order 4.
inline CyclicType classify_family_member(const GroupSpec& g, const FamilyDescriptor& d) {
    if (g.m != 1) require_odd_prime_coprime(g.n, g.m);
    CyclicType t;
    switch (d.family) {
        case Family::H1:
            t.cyclic = true;
            t.order = g.two_n / d.i;
            break;
        case Family::H3:
            t.cyclic = true;
            t.order = g.two_n * g.m / d.i;
            break;
        case Family::H2:
            t.cyclic = d.i == g.n;
            t.order = 4;
            break;
        case Family::H4:
            t.cyclic = d.i == g.n;
            t.order = 4 * g.m;
            break;
    }
    if (t.cyclic) t.label = "C_" + std::to_string(t.order);
    else t.order = 0;
    return t;
}

// The cyclicizer of x: every y such that <x, y> is cyclic. Computed as the
// union of all cyclic subgroups containing x — if <x, y> is cyclic both lie
// in it, and any cyclic subgroup through x and y contains <x, y>.
struct CyclicizerSet {
    GroupElement element;
    MemberSet members;
    u64 size = 0;
    bool is_subgroup = false;
};

inline MemberSet cyclicizer_members(const GroupSpec& g, const std::vector<Subgroup>& cyclic,
                                    const GroupElement& x) {
    MemberSet out(g.order);
    const u64 idx = canonical_index(g, x);
    for (const Subgroup& c : cyclic)
        if (c.members.test(idx)) out |= c.members;
    return out;
}

inline CyclicizerSet cyclicizer(const GroupSpec& g, const std::vector<Subgroup>& cyclic,
                                const GroupElement& x) {
    CyclicizerSet s;
    s.element = x;
    s.members = cyclicizer_members(g, cyclic, x);
    s.size = s.members.count();
    s.is_subgroup = is_subgroup_set(g, s.members);
    return s;
}

inline CyclicizerSet cyclicizer(const GroupSpec& g, const GroupElement& x,
                                u64 cap = default_oracle_cap()) {
    return cyclicizer(g, cyclic_subgroups(g, cap), x);
}

// Intersection of all cyclicizers.
inline MemberSet cyclicizer_core(const GroupSpec& g, u64 cap = default_oracle_cap()) {
    const auto cyclic = cyclic_subgroups(g, cap);
    MemberSet core(g.order);
    core.set();
    for (u64 idx = 0; idx < g.order && core.any(); ++idx)
        core &= cyclicizer_members(g, cyclic, element_at(g, idx));
    return core;
}

// Probe for the claimed equivalence "every cyclicizer is a subgroup iff the
// group is cyclic". Both sides are computed outright; `witness` is the first
// element (by canonical index) whose cyclicizer fails the subgroup test.
struct EquivalenceProbe {
    GroupSpec spec;
    bool all_cyclicizers_subgroups = false;
    bool group_cyclic = false;
    bool equivalence_holds = false;
    std::optional<u64> witness;  // only when some cyclicizer is not a subgroup
    std::string note;
};

inline EquivalenceProbe prop46_check(const GroupSpec& g, u64 cap = default_oracle_cap()) {
    require_within_cap(g, cap, "prop46_check");
    const auto cyclic = cyclic_subgroups(g, cap);
    EquivalenceProbe r;
    r.spec = g;
    r.all_cyclicizers_subgroups = true;
    for (u64 idx = 0; idx < g.order; ++idx) {
        if (!is_subgroup_set(g, cyclicizer_members(g, cyclic, element_at(g, idx)))) {
            r.all_cyclicizers_subgroups = false;
            r.witness = idx;
            break;
        }
    }
    for (u64 idx = 0; idx < g.order && !r.group_cyclic; ++idx)
        if (element_order(g, element_at(g, idx)) == g.order) r.group_cyclic = true;
    r.equivalence_holds = r.all_cyclicizers_subgroups == r.group_cyclic;
    if (r.all_cyclicizers_subgroups && !r.group_cyclic)
        r.note = "every cyclicizer is a subgroup yet the group is not cyclic; "
                 "the subgroup condition does not force cyclicity here";
    else if (r.all_cyclicizers_subgroups)
        r.note = "group is cyclic and every cyclicizer is the whole group";
    else
        r.note = "some cyclicizer fails the subgroup test";
    return r;
}

} // namespace torsion
