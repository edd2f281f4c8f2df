#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <vector>

#include "torsion/group.hpp"

namespace torsion {

using MemberSet = boost::dynamic_bitset<>;

// A subgroup as a bitset over canonical element indices, plus a
// generating-set witness (not unique, not minimal).
struct Subgroup {
    MemberSet members;
    u64 order = 0;  // == members.count()
    std::vector<GroupElement> generators;
};

// Deterministic total order: by order, then by member set.
inline bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
}

inline std::vector<GroupElement> decode_members(const GroupSpec& g, const MemberSet& s) {
    std::vector<GroupElement> out;
    out.reserve(s.count());
    for (auto idx = s.find_first(); idx != MemberSet::npos; idx = s.find_next(idx))
        out.push_back(element_at(g, idx));
    return out;
}

// <gens> by breadth-first right multiplication starting from the identity.
// Inverses are never needed: the group is finite.
inline Subgroup closure(const GroupSpec& g, const std::vector<GroupElement>& gens) {
    Subgroup sub;
    sub.members.resize(g.order);
    sub.generators = gens;
    std::vector<GroupElement> queue;
    queue.reserve(64);
    sub.members.set(canonical_index(g, identity()));
    queue.push_back(identity());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const GroupElement x = queue[head];
        for (const GroupElement& s : gens) {
            const GroupElement y = multiply(g, x, s);
            const u64 idx = canonical_index(g, y);
            if (!sub.members.test(idx)) {
                sub.members.set(idx);
                queue.push_back(y);
            }
        }
    }
    sub.order = sub.members.count();
    return sub;
}

// Smallest subgroup containing every set bit of seed.
inline MemberSet closure_of_set(const GroupSpec& g, const MemberSet& seed) {
    return closure(g, decode_members(g, seed)).members;
}

// Exhaustive closure check: contains the identity and is closed under the
// group operation. For finite groups that is the full subgroup test.
inline bool is_subgroup_set(const GroupSpec& g, const MemberSet& s) {
    if (!s.test(canonical_index(g, identity()))) return false;
    const auto members = decode_members(g, s);
    for (const GroupElement& x : members)
        for (const GroupElement& y : members)
            if (!s.test(canonical_index(g, multiply(g, x, y)))) return false;
    return true;
}

inline Subgroup cyclic_closure(const GroupSpec& g, const GroupElement& x) {
    Subgroup sub;
    sub.members.resize(g.order);
    sub.generators = {x};
    GroupElement acc = identity();
    do {
        sub.members.set(canonical_index(g, acc));
        acc = multiply(g, acc, x);
    } while (!(acc == identity()));
    sub.order = sub.members.count();
    return sub;
}

// True when some member generates the whole subgroup.
inline bool is_cyclic(const GroupSpec& g, const Subgroup& sub) {
    for (auto idx = sub.members.find_first(); idx != MemberSet::npos;
         idx = sub.members.find_next(idx))
        if (element_order(g, element_at(g, idx)) == sub.order) return true;
    return false;
}

// "<a^2, a b>"; identity generators are dropped unless alone.
inline std::string render_generators(const std::vector<GroupElement>& gens) {
    std::string out = "<";
    bool first = true;
    for (const GroupElement& x : gens) {
        if (x == identity() && gens.size() > 1) continue;
        if (!first) out += ", ";
        out += render_element(x);
        first = false;
    }
    if (first) out += "e";  // all generators were identity duplicates
    out += ">";
    return out;
}

} // namespace torsion
