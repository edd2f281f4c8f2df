#pragma once

#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "torsion/cyclicizer.hpp"

namespace torsion {

inline const char* subgroup_count_source() { return "tau(p)*(tau(2n)+sigma(n))"; }
inline const char* cyclic_count_source() { return "tau(p)*(tau(2n)+n)"; }

struct VerifyConfig {
    u64 n_min = 1;
    u64 n_max = 30;
    std::vector<u64> p_set{3, 5, 7};
    u64 cap = default_oracle_cap();
    unsigned jobs = 1;  // worker threads; never part of the output
};

enum class PointStatus { checked, skipped_hypothesis, oracle_skipped };

inline const char* point_status_name(PointStatus s) {
    switch (s) {
        case PointStatus::checked: return "checked";
        case PointStatus::skipped_hypothesis: return "skipped_hypothesis";
        case PointStatus::oracle_skipped: return "oracle_skipped";
    }
    return "?";
}

// Everything checked at a single (n, p):
//  - both closed-form counts against the brute-force lattice,
//  - the family enumeration against the lattice, member set by member set,
//  - cyclic classification of each family member against brute force,
//  - the cyclicizer of the identity covering the whole group.
struct VerifyPoint {
    u64 n = 0;
    u64 p = 0;
    u64 group_order = 0;
    PointStatus status = PointStatus::skipped_hypothesis;
    std::optional<CountReport> subgroups;
    std::optional<CountReport> cyclic;
    std::optional<bool> families_match;
    std::optional<bool> cyclic_types_match;
    std::optional<bool> identity_cyclicizer_full;
    std::optional<CompareDirection> direction;

    bool failed() const {
        auto bad_report = [](const std::optional<CountReport>& r) {
            return r && r->verdict == Verdict::mismatch;
        };
        auto bad_flag = [](const std::optional<bool>& f) { return f && !*f; };
        return bad_report(subgroups) || bad_report(cyclic) || bad_flag(families_match) ||
               bad_flag(cyclic_types_match) || bad_flag(identity_cyclicizer_full);
    }
};

inline VerifyPoint verify_point(u64 n, u64 p, u64 cap = default_oracle_cap()) {
    VerifyPoint pt;
    pt.n = n;
    pt.p = p;
    pt.group_order = checked_mul(checked_mul(4, n), p);
    try {
        require_odd_prime_coprime(n, p);
    } catch (const hypothesis_error&) {
        pt.status = PointStatus::skipped_hypothesis;
        return pt;
    }

    const u64 sub_closed = count_subgroups_closed(n, p);
    const u64 cyc_closed = count_cyclic_closed(n, p);
    const auto cmp = compare_ns_cys(n, p);
    pt.direction = cmp.direction;

    const GroupSpec g(n, p);
    if (g.order > cap) {
        pt.status = PointStatus::oracle_skipped;
        pt.subgroups = make_count_report(n, p, "subgroups", sub_closed, std::nullopt,
                                         subgroup_count_source());
        pt.cyclic = make_count_report(n, p, "cyclic_subgroups", cyc_closed, std::nullopt,
                                      cyclic_count_source());
        return pt;
    }

    pt.status = PointStatus::checked;
    const auto subs = all_subgroups(g, cap);
    std::vector<char> cyclic_flag(subs.size());
    u64 oracle_cyclic = 0;
    for (std::size_t t = 0; t < subs.size(); ++t) {
        cyclic_flag[t] = is_cyclic(g, subs[t]);
        if (cyclic_flag[t]) ++oracle_cyclic;
    }
    pt.subgroups = make_count_report(n, p, "subgroups", sub_closed, subs.size(),
                                     subgroup_count_source());
    pt.cyclic = make_count_report(n, p, "cyclic_subgroups", cyc_closed, oracle_cyclic,
                                  cyclic_count_source());

    const auto mats = materialize_families(g);
    std::vector<MemberSet> family_sets;
    family_sets.reserve(mats.size());
    for (const auto& m : mats) family_sets.push_back(m.subgroup.members);
    std::sort(family_sets.begin(), family_sets.end());
    std::vector<MemberSet> oracle_sets;
    oracle_sets.reserve(subs.size());
    for (const auto& s : subs) oracle_sets.push_back(s.members);
    std::sort(oracle_sets.begin(), oracle_sets.end());
    pt.families_match = family_sets == oracle_sets;

    bool types_ok = true;
    for (const auto& m : mats) {
        const CyclicType t = classify_family_member(g, m.descriptor);
        const bool brute = is_cyclic(g, m.subgroup);
        if (t.cyclic != brute || (t.cyclic && t.order != m.subgroup.order)) {
            types_ok = false;
            break;
        }
    }
    pt.cyclic_types_match = types_ok;

    std::vector<Subgroup> cyclic_subs;
    for (std::size_t t = 0; t < subs.size(); ++t)
        if (cyclic_flag[t]) cyclic_subs.push_back(subs[t]);
    pt.identity_cyclicizer_full =
        cyclicizer_members(g, cyclic_subs, identity()).count() == g.order;

    return pt;
}

struct VerifySweep {
    VerifyConfig config;
    std::vector<VerifyPoint> points;  // grid order: n ascending, then p in p_set order
    u64 checked = 0;
    u64 skipped_hypothesis = 0;
    u64 oracle_skipped = 0;
    u64 failures = 0;
    bool all_match = true;
};

// The output is a pure function of the config minus `jobs`: points land in
// grid order no matter how many workers ran.
inline VerifySweep run_verify(const VerifyConfig& cfg) {
    VerifySweep sweep;
    sweep.config = cfg;
    std::vector<std::pair<u64, u64>> grid;
    for (u64 n = cfg.n_min; n <= cfg.n_max; ++n)
        for (u64 p : cfg.p_set) grid.emplace_back(n, p);
    sweep.points.resize(grid.size());

    const unsigned jobs = cfg.jobs == 0 ? 1 : cfg.jobs;
    if (jobs == 1) {
        for (std::size_t t = 0; t < grid.size(); ++t)
            sweep.points[t] = verify_point(grid[t].first, grid[t].second, cfg.cap);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t = next.fetch_add(1); t < grid.size(); t = next.fetch_add(1))
                sweep.points[t] = verify_point(grid[t].first, grid[t].second, cfg.cap);
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const VerifyPoint& pt : sweep.points) {
        switch (pt.status) {
            case PointStatus::checked: ++sweep.checked; break;
            case PointStatus::skipped_hypothesis: ++sweep.skipped_hypothesis; break;
            case PointStatus::oracle_skipped: ++sweep.oracle_skipped; break;
        }
        if (pt.failed()) ++sweep.failures;
    }
    sweep.all_match = sweep.failures == 0;
    return sweep;
}

} // namespace torsion
