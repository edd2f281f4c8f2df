#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "torsion/gap_script.hpp"
#include "torsion/verify.hpp"

namespace torsion {

using ordered_json = nlohmann::ordered_json;

// All emitters below are pure functions of their inputs; JSON uses
// insertion-ordered keys so equal inputs give byte-equal output.

inline std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline ordered_json count_report_json(const CountReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["quantity"] = r.quantity;
    j["closed_form"] = r.closed_form;
    if (r.oracle) j["oracle"] = *r.oracle;
    else j["oracle"] = nullptr;
    j["verdict"] = verdict_name(r.verdict);
    j["paper_ref"] = r.source;
    j["notes"] = r.notes;
    return j;
}

inline ordered_json family_count_json(const FamilyCount& c) {
    ordered_json j;
    j["H1"] = c.h1;
    j["H2"] = c.h2;
    j["H3"] = c.h3;
    j["H4"] = c.h4;
    j["total"] = c.total;
    j["distinct_total"] = c.distinct_total;
    return j;
}

inline Verdict combined_verdict(const VerifyPoint& pt) {
    if (!pt.subgroups || !pt.cyclic) return Verdict::oracle_skipped;
    if (pt.subgroups->verdict == Verdict::mismatch || pt.cyclic->verdict == Verdict::mismatch)
        return Verdict::mismatch;
    if (pt.subgroups->verdict == Verdict::oracle_skipped ||
        pt.cyclic->verdict == Verdict::oracle_skipped)
        return Verdict::oracle_skipped;
    return Verdict::match;
}

// ---- count ----

inline ordered_json count_json(const VerifyPoint& pt, const FamilyCount& fc, u64 cap) {
    ordered_json j;
    j["command"] = "count";
    j["n"] = pt.n;
    j["p"] = pt.p;
    j["group_order"] = pt.group_order;
    j["cap"] = cap;
    j["family_counts"] = family_count_json(fc);
    j["reports"] = ordered_json::array();
    if (pt.subgroups) j["reports"].push_back(count_report_json(*pt.subgroups));
    if (pt.cyclic) j["reports"].push_back(count_report_json(*pt.cyclic));
    j["verdict"] = verdict_name(combined_verdict(pt));
    return j;
}

inline std::string count_csv(const VerifyPoint& pt) {
    std::string out = "quantity,n,p,closed_form,oracle,verdict\n";
    auto row = [&out](const CountReport& r) {
        out += r.quantity + ',' + std::to_string(r.n) + ',' + std::to_string(r.p) + ',' +
               std::to_string(r.closed_form) + ',' +
               (r.oracle ? std::to_string(*r.oracle) : std::string()) + ',' +
               verdict_name(r.verdict) + '\n';
    };
    if (pt.subgroups) row(*pt.subgroups);
    if (pt.cyclic) row(*pt.cyclic);
    return out;
}

inline std::string count_text(const VerifyPoint& pt, const FamilyCount& fc, u64 cap) {
    std::ostringstream o;
    o << "group: dicyclic(4n) x cyclic(p), n = " << pt.n << ", p = " << pt.p
      << ", order " << pt.group_order << "\n";
    o << "family counts: H1 = " << fc.h1 << ", H2 = " << fc.h2 << ", H3 = " << fc.h3
      << ", H4 = " << fc.h4 << ", total = " << fc.total << "\n";
    auto line = [&o](const CountReport& r) {
        o << r.quantity << ": closed form " << r.closed_form << " [" << r.source << "]";
        if (r.oracle) o << ", brute force " << *r.oracle;
        o << " -> " << verdict_name(r.verdict) << "\n";
    };
    if (pt.subgroups) line(*pt.subgroups);
    if (pt.cyclic) line(*pt.cyclic);
    if (pt.group_order > cap)
        o << "brute force skipped: order " << pt.group_order << " exceeds cap " << cap << "\n";
    return o.str();
}

// ---- enumerate ----

inline ordered_json descriptor_json(const GroupSpec& g, const FamilyDescriptor& d) {
    ordered_json j;
    j["family"] = family_name(d.family);
    j["i"] = d.i;
    if (d.j == 0) j["j"] = nullptr;
    else j["j"] = d.j;
    j["order"] = d.expected_order;
    j["generators"] = family_generator_text(g, d);
    return j;
}

inline ordered_json enumerate_json(const GroupSpec& g, const std::vector<FamilyDescriptor>& descs,
                                   bool materialized) {
    ordered_json j;
    j["command"] = "enumerate";
    j["n"] = g.n;
    j["p"] = g.m;
    j["materialized"] = materialized;
    j["family_counts"] = family_count_json(family_count(g));
    j["subgroups"] = ordered_json::array();
    for (const auto& d : descs) {
        ordered_json row = descriptor_json(g, d);
        if (materialized) row["verified"] = true;
        j["subgroups"].push_back(std::move(row));
    }
    return j;
}

inline std::string enumerate_csv(const GroupSpec& g, const std::vector<FamilyDescriptor>& descs,
                                 bool materialized) {
    std::string out = "family,i,j,order,generators";
    if (materialized) out += ",verified";
    out += '\n';
    for (const auto& d : descs) {
        out += std::string(family_name(d.family)) + ',' + std::to_string(d.i) + ',';
        if (d.j != 0) out += std::to_string(d.j);
        out += ',' + std::to_string(d.expected_order) + ',' +
               csv_quote(family_generator_text(g, d));
        if (materialized) out += ",true";
        out += '\n';
    }
    return out;
}

// Text mode groups the j = 1..i runs of H2/H4 into one line per i.
inline std::string enumerate_text(const GroupSpec& g, const std::vector<FamilyDescriptor>& descs) {
    std::ostringstream o;
    const FamilyCount fc = family_count(g);
    o << "subgroups of dicyclic(4n) x cyclic(m), n = " << g.n << ", m = " << g.m << "\n";
    o << "H1 " << fc.h1 << ", H2 " << fc.h2 << ", H3 " << fc.h3 << ", H4 " << fc.h4
      << ", total " << fc.total << "\n\n";
    auto a_power = [](u64 i) { return i == 1 ? std::string("a") : "a^" + std::to_string(i); };
    std::size_t t = 0;
    while (t < descs.size()) {
        const FamilyDescriptor& d = descs[t];
        if (!has_beta(d.family)) {
            o << family_name(d.family) << "  i=" << d.i << "  order=" << d.expected_order
              << "  " << family_generator_text(g, d) << "\n";
            ++t;
            continue;
        }
        // H2/H4: descriptors for one i are consecutive with j = 1..i
        std::size_t run = 0;
        while (t + run < descs.size() && descs[t + run].family == d.family &&
               descs[t + run].i == d.i)
            ++run;
        if (run == 1) {
            o << family_name(d.family) << "  i=" << d.i << "  j=1  order=" << d.expected_order
              << "  " << family_generator_text(g, d) << "\n";
        } else {
            o << family_name(d.family) << "  i=" << d.i << "  j=1.." << run
              << "  order=" << d.expected_order << "  <" << a_power(d.i) << ", a^j b"
              << (has_gamma(d.family) ? ", c" : "") << ">  (" << run << " subgroups)\n";
        }
        t += run;
    }
    return o.str();
}

// ---- table ----

inline ordered_json table_json(const OrderTable& part1, const OrderTable& part2) {
    ordered_json j;
    j["command"] = "table";
    j["n"] = part1.n;
    j["p"] = part1.p;
    j["r"] = part1.r;
    j["odd_part"] = part1.odd_part;
    j["column_labels"] = part1.column_labels;
    j["parts"] = ordered_json::array();
    for (const OrderTable* part : {&part1, &part2}) {
        ordered_json pj;
        pj["part"] = part->gamma_part ? 2 : 1;
        pj["gamma_factor"] = part->gamma_part;
        ordered_json rows;
        for (std::size_t row = 0; row < part->row_labels.size(); ++row)
            rows[std::to_string(part->row_labels[row])] = part->entries[row];
        pj["rows"] = std::move(rows);
        ordered_json row_sums;
        for (std::size_t row = 0; row < part->row_labels.size(); ++row)
            row_sums[std::to_string(part->row_labels[row])] = part->row_sums[row];
        pj["row_sums"] = std::move(row_sums);
        pj["column_sums"] = part->column_sums;
        pj["total"] = part->total;
        j["parts"].push_back(std::move(pj));
    }
    j["grand_total"] = part1.total + part2.total;
    return j;
}

inline std::string table_csv(const OrderTable& part) {
    std::string out = "k";
    for (u64 label : part.column_labels) out += ',' + std::to_string(label);
    out += '\n';
    for (std::size_t row = 0; row < part.row_labels.size(); ++row) {
        out += std::to_string(part.row_labels[row]);
        for (u64 e : part.entries[row]) out += ',' + std::to_string(e);
        out += '\n';
    }
    out += "sum";
    for (u64 s : part.column_sums) out += ',' + std::to_string(s);
    out += '\n';
    return out;
}

inline std::string table_text(const OrderTable& part1, const OrderTable& part2) {
    std::ostringstream o;
    o << "subgroup counts by order, n = " << part1.n << " = 2^" << part1.r << " * "
      << part1.odd_part << ", p = " << part1.p << "\n";
    auto emit = [&o](const OrderTable& part) {
        o << "\norders " << (part.gamma_part ? "2^(k-1) * lambda * p" : "2^(k-1) * lambda")
          << " (columns k = 1.." << part.column_labels.size() << "):\n";
        o << "lambda";
        for (u64 c : part.column_labels) o << '\t' << c;
        o << "\tsum\n";
        for (std::size_t row = 0; row < part.row_labels.size(); ++row) {
            o << part.row_labels[row];
            for (u64 e : part.entries[row]) o << '\t' << e;
            o << '\t' << part.row_sums[row] << '\n';
        }
        o << "sum";
        for (u64 s : part.column_sums) o << '\t' << s;
        o << '\t' << part.total << '\n';
    };
    emit(part1);
    emit(part2);
    o << "\ngrand total " << part1.total + part2.total << "\n";
    return o.str();
}

// ---- errata ----

// Corrections to the published closed forms, each verified computationally.
// The claims themselves are restated from the formula set this library
// implements; instances carry concrete numbers.
inline ordered_json build_errata_json(const std::vector<VerifyPoint>& points,
                                      const std::vector<u64>& p_set) {
    ordered_json errata = ordered_json::array();

    {
        ordered_json e;
        e["id"] = "cyclic-count-worked-example";
        e["claim"] = "the worked cyclic-subgroup example at n=450, p=7 reports 2472";
        e["correction"] = "tau(7)*(tau(900)+450) = 954; 2472 is the total subgroup count, "
                          "not the cyclic one";
        ordered_json d;
        d["n"] = 450;
        d["p"] = 7;
        d["stated"] = 2472;
        d["cyclic_closed_form"] = count_cyclic_closed(450, 7);
        d["subgroup_closed_form"] = count_subgroups_closed(450, 7);
        e["details"] = std::move(d);
        errata.push_back(std::move(e));
    }

    {
        ordered_json e;
        e["id"] = "h3-cyclic-type-order";
        e["claim"] = "members <a^i, c> are typed as cyclic of order n*p/i";
        e["correction"] = "their order is 2n*p/i; the stated order misses the factor 2";
        ordered_json d;
        d["n"] = 450;
        d["p"] = 7;
        d["i"] = 1;
        d["stated_order"] = 450 * 7;
        d["actual_order"] = 2 * 450 * 7;
        e["details"] = std::move(d);
        errata.push_back(std::move(e));
    }

    {
        ordered_json e;
        e["id"] = "h4-cyclic-type-order";
        e["claim"] = "cyclic members <a^n, a^j b, c> are typed C_2p";
        e["correction"] = "they are generated by an order-4 element times an order-p one, "
                          "so the type is C_4p";
        ordered_json d;
        d["p"] = 7;
        d["stated_order"] = 2 * 7;
        d["actual_order"] = 4 * 7;
        e["details"] = std::move(d);
        errata.push_back(std::move(e));
    }

    {
        ordered_json e;
        e["id"] = "two-power-gap-boxed-form";
        e["claim"] = "for n = 2^r the non-cyclic gap is 2^r(4p-1) - 2*tau(2^(r+1))";
        e["correction"] = "that boxed form overshoots by 2^r; the expanded line "
                          "2^(r+2)p - 2((r+2) + 2^r) is the correct count";
        ordered_json instances = ordered_json::array();
        for (u64 r = 1; r <= 4; ++r) {
            for (u64 p : p_set) {
                if (p % 2 == 0 || !is_prime(p)) continue;
                const TwoPowerGapCheck c = gap_t_two_power(r, p);
                ordered_json inst;
                inst["r"] = r;
                inst["p"] = p;
                inst["stated"] = c.stated;
                inst["expanded"] = c.expanded;
                inst["direct"] = c.direct;
                instances.push_back(std::move(inst));
            }
        }
        e["instances"] = std::move(instances);
        errata.push_back(std::move(e));
    }

    {
        ordered_json e;
        e["id"] = "total-vs-cyclic-direction";
        e["claim"] = "the total subgroup count never exceeds the cyclic subgroup count";
        e["correction"] = "the difference total - cyclic = tau(p)*(sigma(n) - n) is positive "
                          "for every n > 1; equality holds exactly at n = 1";
        ordered_json instances = ordered_json::array();
        for (const VerifyPoint& pt : points) {
            if (pt.status == PointStatus::skipped_hypothesis) continue;
            ordered_json inst;
            inst["n"] = pt.n;
            inst["p"] = pt.p;
            inst["subgroups"] = pt.subgroups->closed_form;
            inst["cyclic"] = pt.cyclic->closed_form;
            inst["direction"] = pt.direction ? direction_name(*pt.direction) : "";
            instances.push_back(std::move(inst));
        }
        e["instances"] = std::move(instances);
        errata.push_back(std::move(e));
    }

    {
        ordered_json e;
        e["id"] = "cyclicizer-subgroup-equivalence";
        e["claim"] = "every cyclicizer is a subgroup if and only if the group is cyclic";
        e["correction"] = "the reverse direction fails: in the order-8 dicyclic group "
                          "(n=2, m=1) every cyclicizer is a subgroup but the group is "
                          "not cyclic";
        const EquivalenceProbe probe = prop46_check(GroupSpec(2, 1));
        ordered_json d;
        d["n"] = 2;
        d["m"] = 1;
        d["all_cyclicizers_subgroups"] = probe.all_cyclicizers_subgroups;
        d["group_cyclic"] = probe.group_cyclic;
        d["equivalence_holds"] = probe.equivalence_holds;
        e["details"] = std::move(d);
        errata.push_back(std::move(e));
    }

    return errata;
}

// ---- verify ----

inline ordered_json verify_point_json(const VerifyPoint& pt) {
    ordered_json j;
    j["n"] = pt.n;
    j["p"] = pt.p;
    j["group_order"] = pt.group_order;
    j["status"] = point_status_name(pt.status);
    j["subgroups"] = pt.subgroups ? count_report_json(*pt.subgroups) : ordered_json(nullptr);
    j["cyclic_subgroups"] = pt.cyclic ? count_report_json(*pt.cyclic) : ordered_json(nullptr);
    auto flag = [](const std::optional<bool>& f) {
        return f ? ordered_json(*f) : ordered_json(nullptr);
    };
    j["families_match"] = flag(pt.families_match);
    j["cyclic_types_match"] = flag(pt.cyclic_types_match);
    j["identity_cyclicizer_full"] = flag(pt.identity_cyclicizer_full);
    j["direction"] = pt.direction ? ordered_json(direction_name(*pt.direction)) : ordered_json(nullptr);
    return j;
}

inline ordered_json verify_json(const VerifySweep& sweep) {
    ordered_json j;
    j["command"] = "verify";
    ordered_json cfg;
    cfg["n_min"] = sweep.config.n_min;
    cfg["n_max"] = sweep.config.n_max;
    cfg["p_set"] = sweep.config.p_set;
    cfg["cap"] = sweep.config.cap;
    j["config"] = std::move(cfg);
    j["points"] = ordered_json::array();
    for (const VerifyPoint& pt : sweep.points) j["points"].push_back(verify_point_json(pt));
    j["errata"] = build_errata_json(sweep.points, sweep.config.p_set);
    ordered_json s;
    s["points"] = sweep.points.size();
    s["checked"] = sweep.checked;
    s["skipped_hypothesis"] = sweep.skipped_hypothesis;
    s["oracle_skipped"] = sweep.oracle_skipped;
    s["failures"] = sweep.failures;
    s["all_match"] = sweep.all_match;
    j["summary"] = std::move(s);
    return j;
}

inline std::string verify_csv(const VerifySweep& sweep) {
    std::string out =
        "n,p,group_order,status,subgroups_closed,subgroups_oracle,subgroups_verdict,"
        "cyclic_closed,cyclic_oracle,cyclic_verdict,families_match,cyclic_types_match,"
        "identity_cyclicizer_full,direction\n";
    auto opt_u64 = [](const std::optional<u64>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    auto opt_flag = [](const std::optional<bool>& f) {
        return f ? std::string(*f ? "true" : "false") : std::string();
    };
    for (const VerifyPoint& pt : sweep.points) {
        out += std::to_string(pt.n) + ',' + std::to_string(pt.p) + ',' +
               std::to_string(pt.group_order) + ',' + point_status_name(pt.status) + ',';
        if (pt.subgroups)
            out += std::to_string(pt.subgroups->closed_form) + ',' +
                   opt_u64(pt.subgroups->oracle) + ',' + verdict_name(pt.subgroups->verdict);
        else
            out += ",,";
        out += ',';
        if (pt.cyclic)
            out += std::to_string(pt.cyclic->closed_form) + ',' + opt_u64(pt.cyclic->oracle) +
                   ',' + verdict_name(pt.cyclic->verdict);
        else
            out += ",,";
        out += ',' + opt_flag(pt.families_match) + ',' + opt_flag(pt.cyclic_types_match) + ',' +
               opt_flag(pt.identity_cyclicizer_full) + ',' +
               (pt.direction ? direction_name(*pt.direction) : "") + '\n';
    }
    return out;
}

inline std::string verify_text(const VerifySweep& sweep) {
    std::ostringstream o;
    o << "verify sweep: n = " << sweep.config.n_min << ".." << sweep.config.n_max << ", p in {";
    for (std::size_t t = 0; t < sweep.config.p_set.size(); ++t)
        o << (t ? "," : "") << sweep.config.p_set[t];
    o << "}, cap " << sweep.config.cap << "\n";
    o << "points " << sweep.points.size() << ": checked " << sweep.checked
      << ", hypothesis skipped " << sweep.skipped_hypothesis << ", over cap "
      << sweep.oracle_skipped << ", failures " << sweep.failures << "\n";
    for (const VerifyPoint& pt : sweep.points) {
        if (!pt.failed()) continue;
        o << "FAIL n=" << pt.n << " p=" << pt.p;
        if (pt.subgroups && pt.subgroups->verdict == Verdict::mismatch)
            o << "  subgroups closed " << pt.subgroups->closed_form << " vs brute "
              << *pt.subgroups->oracle;
        if (pt.cyclic && pt.cyclic->verdict == Verdict::mismatch)
            o << "  cyclic closed " << pt.cyclic->closed_form << " vs brute "
              << *pt.cyclic->oracle;
        if (pt.families_match && !*pt.families_match) o << "  family enumeration mismatch";
        if (pt.cyclic_types_match && !*pt.cyclic_types_match) o << "  cyclic type mismatch";
        if (pt.identity_cyclicizer_full && !*pt.identity_cyclicizer_full)
            o << "  identity cyclicizer incomplete";
        o << "\n";
    }
    o << (sweep.all_match ? "all closed forms match brute force\n"
                          : "closed forms DISAGREE with brute force\n");
    const ordered_json errata = build_errata_json(sweep.points, sweep.config.p_set);
    o << "recorded errata against the published forms: " << errata.size() << "\n";
    for (const auto& e : errata)
        o << "  - " << e["id"].get<std::string>() << ": " << e["correction"].get<std::string>()
          << "\n";
    return o.str();
}

// ---- prop46 ----

inline ordered_json prop46_json(const EquivalenceProbe& probe) {
    ordered_json j;
    j["command"] = "prop46";
    j["n"] = probe.spec.n;
    j["m"] = probe.spec.m;
    j["group_order"] = probe.spec.order;
    j["all_cyclicizers_subgroups"] = probe.all_cyclicizers_subgroups;
    j["group_cyclic"] = probe.group_cyclic;
    j["equivalence_holds"] = probe.equivalence_holds;
    if (probe.witness) {
        j["witness_index"] = *probe.witness;
        j["witness_element"] = render_element(element_at(probe.spec, *probe.witness));
    } else {
        j["witness_index"] = nullptr;
        j["witness_element"] = nullptr;
    }
    j["note"] = probe.note;
    return j;
}

inline std::string prop46_text(const EquivalenceProbe& probe) {
    std::ostringstream o;
    o << "cyclicizer subgroup test, n = " << probe.spec.n << ", m = " << probe.spec.m
      << ", order " << probe.spec.order << "\n";
    o << "all cyclicizers are subgroups: " << (probe.all_cyclicizers_subgroups ? "yes" : "no")
      << "\n";
    if (probe.witness)
        o << "first failing element: " << render_element(element_at(probe.spec, *probe.witness))
          << "\n";
    o << "group is cyclic: " << (probe.group_cyclic ? "yes" : "no") << "\n";
    o << "equivalence holds here: " << (probe.equivalence_holds ? "yes" : "no") << "\n";
    o << probe.note << "\n";
    return o.str();
}

// ---- gapscript ----

inline ordered_json gapscript_json(u64 n, u64 p, GapScriptMode mode) {
    ordered_json j;
    j["command"] = "gapscript";
    j["n"] = n;
    j["p"] = p;
    j["mode"] = gap_script_mode_name(mode);
    j["script"] = gap_script(n, p, mode);
    return j;
}

} // namespace torsion
