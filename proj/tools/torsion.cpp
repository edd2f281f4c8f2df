// Command-line front end: counting, enumeration, order tables, brute-force
// verification sweeps, cyclicizer probes, and GAP cross-check scripts for
// dicyclic-times-cyclic groups.
//
// Exit codes: 0 success (or oracle skipped), 2 closed form vs brute force
// mismatch, 3 hypothesis violation, 4 resource cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "torsion/torsion.hpp"

namespace {

enum class Format { text, json, csv };

const std::map<std::string, Format> kAllFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
const std::map<std::string, Format> kNoCsvFormats{{"text", Format::text}, {"json", Format::json}};

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
}

// "5" or "1..30"
std::pair<torsion::u64, torsion::u64> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const torsion::u64 v = std::stoull(text);
            return {v, v};
        }
        const torsion::u64 lo = std::stoull(text.substr(0, dots));
        const torsion::u64 hi = std::stoull(text.substr(dots + 2));
        if (lo == 0 || hi < lo) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be N or LO..HI with positive bounds: " + text);
    }
}

std::string strip_csv_suffix(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return path.substr(0, path.size() - 4);
    return path;
}

int run_count(torsion::u64 n, torsion::u64 p, torsion::u64 cap, Format fmt,
              const std::string& out) {
    torsion::require_odd_prime_coprime(n, p);
    const torsion::GroupSpec g(n, p);
    const torsion::VerifyPoint pt = torsion::verify_point(n, p, cap);
    const torsion::FamilyCount fc = torsion::family_count(g);
    std::string payload;
    switch (fmt) {
        case Format::text: payload = torsion::count_text(pt, fc, cap); break;
        case Format::json: payload = torsion::json_dump(torsion::count_json(pt, fc, cap)); break;
        case Format::csv: payload = torsion::count_csv(pt); break;
    }
    emit(payload, out);
    return torsion::combined_verdict(pt) == torsion::Verdict::mismatch ? 2 : 0;
}

int run_enumerate(torsion::u64 n, torsion::u64 p, bool materialize, Format fmt,
                  const std::string& out) {
    torsion::require_odd_prime_coprime(n, p);
    const torsion::GroupSpec g(n, p);
    const auto descs = torsion::family_descriptors(g);
    if (materialize) torsion::materialize_families(g);  // order-verifies every member
    std::string payload;
    switch (fmt) {
        case Format::text: payload = torsion::enumerate_text(g, descs); break;
        case Format::json:
            payload = torsion::json_dump(torsion::enumerate_json(g, descs, materialize));
            break;
        case Format::csv: payload = torsion::enumerate_csv(g, descs, materialize); break;
    }
    emit(payload, out);
    return 0;
}

int run_table(torsion::u64 n, torsion::u64 p, Format fmt, const std::string& out) {
    const auto [part1, part2] = torsion::order_table(n, p);
    if (fmt == Format::csv) {
        if (out.empty()) {
            std::cout << torsion::table_csv(part1) << "\n" << torsion::table_csv(part2);
        } else {
            const std::string stem = strip_csv_suffix(out);
            emit(torsion::table_csv(part1), stem + ".part1.csv");
            emit(torsion::table_csv(part2), stem + ".part2.csv");
        }
        return 0;
    }
    const std::string payload = fmt == Format::json
                                    ? torsion::json_dump(torsion::table_json(part1, part2))
                                    : torsion::table_text(part1, part2);
    emit(payload, out);
    return 0;
}

int run_verify(const std::string& n_range, std::vector<torsion::u64> p_set, torsion::u64 cap,
               unsigned jobs, Format fmt, const std::string& out) {
    torsion::VerifyConfig cfg;
    std::tie(cfg.n_min, cfg.n_max) = parse_range(n_range);
    cfg.p_set = std::move(p_set);
    cfg.cap = cap;
    cfg.jobs = jobs;
    const torsion::VerifySweep sweep = torsion::run_verify(cfg);
    std::string payload;
    switch (fmt) {
        case Format::text: payload = torsion::verify_text(sweep); break;
        case Format::json: payload = torsion::json_dump(torsion::verify_json(sweep)); break;
        case Format::csv: payload = torsion::verify_csv(sweep); break;
    }
    emit(payload, out);
    return sweep.all_match ? 0 : 2;
}

int run_gapscript(torsion::u64 n, torsion::u64 p, const std::string& mode, Format fmt,
                  const std::string& out) {
    const torsion::GapScriptMode m = mode == "cyclic" ? torsion::GapScriptMode::cyclic
                                                      : torsion::GapScriptMode::subgroups;
    const std::string payload = fmt == Format::json
                                    ? torsion::json_dump(torsion::gapscript_json(n, p, m))
                                    : torsion::gap_script(n, p, m);
    emit(payload, out);
    return 0;
}

int run_prop46(torsion::u64 n, torsion::u64 m, torsion::u64 cap, Format fmt,
               const std::string& out) {
    const torsion::GroupSpec g(n, m);
    const torsion::EquivalenceProbe probe = torsion::prop46_check(g, cap);
    const std::string payload = fmt == Format::json
                                    ? torsion::json_dump(torsion::prop46_json(probe))
                                    : torsion::prop46_text(probe);
    emit(payload, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgroup structure of dicyclic(4n) x cyclic(p) groups"};
    app.require_subcommand(1);

    const torsion::u64 default_cap = torsion::default_oracle_cap();

    // count
    auto* count = app.add_subcommand("count", "closed-form subgroup counts, brute-checked");
    torsion::u64 count_n = 1, count_p = 3, count_cap = default_cap;
    Format count_fmt = Format::text;
    std::string count_out;
    count->add_option("--n", count_n, "dicyclic parameter n")->required()->check(CLI::PositiveNumber);
    count->add_option("--p", count_p, "cyclic factor order")->required()->check(CLI::PositiveNumber);
    count->add_option("--cap", count_cap, "brute-force group-order cap")->check(CLI::PositiveNumber);
    count->add_option("--format", count_fmt, "output format")
        ->transform(CLI::CheckedTransformer(kAllFormats, CLI::ignore_case));
    count->add_option("--out", count_out, "write output to file instead of stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list every subgroup by family");
    torsion::u64 enum_n = 1, enum_p = 3;
    bool enum_mat = false;
    Format enum_fmt = Format::text;
    std::string enum_out;
    enumerate->add_option("--n", enum_n, "dicyclic parameter n")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--p", enum_p, "cyclic factor order")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--materialize", enum_mat, "expand each subgroup and verify its order");
    enumerate->add_option("--format", enum_fmt, "output format")
        ->transform(CLI::CheckedTransformer(kAllFormats, CLI::ignore_case));
    enumerate->add_option("--out", enum_out, "write output to file instead of stdout");

    // table
    auto* table = app.add_subcommand("table", "subgroup counts indexed by order");
    torsion::u64 table_n = 1, table_p = 3;
    Format table_fmt = Format::text;
    std::string table_out;
    table->add_option("--n", table_n, "dicyclic parameter n")->required()->check(CLI::PositiveNumber);
    table->add_option("--p", table_p, "cyclic factor order")->required()->check(CLI::PositiveNumber);
    table->add_option("--format", table_fmt, "output format")
        ->transform(CLI::CheckedTransformer(kAllFormats, CLI::ignore_case));
    table->add_option("--out", table_out,
                      "output file; csv writes <stem>.part1.csv and <stem>.part2.csv");

    // verify
    auto* verify = app.add_subcommand("verify", "sweep closed forms against brute force");
    std::string verify_n = "1..30";
    std::vector<torsion::u64> verify_p{3, 5, 7};
    torsion::u64 verify_cap = default_cap;
    unsigned verify_jobs = 1;
    Format verify_fmt = Format::text;
    std::string verify_out;
    verify->add_option("--n", verify_n, "n range, N or LO..HI (default 1..30)");
    verify->add_option("--p", verify_p, "cyclic factor orders (default 3,5,7)")->delimiter(',');
    verify->add_option("--cap", verify_cap, "brute-force group-order cap")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", verify_jobs, "worker threads; never affects output bytes")
        ->check(CLI::Range(1u, 256u));
    verify->add_option("--format", verify_fmt, "output format")
        ->transform(CLI::CheckedTransformer(kAllFormats, CLI::ignore_case));
    verify->add_option("--out", verify_out, "write output to file instead of stdout");

    // gapscript
    auto* gapscript = app.add_subcommand("gapscript", "emit a GAP cross-check script");
    torsion::u64 gap_n = 1, gap_p = 3;
    std::string gap_mode = "subgroups";
    Format gap_fmt = Format::text;
    std::string gap_out;
    gapscript->add_option("--n", gap_n, "dicyclic parameter n")->required()->check(CLI::PositiveNumber);
    gapscript->add_option("--p", gap_p, "cyclic factor order")->required()->check(CLI::PositiveNumber);
    gapscript->add_option("--mode", gap_mode, "subgroups | cyclic")
        ->check(CLI::IsMember({"subgroups", "cyclic"}));
    gapscript->add_option("--format", gap_fmt, "output format")
        ->transform(CLI::CheckedTransformer(kNoCsvFormats, CLI::ignore_case));
    gapscript->add_option("--out", gap_out, "write output to file instead of stdout");

    // prop46
    auto* prop46 = app.add_subcommand("prop46", "test the cyclicizer-subgroup equivalence");
    torsion::u64 p46_n = 1, p46_m = 1, p46_cap = default_cap;
    Format p46_fmt = Format::text;
    std::string p46_out;
    prop46->add_option("--n", p46_n, "dicyclic parameter n")->required()->check(CLI::PositiveNumber);
    prop46->add_option("--m", p46_m, "cyclic factor order (any positive integer)")
        ->check(CLI::PositiveNumber);
    prop46->add_option("--cap", p46_cap, "brute-force group-order cap")->check(CLI::PositiveNumber);
    prop46->add_option("--format", p46_fmt, "output format")
        ->transform(CLI::CheckedTransformer(kNoCsvFormats, CLI::ignore_case));
    prop46->add_option("--out", p46_out, "write output to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (count->parsed()) return run_count(count_n, count_p, count_cap, count_fmt, count_out);
        if (enumerate->parsed())
            return run_enumerate(enum_n, enum_p, enum_mat, enum_fmt, enum_out);
        if (table->parsed()) return run_table(table_n, table_p, table_fmt, table_out);
        if (verify->parsed())
            return run_verify(verify_n, verify_p, verify_cap, verify_jobs, verify_fmt, verify_out);
        if (gapscript->parsed()) return run_gapscript(gap_n, gap_p, gap_mode, gap_fmt, gap_out);
        if (prop46->parsed()) return run_prop46(p46_n, p46_m, p46_cap, p46_fmt, p46_out);
    } catch (const torsion::hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const torsion::resource_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
