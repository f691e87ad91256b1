// tritri: command-line front end.
//
// Exit codes: 0 clean, 1 mismatch against embedded reference data,
// 2 usage error, 3 counterexample found, 4 internal error.
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tritri.hpp"

using namespace tritri;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitInternal = 4;

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json forms_json(const std::vector<TriForm>& forms) {
    json a = json::array();
    for (const auto& f : forms) a.push_back(form_json(f));
    return a;
}

std::vector<TriForm> sorted_forms(const std::vector<TriForm>& v) {
    const std::set<TriForm> s(v.begin(), v.end());
    return {s.begin(), s.end()};
}

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed, const char* cmd) {
    for (auto f : allowed)
        if (f == cfg.format) return;
    throw usage_error(std::string("output format not supported by ") + cmd);
}

json verdict_json(const LocalVerdict& v) {
    return {{"p", v.p}, {"represented", v.represented}, {"method", to_string(v.method)}, {"trace", v.trace}};
}

ScanOptions scan_options(const RunConfig& cfg, ScanCache* cache) { return {cfg.jobs, cache, cfg.snapshot()}; }

void print_reports(const RunConfig& cfg, const std::vector<RegularityReport>& reports) {
    if (cfg.format == OutputFormat::csv) {
        std::cout << csv_header() << '\n';
        for (const auto& r : reports) std::cout << csv_row(r) << '\n';
    } else {
        for (const auto& r : reports) std::cout << text_line(r) << '\n';
    }
}

int cmd_check(const RunConfig& cfg, ScanCache* cache, const std::vector<i64>& abc) {
    const TriForm F(abc.at(0), abc.at(1), abc.at(2));
    const auto reports = scan_many({F}, cfg.limit, scan_options(cfg, cache));
    const auto& r = reports.front();
    if (cfg.format == OutputFormat::json) {
        print_json(report_json(r, cfg.snapshot()));
    } else {
        print_reports(cfg, reports);
        if (cfg.format == OutputFormat::text && r.counterexample)
            for (const auto& v : r.counterexample->local_evidence)
                std::cout << "  p=" << v.p << ": " << (v.represented ? "locally represented" : "not represented")
                          << '\n';
    }
    return r.clean() ? kExitClean : kExitCounterexample;
}

int report_search(const RunConfig& cfg, const SearchResult& s, const std::vector<TriForm>& expected,
                  const char* label) {
    const bool match = s.survivors == sorted_forms(expected);
    if (cfg.format == OutputFormat::json) {
        json reports = json::array();
        for (const auto& r : s.reports) reports.push_back(report_json(r, cfg.snapshot()));
        print_json({{"config", cfg.snapshot()},
                    {"candidates", s.candidates.size()},
                    {"survivors", forms_json(s.survivors)},
                    {"expected", forms_json(sorted_forms(expected))},
                    {"matches_reference", match},
                    {"escalated", forms_json(s.escalated)},
                    {"reports", reports}});
    } else if (cfg.format == OutputFormat::csv) {
        print_reports(cfg, s.reports);
    } else {
        std::cout << label << ": " << s.candidates.size() << " candidates, " << s.survivors.size()
                  << " survivors\n";
        for (const auto& f : s.survivors) std::cout << "  " << f << '\n';
        for (const auto& f : s.escalated) std::cout << "  escalated to " << 10 * cfg.limit << ": " << f << '\n';
        std::cout << (match ? "matches reference list\n" : "DIFFERS from reference list\n");
    }
    return match ? kExitClean : kExitMismatch;
}

json tree_json(const RunConfig& cfg, const LambdaTree& tree) {
    json nodes = json::array();
    for (const auto& n : tree.nodes)
        nodes.push_back({{"form", form_json(n.form)},
                         {"parent", n.parent ? form_json(*n.parent) : json(nullptr)},
                         {"prime", n.prime},
                         {"depth", n.depth},
                         {"report", report_json(n.report, cfg.snapshot())}});
    json t3 = json::array();
    for (const auto& c : check_table3(tree))
        t3.push_back({{"form", form_json(c.expected.form)},
                      {"parent", form_json(c.expected.parent)},
                      {"prime", c.expected.p},
                      {"printed", c.expected.counterexample},
                      {"computed", c.computed},
                      {"present", c.present},
                      {"edge_matches", c.edge_matches},
                      {"status_matches", c.status_matches},
                      {"value_matches", c.value_matches}});
    const auto clean = tree.clean_forms();
    return {{"config", cfg.snapshot()},
            {"roots", forms_json(sorted_forms(tree.roots))},
            {"primes", tree.primes},
            {"nodes", nodes},
            {"clean_forms", forms_json(clean)},
            {"matches_table4", clean == sorted_forms(golden::regular49())},
            {"table3", t3},
            {"warnings", tree.warnings},
            {"escalated", forms_json(tree.escalated)}};
}

int cmd_tree(const RunConfig& cfg, ScanCache* cache, bool roots_from_search) {
    const auto opt = scan_options(cfg, cache);
    std::vector<TriForm> roots = golden::stable17();
    if (roots_from_search) roots = stable_search(cfg.c_max, cfg.limit, opt).survivors;
    const auto tree = expand_tree(roots, {3, 5, 7}, cfg.limit, cfg.max_depth, opt);
    const auto clean = tree.clean_forms();
    const bool match = clean == sorted_forms(golden::regular49());
    if (cfg.format == OutputFormat::json) {
        print_json(tree_json(cfg, tree));
    } else if (cfg.format == OutputFormat::csv) {
        std::vector<RegularityReport> reports;
        for (const auto& n : tree.nodes) reports.push_back(n.report);
        print_reports(cfg, reports);
    } else {
        std::cout << "tree: " << tree.nodes.size() << " nodes, " << clean.size() << " clean\n";
        for (const auto& n : tree.nodes) {
            std::cout << std::string(static_cast<std::size_t>(2 * n.depth), ' ') << n.form;
            if (n.parent) std::cout << " -> " << *n.parent << " (lambda_" << n.prime << ")";
            std::cout << (n.report.clean() ? "  clean" : "  (" + std::to_string(n.report.counterexample->n) + ")")
                      << '\n';
        }
        for (const auto& w : tree.warnings) std::cout << "warning: " << w << '\n';
        std::cout << (match ? "clean set matches the 49 reference forms\n" : "clean set DIFFERS from reference\n");
    }
    return match ? kExitClean : kExitMismatch;
}

int cmd_missing(const RunConfig& cfg, ScanCache* cache) {
    const auto rep = missing_prime_scan(golden::stable17(), 11, 131, 23, cfg.limit, scan_options(cfg, cache));
    if (cfg.format == OutputFormat::json) {
        json cases = json::array();
        for (const auto& c : rep.cases)
            cases.push_back({{"stable", form_json(c.stable)},
                             {"l", c.l},
                             {"shape", c.shape},
                             {"report", report_json(c.report, cfg.snapshot())}});
        json surv = json::array();
        for (const auto& c : rep.survivors) surv.push_back(form_json(c.report.form));
        print_json({{"config", cfg.snapshot()}, {"cases", cases}, {"survivors", surv}});
    } else {
        std::vector<RegularityReport> reports;
        for (const auto& c : rep.cases) reports.push_back(c.report);
        if (cfg.format == OutputFormat::csv) {
            print_reports(cfg, reports);
        } else {
            std::cout << "missing primes: " << rep.cases.size() << " candidates, " << rep.survivors.size()
                      << " survivors\n";
            for (const auto& c : rep.survivors) std::cout << "  survivor " << c.report.form << '\n';
        }
    }
    return rep.survivors.empty() ? kExitClean : kExitMismatch;
}

int cmd_table1(const RunConfig& cfg) {
    const auto& ref = golden::table1();
    const auto got = table1(golden::table1_indices());
    json diffs = json::array();
    for (std::size_t k = 0; k < ref.size(); ++k)
        for (std::size_t j = 0; j < ref[k].values.size(); ++j)
            if (ref[k].values[j] != got[k].values[j])
                diffs.push_back({{"i", ref[k].i}, {"j", j + 1}, {"printed", ref[k].values[j]}, {"computed", got[k].values[j]}});
    if (cfg.format == OutputFormat::json) {
        json rows = json::array();
        for (const auto& r : got) rows.push_back({{"i", r.i}, {"values", r.values}});
        print_json({{"rows", rows}, {"diffs", diffs}});
    } else if (cfg.format == OutputFormat::csv) {
        std::cout << "i";
        for (int j = 1; j <= kTable1Columns; ++j) std::cout << ",a_i" << j;
        std::cout << '\n';
        for (const auto& r : got) {
            std::cout << r.i;
            for (i64 v : r.values) std::cout << ',' << v;
            std::cout << '\n';
        }
    } else {
        for (const auto& r : got) {
            std::cout << r.i << ':';
            for (i64 v : r.values) std::cout << ' ' << v;
            std::cout << '\n';
        }
        std::cout << diffs.size() << " differences from the reference table\n";
    }
    return diffs.empty() ? kExitClean : kExitMismatch;
}

int cmd_identities(const RunConfig& cfg) {
    require_format(cfg, {OutputFormat::text, OutputFormat::json}, "identities");
    json results = json::object();
    bool all = true;
    auto record = [&](const std::string& name, const CheckResult& r) {
        results[name] = {{"ok", r.ok}, {"checked", r.checked}, {"first_failure", r.first_failure}};
        all = all && r.ok;
    };
    record("odd_ratio", verify_odd_ratio(10000));
    record("mod3_witness", verify_mod3_witness(5000));
    for (auto id : {CountIdentity::i3, CountIdentity::i12, CountIdentity::i17, CountIdentity::i30})
        record(std::string("count_") + to_string(id), verify_count_identity(id, 2000));
    for (const auto& F : golden::parity_forcing()) record("parity_" + F.to_string(), verify_parity_forcing(F, 2000));
    for (const auto& inst : isometry_instances()) {
        const auto r = verify_isometry(inst);
        results["isometry_" + r.name] = {{"ok", r.ok()},
                                         {"preserves_gram", r.preserves_gram},
                                         {"det", r.det.to_string()},
                                         {"kernel_dimension", r.kernel_dimension},
                                         {"fixed_vector_in_kernel", r.fixed_vector_in_kernel}};
        all = all && r.ok();
    }
    if (cfg.format == OutputFormat::json) {
        print_json({{"all_ok", all}, {"results", results}});
    } else {
        for (const auto& [name, r] : results.items())
            std::cout << (r["ok"].get<bool>() ? "ok    " : "FAIL  ") << name << '\n';
    }
    return all ? kExitClean : kExitMismatch;
}

int cmd_local(const RunConfig& cfg, const std::vector<i64>& args, bool oracle) {
    require_format(cfg, {OutputFormat::text, OutputFormat::json}, "local");
    const DiagLattice L(args.at(0), args.at(1), args.at(2));
    const i64 m = args.at(3), p = args.at(4);
    const LocalVerdict v = oracle ? decide_zp_oracle(L, m, p) : decide_zp(L, m, p, true);
    if (cfg.format == OutputFormat::json) {
        json j = verdict_json(v);
        j["lattice"] = json::array({L[0], L[1], L[2]});
        j["m"] = m;
        print_json(j);
    } else {
        std::cout << m << (v.represented ? " is represented by " : " is not represented by ") << L << " over Z_"
                  << p << " (" << to_string(v.method) << ")\n";
        for (const auto& s : v.trace) std::cout << "  " << s << '\n';
    }
    return kExitClean;
}

int cmd_lambda(const RunConfig& cfg, const std::vector<i64>& args) {
    require_format(cfg, {OutputFormat::text, OutputFormat::json}, "lambda");
    const TriForm F(args.at(0), args.at(1), args.at(2));
    const i64 p = args.at(3);
    const TriForm image = lambda_p(F, p);
    const auto st = stabilize(F);
    if (cfg.format == OutputFormat::json) {
        json chain = json::array();
        for (const auto& s : st.chain)
            chain.push_back({{"p", s.p}, {"before", form_json(s.before)}, {"after", form_json(s.after)}, {"rule", to_string(s.rule)}});
        print_json({{"form", form_json(F)}, {"p", p}, {"image", form_json(image)}, {"stable", form_json(st.stable)}, {"chain", chain}});
    } else {
        std::cout << "lambda_" << p << "(" << F << ") = " << image << '\n';
        std::cout << "stabilization: " << F;
        for (const auto& s : st.chain) std::cout << " -> " << s.after << " [lambda_" << s.p << ", " << to_string(s.rule) << "]";
        std::cout << '\n';
    }
    return kExitClean;
}

int cmd_preimages(const RunConfig& cfg, const std::vector<i64>& args) {
    require_format(cfg, {OutputFormat::text, OutputFormat::json}, "preimages");
    const TriForm F(args.at(0), args.at(1), args.at(2));
    const auto set = preimages(F, args.at(3));
    if (cfg.format == OutputFormat::json) {
        print_json({{"base", form_json(F)}, {"p", set.p}, {"row", set.row}, {"images", forms_json(set.images)}});
    } else {
        std::cout << "row " << set.row << ":";
        for (const auto& f : set.images) std::cout << ' ' << f;
        std::cout << '\n';
    }
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ternary triangular forms: local decisions, lambda transformations and regularity scans"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.jobs = default_jobs();
    std::string format = "text";
    auto* limit_opt = app.add_option("--limit", cfg.limit, "scan bound N")->check(CLI::PositiveNumber);
    app.add_option("--c-max", cfg.c_max, "largest c in the stable search")->check(CLI::PositiveNumber);
    app.add_option("--max-depth", cfg.max_depth, "tree depth bound")->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", cfg.cache_path, "JSON-lines result cache");

    std::vector<i64> abc, local_args, lambda_args, pre_args;
    bool oracle = false, roots_from_search = false;

    auto* check = app.add_subcommand("check", "scan one form for the least counterexample");
    check->add_option("coeffs", abc, "a b c")->expected(3)->required();
    auto* scan_stable = app.add_subcommand("scan-stable", "search stable forms with a in {1,2}");
    auto* exclusion = app.add_subcommand("exclusion", "stable forms with 3 <= a <= 10 (default limit 10000)");
    auto* tree = app.add_subcommand("tree", "expand inverse lambda images from the stable roots");
    tree->add_flag("--roots-from-search", roots_from_search, "take roots from a fresh stable search");
    auto* missing = app.add_subcommand("missing-primes", "candidates for missing primes 11..131");
    auto* t1 = app.add_subcommand("table1", "reproduce Table 1 and diff it");
    auto* ids = app.add_subcommand("identities", "count identities, witnesses, parity and isometries");
    auto* local = app.add_subcommand("local", "decide m -> <a,b,c> over Z_p");
    local->add_option("args", local_args, "a b c m p")->expected(5)->required();
    local->add_flag("--oracle", oracle, "use the bounded Hensel search");
    auto* lam = app.add_subcommand("lambda", "apply lambda_p and show the stabilization chain");
    lam->add_option("args", lambda_args, "a b c p")->expected(4)->required();
    auto* pre = app.add_subcommand("preimages", "inverse images of lambda_p");
    pre->add_option("args", pre_args, "a b c p")->expected(4)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    cfg.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::text;

    try {
        std::optional<ScanCache> cache;
        if (!cfg.cache_path.empty()) {
            cache.emplace(cfg.cache_path);
            if (cache->rejected_lines() > 0)
                std::cerr << "cache: dropped " << cache->rejected_lines() << " entries that failed replay\n";
        }
        ScanCache* cp = cache ? &*cache : nullptr;

        if (*check) return cmd_check(cfg, cp, abc);
        if (*scan_stable) return report_search(cfg, stable_search(cfg.c_max, cfg.limit, scan_options(cfg, cp)),
                                               golden::stable17(), "scan-stable");
        if (*exclusion) {
            if (limit_opt->count() == 0) cfg.limit = 10000;
            return report_search(cfg, exclusion_scan_a3to10(cfg.limit, scan_options(cfg, cp)), {}, "exclusion");
        }
        if (*tree) return cmd_tree(cfg, cp, roots_from_search);
        if (*missing) return cmd_missing(cfg, cp);
        if (*t1) return cmd_table1(cfg);
        if (*ids) return cmd_identities(cfg);
        if (*local) return cmd_local(cfg, local_args, oracle);
        if (*lam) return cmd_lambda(cfg, lambda_args);
        if (*pre) return cmd_preimages(cfg, pre_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
