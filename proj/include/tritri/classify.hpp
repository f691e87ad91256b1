// Search harnesses: stable search, the a in [3,10] exclusion, the lambda
// tree, missing primes, v_k counts and E-set checks.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tritri/bounds.hpp"
#include "tritri/cache.hpp"
#include "tritri/golden.hpp"
#include "tritri/parallel.hpp"
#include "tritri/scan.hpp"
#include "tritri/watson.hpp"

namespace tritri {

struct ScanOptions {
    unsigned jobs = 1;
    ScanCache* cache = nullptr;
    json config = json::object();  // snapshot written into certificates
};

/// Scans every form at limit N. Output order follows the input order.
inline std::vector<RegularityReport> scan_many(const std::vector<TriForm>& forms, i64 N, const ScanOptions& opt) {
    std::vector<std::optional<RegularityReport>> slots(forms.size());
    std::vector<std::size_t> todo;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        if (opt.cache) slots[k] = opt.cache->lookup(forms[k], N);
        if (!slots[k]) todo.push_back(k);
    }
    parallel_for(opt.jobs, todo.size(), [&](std::size_t t) { slots[todo[t]] = regularity_scan(forms[todo[t]], N); });
    if (opt.cache)
        for (std::size_t k : todo) opt.cache->store(*slots[k], opt.config);
    std::vector<RegularityReport> out;
    out.reserve(forms.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// Rescans clean reports of forms outside `expected` at 10N. Returns the
/// forms that were escalated.
inline std::vector<TriForm> escalate_unexpected(std::vector<RegularityReport>& reports,
                                                const std::vector<TriForm>& expected, i64 N,
                                                const ScanOptions& opt) {
    const std::set<TriForm> known(expected.begin(), expected.end());
    std::vector<std::size_t> idx;
    std::vector<TriForm> forms;
    for (std::size_t k = 0; k < reports.size(); ++k)
        if (reports[k].clean() && !known.count(reports[k].form)) {
            idx.push_back(k);
            forms.push_back(reports[k].form);
        }
    if (forms.empty()) return forms;
    auto again = scan_many(forms, checked_mul(N, 10), opt);
    for (std::size_t t = 0; t < idx.size(); ++t) reports[idx[t]] = std::move(again[t]);
    return forms;
}

struct SearchResult {
    std::vector<TriForm> candidates;  // stable primitive forms examined
    std::vector<RegularityReport> reports;
    std::vector<TriForm> survivors;  // sorted
    std::vector<TriForm> escalated;
};

inline SearchResult finish_search(std::vector<TriForm> candidates, i64 N, const ScanOptions& opt,
                                  const std::vector<TriForm>& expected) {
    SearchResult out;
    out.candidates = std::move(candidates);
    out.reports = scan_many(out.candidates, N, opt);
    out.escalated = escalate_unexpected(out.reports, expected, N, opt);
    for (const auto& r : out.reports)
        if (r.clean()) out.survivors.push_back(r.form);
    std::sort(out.survivors.begin(), out.survivors.end());
    return out;
}

/// Stable forms with a in {1,2}, a+b <= 21, c <= c_max.
inline std::vector<TriForm> stable_candidates(i64 c_max) {
    std::vector<TriForm> out;
    for (i64 a = 1; a <= 2; ++a)
        for (i64 b = a; a + b <= 21; ++b)
            for (i64 c = b; c <= c_max; ++c) {
                if (gcd3(a, b, c) != 1) continue;
                const TriForm F(a, b, c);
                if (is_stable(DiagLattice(F))) out.push_back(F);
            }
    return out;
}

inline SearchResult stable_search(i64 c_max, i64 N, const ScanOptions& opt = {}) {
    return finish_search(stable_candidates(c_max), N, opt, golden::stable17());
}

/// Stable forms with 3 <= a <= 10 under the per-a bounds on c.
inline std::vector<TriForm> exclusion_candidates() {
    std::vector<TriForm> out;
    for (const auto& [a, c_max] : golden::exclusion_bounds())
        for (i64 b = a; b <= c_max; ++b)
            for (i64 c = b; c <= c_max; ++c) {
                if (gcd3(a, b, c) != 1) continue;
                const TriForm F(a, b, c);
                if (is_stable(DiagLattice(F))) out.push_back(F);
            }
    std::sort(out.begin(), out.end());
    return out;
}

inline SearchResult exclusion_scan_a3to10(i64 N, const ScanOptions& opt = {}) {
    return finish_search(exclusion_candidates(), N, opt, {});
}

struct TreeEntry {
    TriForm form;
    std::optional<TriForm> parent;
    i64 prime = 0;
    int depth = 0;
    RegularityReport report;
};

struct LambdaTree {
    std::vector<TriForm> roots;
    std::vector<i64> primes;
    i64 limit = 0;
    int max_depth = 0;
    std::vector<TreeEntry> nodes;  // breadth-first, sorted within each level
    std::vector<std::string> warnings;
    std::vector<TriForm> escalated;

    const TreeEntry* find(const TriForm& F) const {
        for (const auto& n : nodes)
            if (n.form == F) return &n;
        return nullptr;
    }

    std::vector<TriForm> clean_forms() const {
        std::vector<TriForm> out;
        for (const auto& n : nodes)
            if (n.report.clean()) out.push_back(n.form);
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Breadth-first expansion through inverse lambda_p images. Only clean
/// nodes are expanded; a clean node at max_depth is reported, not expanded.
inline LambdaTree expand_tree(const std::vector<TriForm>& roots, const std::vector<i64>& primes, i64 N,
                              int max_depth, const ScanOptions& opt = {},
                              const std::vector<TriForm>& expected = golden::regular49()) {
    LambdaTree tree{roots, primes, N, max_depth, {}, {}, {}};
    std::set<TriForm> seen;
    std::vector<TreeEntry> level;
    for (const auto& r : std::set<TriForm>(roots.begin(), roots.end())) {
        seen.insert(r);
        level.push_back({r, std::nullopt, 0, 0, RegularityReport{r, N, std::nullopt, 0}});
    }
    for (int depth = 0; !level.empty(); ++depth) {
        std::vector<TriForm> forms;
        for (const auto& e : level) forms.push_back(e.form);
        auto reports = scan_many(forms, N, opt);
        const auto esc = escalate_unexpected(reports, expected, N, opt);
        tree.escalated.insert(tree.escalated.end(), esc.begin(), esc.end());
        for (std::size_t k = 0; k < level.size(); ++k) level[k].report = std::move(reports[k]);

        std::vector<TreeEntry> next;
        for (const auto& e : level) {
            if (!e.report.clean()) continue;
            if (depth >= max_depth) {
                tree.warnings.push_back("clean node " + e.form.to_string() + " at max depth " +
                                        std::to_string(max_depth) + "; tree may be unfinished");
                continue;
            }
            for (i64 p : primes)
                for (const auto& img : preimages(e.form, p).images)
                    if (seen.insert(img).second)
                        next.push_back({img, e.form, p, depth + 1, RegularityReport{img, N, std::nullopt, 0}});
        }
        std::sort(next.begin(), next.end(), [](const TreeEntry& x, const TreeEntry& y) { return x.form < y.form; });
        tree.nodes.insert(tree.nodes.end(), level.begin(), level.end());
        level = std::move(next);
    }
    return tree;
}

struct Table3Check {
    golden::TreeNode expected;
    bool present = false;
    bool edge_matches = false;  // same parent and prime
    bool status_matches = false;
    i64 computed = -1;  // least counterexample, 0 when clean, -1 when absent
    bool value_matches = false;
};

/// Compares the listed nodes of the tree over D(1,1,1) with the tree.
inline std::vector<Table3Check> check_table3(const LambdaTree& tree) {
    std::vector<Table3Check> out;
    for (const auto& g : golden::tree_over_111()) {
        Table3Check c{g};
        if (const TreeEntry* e = tree.find(g.form)) {
            c.present = true;
            c.edge_matches = e->parent && *e->parent == g.parent && e->prime == g.p;
            c.computed = e->report.clean() ? 0 : e->report.counterexample->n;
            c.status_matches = e->report.clean() == (g.counterexample == 0);
            c.value_matches = c.computed == g.counterexample;
        }
        out.push_back(c);
    }
    return out;
}

struct MissingPrimeCase {
    TriForm stable;
    i64 l = 0;
    std::string shape;  // "i" or "ii"
    RegularityReport report;
};

struct MissingPrimeReport {
    std::vector<MissingPrimeCase> cases;
    std::vector<MissingPrimeCase> survivors;
};

inline std::vector<i64> primes_between(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 q = std::max<i64>(lo, 3); q <= hi; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

/// Shape (i) over primes in [l_min, l_max], shape (ii) over [l_min, l_max_ii].
inline MissingPrimeReport missing_prime_scan(const std::vector<TriForm>& stable, i64 l_min, i64 l_max,
                                             i64 l_max_ii, i64 N, const ScanOptions& opt = {}) {
    MissingPrimeReport out;
    std::vector<MissingPrimeCase> cases;
    for (i64 l : primes_between(l_min, std::max(l_max, l_max_ii)))
        for (const auto& S : stable) {
            if (S.discriminant() % l == 0) continue;
            const auto cand = missing_prime_candidates(S, l);
            if (l <= l_max)
                for (const auto& F : cand.scaled_pair) cases.push_back({S, l, "i", RegularityReport{F, N, {}, 0}});
            if (l <= l_max_ii)
                for (const auto& F : cand.scaled_single) cases.push_back({S, l, "ii", RegularityReport{F, N, {}, 0}});
        }
    std::vector<TriForm> forms;
    for (const auto& c : cases) forms.push_back(c.report.form);
    auto reports = scan_many(forms, N, opt);
    escalate_unexpected(reports, {}, N, opt);
    for (std::size_t k = 0; k < cases.size(); ++k) {
        cases[k].report = std::move(reports[k]);
        if (cases[k].report.clean()) out.survivors.push_back(cases[k]);
    }
    out.cases = std::move(cases);
    return out;
}

/// Number of n with s_n - c all-odd represented by <a,b>, i.e. distinct
/// values a x^2 + b y^2 (x, y odd) strictly between a + b and k^2 a + b.
inline i64 vk_count(i64 a, i64 b, i64 k) {
    if (a < 1 || b < 1) throw std::invalid_argument("vk_count needs positive a, b");
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("vk_count needs odd k >= 3");
    const i64 hi = checked_add(checked_mul(k * k, a), b);
    std::set<i64> values;
    for (i64 x = 1; a * x * x + b < hi; x += 2)
        for (i64 y = 1; a * x * x + b * y * y < hi; y += 2) {
            const i64 v = a * x * x + b * y * y;
            if (v > a + b) values.insert(v);
        }
    return static_cast<i64>(values.size());
}

/// True iff no element of E is represented by <a,b> over Z.
inline bool eset_check(const std::vector<i64>& E, i64 a, i64 b) {
    return std::all_of(E.begin(), E.end(), [&](i64 e) { return count_binary(e, a, b).total == 0; });
}

}  // namespace tritri
