// Certificates, report serialization and the JSON-lines scan cache.
#pragma once

#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tritri/scan.hpp"

namespace tritri {

using json = nlohmann::json;

inline constexpr const char* kEngineVersion = "tritri-1.0.0";

enum class OutputFormat { text, json, csv };

struct RunConfig {
    i64 limit = 100000;
    i64 c_max = 500;
    int max_depth = 6;
    unsigned jobs = 1;
    OutputFormat format = OutputFormat::text;
    std::string cache_path;

    json snapshot() const { return {{"limit", limit}, {"c_max", c_max}, {"max_depth", max_depth}}; }
};

inline json form_json(const TriForm& F) { return json::array({F.a(), F.b(), F.c()}); }

inline TriForm form_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("form must be a 3-element array");
    return TriForm(j[0].get<i64>(), j[1].get<i64>(), j[2].get<i64>());
}

inline json certificate_json(const TriForm& F, const Counterexample& ce, const json& config) {
    json evidence = json::array();
    for (const auto& v : ce.local_evidence) evidence.push_back({{"p", v.p}, {"represented", v.represented}});
    return {{"form", form_json(F)},
            {"n", ce.n},
            {"s_n", ce.s_n},
            {"local_evidence", evidence},
            {"global_all_odd_count", 0},
            {"engine_version", kEngineVersion},
            {"config", config}};
}

/// Recomputes every field of a certificate. Returns the counterexample when
/// it replays exactly, nothing otherwise.
inline std::optional<Counterexample> replay_certificate(const json& cert) {
    try {
        const TriForm F = form_from_json(cert.at("form"));
        const i64 n = cert.at("n").get<i64>();
        if (n < 1 || cert.at("s_n").get<i64>() != F.target(n)) return std::nullopt;
        if (cert.at("global_all_odd_count").get<i64>() != 0) return std::nullopt;
        if (exists_all_odd(F.target(n), DiagLattice(F))) return std::nullopt;
        const auto local = locally_represented(F, n);
        if (!local.represented) return std::nullopt;
        const auto& ev = cert.at("local_evidence");
        if (ev.size() != local.per_prime.size()) return std::nullopt;
        for (std::size_t k = 0; k < ev.size(); ++k) {
            if (ev[k].at("p").get<i64>() != local.per_prime[k].p) return std::nullopt;
            if (ev[k].at("represented").get<bool>() != local.per_prime[k].represented) return std::nullopt;
        }
        return Counterexample{n, F.target(n), local.per_prime};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline json report_json(const RegularityReport& r, const json& config) {
    json j = {{"form", form_json(r.form)},
              {"limit", r.limit},
              {"scanned", r.scanned},
              {"status", r.clean() ? "clean" : "counterexample"}};
    if (r.counterexample) {
        j["counterexample_n"] = r.counterexample->n;
        j["certificate"] = certificate_json(r.form, *r.counterexample, config);
    } else {
        j["counterexample_n"] = nullptr;
    }
    return j;
}

inline std::string csv_header() { return "a,b,c,status,counterexample_n,limit"; }

inline std::string csv_row(const RegularityReport& r) {
    std::ostringstream os;
    os << r.form.a() << ',' << r.form.b() << ',' << r.form.c() << ',' << (r.clean() ? "clean" : "counterexample")
       << ',' << (r.counterexample ? std::to_string(r.counterexample->n) : "") << ',' << r.limit;
    return os.str();
}

inline std::string text_line(const RegularityReport& r) {
    if (r.clean())
        return r.form.to_string() + ": no counterexample up to " + std::to_string(r.limit) + " (" +
               std::to_string(r.scanned) + " locally represented n checked)";
    return r.form.to_string() + ": counterexample n=" + std::to_string(r.counterexample->n) +
           " (s_n=" + std::to_string(r.counterexample->s_n) + ")";
}

/// JSON-lines cache of scan results. Counterexamples are stored with their
/// certificate and replayed on load; clean results are reused only for
/// limits up to the one they were scanned at.
class ScanCache {
public:
    ScanCache() = default;

    explicit ScanCache(std::string path) : path_(std::move(path)) { load(); }

    std::size_t rejected_lines() const { return rejected_; }
    std::size_t size() const { return entries_.size(); }

    std::optional<RegularityReport> lookup(const TriForm& F, i64 N) const {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = entries_.find(F);
        if (it == entries_.end()) return std::nullopt;
        const Entry& e = it->second;
        if (e.counterexample) {
            if (e.counterexample->n <= N) return RegularityReport{F, N, e.counterexample, e.ce_scanned};
            // The cached counterexample is the least one, so [1, N] is clean.
            return RegularityReport{F, N, std::nullopt, count_locally_represented(F, N)};
        }
        if (e.clean_limit >= N) {
            const i64 scanned = e.clean_limit == N ? e.clean_scanned : count_locally_represented(F, N);
            return RegularityReport{F, N, std::nullopt, scanned};
        }
        return std::nullopt;
    }

    void store(const RegularityReport& r, const json& config) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!absorb(r)) return;
        if (path_.empty()) return;
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot write cache file " + path_);
        out << report_json(r, config).dump() << '\n';
    }

private:
    struct Entry {
        i64 clean_limit = 0;
        i64 clean_scanned = 0;
        std::optional<Counterexample> counterexample;
        i64 ce_scanned = 0;
    };

    // Merges a report; returns true when it added information.
    bool absorb(const RegularityReport& r) {
        Entry& e = entries_[r.form];
        if (e.counterexample) return false;
        if (r.counterexample) {
            e.counterexample = r.counterexample;
            e.ce_scanned = r.scanned;
            return true;
        }
        if (r.limit <= e.clean_limit) return false;
        e.clean_limit = r.limit;
        e.clean_scanned = r.scanned;
        return true;
    }

    void load() {
        std::ifstream in(path_);
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const json j = json::parse(line);
                const TriForm F = form_from_json(j.at("form"));
                RegularityReport r{F, j.at("limit").get<i64>(), std::nullopt, j.at("scanned").get<i64>()};
                if (j.at("status") == "counterexample") {
                    auto ce = replay_certificate(j.at("certificate"));
                    if (!ce || !(form_from_json(j.at("certificate").at("form")) == F)) {
                        ++rejected_;
                        continue;
                    }
                    r.counterexample = std::move(ce);
                } else if (j.at("status") != "clean" || r.limit < 1) {
                    ++rejected_;
                    continue;
                }
                absorb(r);
            } catch (const std::exception&) {
                ++rejected_;
            }
        }
    }

    std::string path_;
    std::map<TriForm, Entry> entries_;
    std::size_t rejected_ = 0;
    mutable std::mutex mutex_;
};

}  // namespace tritri
