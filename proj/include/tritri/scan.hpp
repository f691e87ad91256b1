// Regularity scans: least locally-but-not-globally represented n.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/forms.hpp"
#include "tritri/local.hpp"
#include "tritri/represent.hpp"

namespace tritri {

struct Counterexample {
    i64 n = 0;
    i64 s_n = 0;  // 8n + a + b + c
    std::vector<LocalVerdict> local_evidence;
};

struct RegularityReport {
    TriForm form{1, 1, 1};
    i64 limit = 0;
    std::optional<Counterexample> counterexample;
    i64 scanned = 0;  // locally represented n examined

    bool clean() const { return !counterexample.has_value(); }
};

inline Counterexample make_counterexample(const TriForm& F, i64 n) {
    Counterexample ce{n, F.target(n), locally_represented(F, n).per_prime};
    return ce;
}

/// Scans n = 1..N in doubling windows. Each window marks the globally
/// represented n in one lattice pass; only the rest go to the local test.
inline RegularityReport regularity_scan(const TriForm& F, i64 N) {
    if (N < 1) throw std::invalid_argument("regularity_scan needs N >= 1");
    RegularityReport out{F, N, std::nullopt, 0};
    const LocalChecker local(F);
    i64 lo = 1;
    i64 width = 256;
    while (lo <= N) {
        const i64 hi = std::min(N, lo + width - 1);
        const auto hit = represented_window(F, lo, hi);
        for (i64 n = lo; n <= hi; ++n) {
            const bool global = hit[static_cast<std::size_t>(n - lo)];
            if (global) {
                // Global representation implies local; count it without testing.
                ++out.scanned;
                continue;
            }
            if (local(n)) {
                ++out.scanned;
                out.counterexample = make_counterexample(F, n);
                return out;
            }
        }
        lo = hi + 1;
        width = std::min<i64>(width * 2, i64{1} << 22);
    }
    return out;
}

/// Recomputes the scanned count for a clean prefix [1, N]. Used when a
/// longer clean scan is reused for a shorter limit.
inline i64 count_locally_represented(const TriForm& F, i64 N) {
    const LocalChecker local(F);
    i64 count = 0;
    for (i64 n = 1; n <= N; ++n)
        if (local(n)) ++count;
    return count;
}

}  // namespace tritri
