// Watson lambda_p transformations on diagonal ternary lattices, the
// stabilization chain, inverse images and missing-prime candidates.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/forms.hpp"
#include "tritri/local.hpp"

namespace tritri {

namespace detail {

struct PSplit {
    // Coefficients written as p^exp * unit, ordered by exponent.
    std::array<Valuation, 3> parts;
};

inline PSplit split_by_valuation(const Coeffs& c, i64 p) {
    PSplit s{};
    for (std::size_t i = 0; i < 3; ++i) s.parts[i] = valuation_unchecked(c[i], p);
    std::stable_sort(s.parts.begin(), s.parts.end(),
                     [](const Valuation& x, const Valuation& y) { return x.exponent < y.exponent; });
    const int base = s.parts[0].exponent;
    for (auto& part : s.parts) part.exponent -= base;
    return s;
}

inline i64 scaled(i64 unit, i64 p, int exp) { return checked_mul(unit, ipow(p, exp)); }

}  // namespace detail

/// lambda_p(<a, p^m b, p^n c>) with a,b,c units at p and m <= n.
inline DiagLattice lambda_p(const DiagLattice& L, i64 p) {
    require_odd_prime(p);
    const auto s = detail::split_by_valuation(L.coeffs(), p);
    const i64 a = s.parts[0].unit, b = s.parts[1].unit, c = s.parts[2].unit;
    const int m = s.parts[1].exponent, n = s.parts[2].exponent;
    Coeffs out;
    if (n == 0) {
        out = {a, b, c};
    } else if (m == 0) {
        // Lambda_p = <p^2 a, p^2 b, p^n c>, rescaled by p or p^2.
        out = (n == 1) ? Coeffs{checked_mul(p, a), checked_mul(p, b), c}
                       : Coeffs{a, b, detail::scaled(c, p, n - 2)};
    } else if (m == 1) {
        out = {checked_mul(p, a), b, detail::scaled(c, p, n - 1)};
    } else {
        out = {a, detail::scaled(b, p, m - 2), detail::scaled(c, p, n - 2)};
    }
    return DiagLattice(out).primitivized();
}

inline TriForm lambda_p(const TriForm& F, i64 p) { return TriForm(lambda_p(DiagLattice(F), p).coeffs()); }

enum class DescentRule { both_scaled, unit_pair_anisotropic, identity };

inline const char* to_string(DescentRule r) {
    switch (r) {
        case DescentRule::both_scaled: return "both_scaled";
        case DescentRule::unit_pair_anisotropic: return "unit_pair_anisotropic";
        case DescentRule::identity: return "identity";
    }
    return "?";
}

struct LambdaStep {
    i64 p = 0;
    TriForm before;
    TriForm after;
    DescentRule rule = DescentRule::identity;
};

struct Stabilization {
    TriForm stable;
    std::vector<LambdaStep> chain;
};

/// Which regularity-preserving descent applies to F at p, if any.
inline std::optional<DescentRule> descent_rule(const TriForm& F, i64 p) {
    const auto s = detail::split_by_valuation(F.coeffs(), p);
    const int m = s.parts[1].exponent, n = s.parts[2].exponent;
    if (n == 0) return DescentRule::identity;
    if (m >= 1) return DescentRule::both_scaled;
    if (n >= 2 && detail::legendre_product(-s.parts[0].unit, s.parts[1].unit, p) == -1)
        return DescentRule::unit_pair_anisotropic;
    return std::nullopt;
}

/// Applies lambda_p at every odd prime where F is not p-stable, smallest
/// prime first, until the form is stable.
inline Stabilization stabilize(const TriForm& F) {
    Stabilization out{F, {}};
    for (i64 p : odd_prime_divisors(F.discriminant())) {
        while (!is_p_stable(DiagLattice(out.stable), p).stable) {
            const auto rule = descent_rule(out.stable, p);
            if (!rule || *rule == DescentRule::identity)
                throw std::logic_error("no descent rule applies to unstable form " + out.stable.to_string() +
                                       " at p=" + std::to_string(p));
            const TriForm next = lambda_p(out.stable, p);
            out.chain.push_back({p, out.stable, next, *rule});
            out.stable = next;
        }
    }
    return out;
}

struct PreimageSet {
    TriForm base;
    i64 p = 0;
    int r = 0;
    int s = 0;
    std::string row;
    std::vector<TriForm> images;  // canonical, sorted, no duplicates
};

/// Forms whose lambda_p image is F, one row per valuation pattern (r,s)
/// of F = Delta(a, p^r b, p^s c).
inline PreimageSet preimages(const TriForm& F, i64 p) {
    require_odd_prime(p);
    const auto sp = detail::split_by_valuation(F.coeffs(), p);
    const i64 a = sp.parts[0].unit, b = sp.parts[1].unit, c = sp.parts[2].unit;
    const int r = sp.parts[1].exponent, s = sp.parts[2].exponent;
    auto P = [&](int e) { return ipow(p, e); };
    std::vector<Coeffs> raw;
    std::string row;
    if (r == 0 && s == 0) {
        row = "r=s=0";
        raw = {{P(2) * a, b, c},        {a, P(2) * b, c},        {a, b, P(2) * c},
               {P(2) * a, P(2) * b, c}, {P(2) * a, b, P(2) * c}, {a, P(2) * b, P(2) * c}};
    } else if (r == 0 && s == 1) {
        row = "r=0,s=1";
        raw = {{p * a, p * b, c}, {a, P(2) * b, P(3) * c}, {P(2) * a, b, P(3) * c}, {a, b, P(3) * c}};
    } else if (r == 0) {
        row = "r=0,s>=2";
        raw = {{a, P(2) * b, P(s + 2) * c}, {P(2) * a, b, P(s + 2) * c}, {a, b, P(s + 2) * c}};
    } else if (r == 1 && s == 1) {
        row = "r=s=1";
        raw = {{p * a, b, P(2) * c}, {p * a, P(2) * b, c}, {p * a, b, c}, {a, P(3) * b, P(3) * c}};
    } else if (r == 1) {
        row = "r=1,s>=2";
        raw = {{p * a, b, P(s + 1) * c}, {a, P(3) * b, P(s + 2) * c}};
    } else {
        row = "r>=2";
        raw = {{a, P(r + 2) * b, P(s + 2) * c}};
    }
    std::set<TriForm> uniq;
    for (const auto& co : raw) uniq.insert(TriForm(co));
    return {F, p, r, s, row, {uniq.begin(), uniq.end()}};
}

struct MissingPrimeCandidates {
    std::vector<TriForm> scaled_pair;    // Delta(a, l^2 b, l^2 c)
    std::vector<TriForm> scaled_single;  // Delta(a, b, l^2 c) with (-ab/l) = -1
};

inline MissingPrimeCandidates missing_prime_candidates(const TriForm& S, i64 l) {
    require_odd_prime(l);
    if (S.discriminant() % l == 0)
        throw std::invalid_argument("missing-prime candidate needs l coprime to the discriminant");
    const i64 l2 = checked_mul(l, l);
    std::set<TriForm> pair, single;
    const Coeffs& c = S.coeffs();
    for (std::size_t keep = 0; keep < 3; ++keep) {
        Coeffs x = c;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != keep) x[j] = checked_mul(x[j], l2);
        pair.insert(TriForm(x));
    }
    for (std::size_t scaled_idx = 0; scaled_idx < 3; ++scaled_idx) {
        const std::size_t i = (scaled_idx + 1) % 3, j = (scaled_idx + 2) % 3;
        if (detail::legendre_product(-c[i], c[j], l) != -1) continue;
        Coeffs x = c;
        x[scaled_idx] = checked_mul(x[scaled_idx], l2);
        single.insert(TriForm(x));
    }
    return {{pair.begin(), pair.end()}, {single.begin(), single.end()}};
}

}  // namespace tritri
