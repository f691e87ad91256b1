// Counting bounds over arithmetic progressions: digit functions, a_ij and
// b_ij(s), the exact Psi count, coprime progressions and the g-search.
#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/local.hpp"

namespace tritri {

struct DigitExpansion {
    i64 i = 0;
    i64 r = 0;
    std::vector<i64> digits;  // least significant first
    int e = 0;
    int delta = 0;  // ceil(e/2)

    i64 digit(int nu) const { return nu < e ? digits[static_cast<std::size_t>(nu)] : 0; }
};

inline DigitExpansion digit_expansion(i64 i, i64 r) {
    if (i < 1) throw std::invalid_argument("digit_expansion needs i >= 1");
    DigitExpansion out{i, r, {}, 0, 0};
    for (i64 x = i; x > 0; x /= r) out.digits.push_back(x % r);
    out.e = static_cast<int>(out.digits.size());
    out.delta = (out.e + 1) / 2;
    return out;
}

inline int epsilon_ij(i64 i, int j, int k) {
    if (i < 1 || j < 1 || k < 1) throw std::invalid_argument("epsilon_ij needs positive arguments");
    const i64 r = odd_prime(j);
    return i % ipow(r, 2 * k - 1) == 0 ? 0 : 1;
}

inline i64 psi_ij(i64 i, int j, int k) {
    const i64 r = odd_prime(j);
    const auto ex = digit_expansion(i, r);
    if (k < 1 || k > ex.delta) throw std::invalid_argument("psi_ij needs 1 <= k <= delta");
    if (k < (ex.e + 1) / 2) return std::min(ex.digit(2 * k - 1) + epsilon_ij(i, j, k), (r - 1) / 2);
    if (ex.e == 2 * ex.delta) return std::min(ex.digit(2 * k - 1) + epsilon_ij(i, j, k), (r + 1) / 2);
    return 1;
}

inline i64 a_ij(i64 i, int j) {
    const i64 r = odd_prime(j);
    const auto ex = digit_expansion(i, r);
    i64 sum = 0;
    i64 r2k = 1;
    for (int k = 1; k <= ex.delta; ++k) {
        r2k = checked_mul(r2k, r * r);
        sum += (r - 1) / 2 * (i / r2k) + psi_ij(i, j, k);
    }
    return sum;
}

/// Exact Psi_{u,v}(i,j): the larger of the two excluded-class counts.
inline i64 psi_exact(i64 u, i64 v, i64 i, int j) {
    const i64 r = odd_prime(j);
    if (u % r == 0) throw std::invalid_argument("psi_exact needs gcd(u, r_j) = 1");
    i64 best = 0;
    for (SquareClass eta : {SquareClass::square, SquareClass::nonsquare}) {
        i64 count = 0;
        for (i64 n = 1; n <= i; ++n)
            if (in_excluded_class(checked_add(checked_mul(u, n), v), r, eta)) ++count;
        best = std::max(best, count);
    }
    return best;
}

inline i64 b_ij(i64 i, int j, int s) {
    if (s < 1) throw std::invalid_argument("b_ij needs s >= 1");
    return std::max(a_ij(i, j), ceil_div(i, odd_prime(s)));
}

inline i64 locally_rep_lower_bound(i64 i, int s) {
    i64 out = i;
    for (int j = 1; j < s; ++j) out -= b_ij(i, j, s);
    return out;
}

/// Least n >= 0 with un + v coprime to every listed prime.
inline i64 coprime_progression_min(i64 u, i64 v, const std::vector<i64>& primes) {
    for (i64 p : primes)
        if (u % p == 0) throw std::invalid_argument("coprime_progression_min needs u coprime to the primes");
    for (i64 n = 0;; ++n) {
        const i64 x = checked_add(checked_mul(u, n), v);
        if (std::none_of(primes.begin(), primes.end(), [&](i64 p) { return x % p == 0; })) return n;
    }
}

struct GWitness {
    i64 g = 0;
    i64 binary_target = 0;   // dg + a + b
    i64 ternary_target = 0;  // dg + a + b + c
};

/// Least g in (0, p^2) with dg+a+b not represented by <a,b> over Z_p,
/// dg+a+b+c represented by <a,b,c>, and both p-orders at most 1. The
/// coefficient order matters: the first two form the binary part.
inline GWitness find_g(const Coeffs& L, i64 p, i64 d) {
    require_odd_prime(p);
    if (p < 5) throw std::invalid_argument("find_g needs p >= 5");
    if (d < 1 || d % p == 0) throw std::invalid_argument("find_g needs d >= 1 coprime to p");
    const i64 a = L[0], b = L[1], c = L[2];
    for (i64 g = 1; g < p * p; ++g) {
        const i64 bin = checked_add(checked_mul(d, g), a + b);
        const i64 ter = checked_add(bin, c);
        if (detail::valuation_unchecked(bin, p).exponent > 1) continue;
        if (detail::valuation_unchecked(ter, p).exponent > 1) continue;
        if (binary_represented_zp(a, b, bin, p)) continue;
        if (!represented_zp(L, ter, p)) continue;
        return {g, bin, ter};
    }
    throw std::logic_error("find_g: no g < p^2 satisfies the conditions for " + detail::coeff_string(L) +
                           " at p=" + std::to_string(p));
}

inline constexpr int kTable1Columns = 11;

struct BoundRow {
    i64 i = 0;
    std::array<i64, kTable1Columns> values{};
};

inline std::vector<BoundRow> table1(const std::vector<i64>& rows) {
    std::vector<BoundRow> out;
    for (i64 i : rows) {
        BoundRow row{i, {}};
        for (int j = 1; j <= kTable1Columns; ++j) row.values[static_cast<std::size_t>(j - 1)] = a_ij(i, j);
        out.push_back(row);
    }
    return out;
}

}  // namespace tritri
