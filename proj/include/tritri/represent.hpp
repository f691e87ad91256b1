// Exact representation counts over Z by direct enumeration.
//
// Counts include every sign pattern and zero coordinates: each nonzero
// coordinate contributes a factor 2. Parity masks are indexed with the
// first coordinate as the most significant bit, so (1,0,0) has index 4.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/forms.hpp"

namespace tritri {

template <std::size_t Rank>
struct ParityMask {
    std::array<int, Rank> d{};

    std::size_t index() const {
        std::size_t out = 0;
        for (int bit : d) {
            if (bit != 0 && bit != 1) throw std::invalid_argument("parity entries must be 0 or 1");
            out = (out << 1) | static_cast<std::size_t>(bit);
        }
        return out;
    }

    static ParityMask from_index(std::size_t idx) {
        ParityMask m;
        for (std::size_t i = 0; i < Rank; ++i) m.d[Rank - 1 - i] = static_cast<int>((idx >> i) & 1u);
        return m;
    }

    static ParityMask all_odd() {
        ParityMask m;
        m.d.fill(1);
        return m;
    }
};

using ParityMask3 = ParityMask<3>;
using ParityMask2 = ParityMask<2>;

template <std::size_t Rank>
struct CountResult {
    i64 total = 0;
    std::array<i64, (std::size_t{1} << Rank)> by_parity{};

    i64 operator[](const ParityMask<Rank>& m) const { return by_parity[m.index()]; }
    i64 all_odd() const { return by_parity.back(); }

    i64 parity_sum() const { return std::accumulate(by_parity.begin(), by_parity.end(), i64{0}); }
};

namespace detail {

inline i64 sign_multiplicity(i64 w) { return w == 0 ? 1 : 2; }

// Positions of the coefficients from largest to smallest.
inline std::array<std::size_t, 3> descending_order(const Coeffs& c) {
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return c[i] > c[j]; });
    return idx;
}

}  // namespace detail

/// All (x,y,z) in Z^3 with c0 x^2 + c1 y^2 + c2 z^2 = M, coefficients taken
/// in the given order.
inline CountResult<3> count_ternary(i64 M, const Coeffs& coeffs) {
    if (M < 0) throw std::invalid_argument("count_ternary needs M >= 0");
    for (i64 c : coeffs)
        if (c < 1) throw std::invalid_argument("coefficients must be positive");
    CountResult<3> out;
    const auto order = detail::descending_order(coeffs);
    const i64 c_outer = coeffs[order[0]], c_mid = coeffs[order[1]], c_inner = coeffs[order[2]];
    std::array<i64, 3> w{};
    for (i64 u = 0; checked_mul(c_outer, u * u) <= M; ++u) {
        const i64 rem = M - c_outer * u * u;
        for (i64 v = 0; c_mid * v * v <= rem; ++v) {
            const i64 r2 = rem - c_mid * v * v;
            if (r2 % c_inner != 0) continue;
            const i64 q = r2 / c_inner;
            const i64 s = isqrt(q);
            if (s * s != q) continue;
            w[order[0]] = u;
            w[order[1]] = v;
            w[order[2]] = s;
            const i64 mult = detail::sign_multiplicity(w[0]) * detail::sign_multiplicity(w[1]) *
                             detail::sign_multiplicity(w[2]);
            const std::size_t mask = static_cast<std::size_t>(((w[0] & 1) << 2) | ((w[1] & 1) << 1) | (w[2] & 1));
            out.by_parity[mask] += mult;
            out.total += mult;
        }
    }
    return out;
}

inline CountResult<3> count_ternary(i64 M, const DiagLattice& L) { return count_ternary(M, L.coeffs()); }

inline CountResult<2> count_binary(i64 M, i64 a, i64 b) {
    if (M < 0) throw std::invalid_argument("count_binary needs M >= 0");
    if (a < 1 || b < 1) throw std::invalid_argument("coefficients must be positive");
    CountResult<2> out;
    for (i64 y = 0; b * y * y <= M; ++y) {
        const i64 r = M - b * y * y;
        if (r % a != 0) continue;
        const i64 q = r / a;
        const i64 x = isqrt(q);
        if (x * x != q) continue;
        const i64 mult = detail::sign_multiplicity(x) * detail::sign_multiplicity(y);
        out.by_parity[static_cast<std::size_t>(((x & 1) << 1) | (y & 1))] += mult;
        out.total += mult;
    }
    return out;
}

/// t(n, <a,b,c>): number of (x,y,z) in Z^3 with a T_x + b T_y + c T_z = n,
/// counted through x -> 2x - 1 as all-odd solutions of 8n + a + b + c.
inline i64 triangular_count(i64 n, const TriForm& F) {
    if (n < 0) throw std::invalid_argument("triangular_count needs n >= 0");
    return count_ternary(F.target(n), F.coeffs()).all_odd();
}

/// True iff some all-odd (x,y,z) solves a x^2 + b y^2 + c z^2 = M.
inline bool exists_all_odd(i64 M, const DiagLattice& L) {
    if (M < 0) throw std::invalid_argument("exists_all_odd needs M >= 0");
    const i64 a = L[0], b = L[1], c = L[2];
    for (i64 z = 1; c * z * z + a + b <= M; z += 2) {
        const i64 rz = M - c * z * z;
        for (i64 y = 1; b * y * y + a <= rz; y += 2) {
            const i64 r = rz - b * y * y;
            if (r % a != 0) continue;
            const i64 q = r / a;
            const i64 x = isqrt(q);
            if (x * x == q && (x & 1)) return true;
        }
    }
    return false;
}

/// Marks which n in [n_lo, n_hi] are represented by F. Entry k stands for
/// n_lo + k. One pass over the positive odd lattice points whose value
/// lands in the window.
inline std::vector<bool> represented_window(const TriForm& F, i64 n_lo, i64 n_hi) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("bad window");
    std::vector<bool> hit(static_cast<std::size_t>(n_hi - n_lo + 1), false);
    const i64 a = F.a(), b = F.b(), c = F.c();
    const i64 shift = F.shift();
    const i64 m_lo = F.target(n_lo), m_hi = F.target(n_hi);
    for (i64 z = 1; c * z * z + a + b <= m_hi; z += 2) {
        const i64 cz = c * z * z;
        for (i64 y = 1; cz + b * y * y + a <= m_hi; y += 2) {
            const i64 base = cz + b * y * y;
            i64 x = 1;
            if (m_lo - base > a) {
                const i64 need = ceil_div(m_lo - base, a);
                x = isqrt(need);
                if (x * x < need) ++x;
                if ((x & 1) == 0) ++x;
            }
            for (; base + a * x * x <= m_hi; x += 2) {
                const i64 n = (base + a * x * x - shift) / 8;
                hit[static_cast<std::size_t>(n - n_lo)] = true;
            }
        }
    }
    return hit;
}

}  // namespace tritri
