// Representability over Z_p (p odd) for diagonal lattices, anisotropy,
// p-stability and the locally-represented predicate for triangular forms.
//
// Two independent deciders are provided. decide_zp walks the Jordan
// valuations of the coefficients; decide_zp_oracle searches square-class
// representatives and certifies each hit with an explicit Hensel lift.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/forms.hpp"

namespace tritri {

enum class Method { structural, oracle };

inline const char* to_string(Method m) { return m == Method::structural ? "structural" : "oracle"; }

struct LocalVerdict {
    i64 p = 0;
    bool represented = false;
    Method method = Method::structural;
    std::vector<std::string> trace;
};

enum class SquareClass { square, nonsquare };

inline const char* to_string(SquareClass c) { return c == SquareClass::square ? "square" : "nonsquare"; }

enum class StableShape { isotropic_plane, unit_binary_anisotropic_times_p, unstable };

inline const char* to_string(StableShape s) {
    switch (s) {
        case StableShape::isotropic_plane: return "isotropic_plane";
        case StableShape::unit_binary_anisotropic_times_p: return "unit_binary_anisotropic_times_p";
        case StableShape::unstable: return "unstable";
    }
    return "?";
}

struct PStability {
    bool stable = false;
    StableShape shape = StableShape::unstable;
    std::optional<SquareClass> epsilon_class;  // set only for the anisotropic stable shape
};

namespace detail {

inline int legendre_product(i64 x, i64 y, i64 p) { return jacobi(mul_mod(x, y, p), p); }

inline std::string coeff_string(std::span<const i64> c) {
    std::string s = "<";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ">";
}

// Normative recursion for rank 3. Coefficients positive, m > 0.
inline bool decide_ternary(Coeffs c, i64 m, i64 p, std::vector<std::string>* trace) {
    auto note = [&](std::string s) {
        if (trace) trace->push_back(std::move(s));
    };
    while (true) {
        const auto [v, u] = valuation_unchecked(m, p);
        std::array<Valuation, 3> parts{};
        std::vector<std::size_t> units;
        for (std::size_t i = 0; i < 3; ++i) {
            parts[i] = valuation_unchecked(c[i], p);
            if (parts[i].exponent == 0) units.push_back(i);
        }
        const std::string state = coeff_string(c) + " m=" + std::to_string(m);
        if (units.empty()) {
            if (v == 0) {
                note(state + ": all coefficients divisible by p, m a unit -> not represented");
                return false;
            }
            note(state + ": divide coefficients and m by p");
            for (auto& x : c) x /= p;
            m /= p;
            continue;
        }
        if (v == 0) {
            if (units.size() >= 2) {
                note(state + ": unit target, unimodular binary part -> represented");
                return true;
            }
            const i64 alpha = parts[units[0]].unit;
            const bool ok = legendre_product(alpha, u, p) == 1;
            note(state + ": unit target, one unit coefficient " + std::to_string(alpha) +
                 (ok ? " with square ratio -> represented" : " with nonsquare ratio -> not represented"));
            return ok;
        }
        if (units.size() == 3) {
            note(state + ": unimodular ternary -> represented");
            return true;
        }
        if (units.size() == 2) {
            const i64 alpha = parts[units[0]].unit, beta = parts[units[1]].unit;
            if (legendre_product(-alpha, beta, p) == 1) {
                note(state + ": unit pair contains a hyperbolic plane -> represented");
                return true;
            }
            const std::size_t k = 3 - units[0] - units[1];
            const int e = parts[k].exponent;
            const i64 gamma = parts[k].unit;
            const bool ok = (v % 2 == 0) || (e % 2 == 0 && e < v) ||
                            (e % 2 == 1 && e <= v && legendre_product(gamma, u, p) == 1);
            note(state + ": anisotropic unit pair, third valuation " + std::to_string(e) + ", ord m " +
                 std::to_string(v) + (ok ? " -> represented" : " -> not represented"));
            return ok;
        }
        // One unit coefficient and p | m: that coordinate is divisible by p.
        const std::size_t i = units[0];
        note(state + ": single unit coefficient, its coordinate is divisible by p; rescale");
        for (std::size_t j = 0; j < 3; ++j) c[j] = (j == i) ? checked_mul(c[j], p) : c[j] / p;
        m /= p;
    }
}

inline bool decide_binary(i64 a, i64 b, i64 m, i64 p) {
    while (true) {
        const auto [v, u] = valuation_unchecked(m, p);
        const auto pa = valuation_unchecked(a, p), pb = valuation_unchecked(b, p);
        if (pa.exponent > 0 && pb.exponent > 0) {
            if (v == 0) return false;
            a /= p;
            b /= p;
            m /= p;
            continue;
        }
        if (v == 0) {
            if (pa.exponent == 0 && pb.exponent == 0) return true;
            const i64 alpha = pa.exponent == 0 ? pa.unit : pb.unit;
            return legendre_product(alpha, u, p) == 1;
        }
        if (pa.exponent == 0 && pb.exponent == 0) {
            // Hyperbolic plane represents everything; the anisotropic unimodular
            // plane represents exactly the even valuations.
            return legendre_product(-pa.unit, pb.unit, p) == 1 || v % 2 == 0;
        }
        if (pa.exponent == 0) {
            a = checked_mul(a, p);
            b /= p;
        } else {
            b = checked_mul(b, p);
            a /= p;
        }
        m /= p;
    }
}

inline i64 inverse_mod(i64 a, i64 m) {
    i64 old_r = mod_positive(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::logic_error("inverse_mod of a non-unit");
    return mod_positive(old_s, m);
}

// Square root of a unit a (a square mod p) modulo modulus = p^k, by search
// mod p followed by Newton lifting.
inline i64 sqrt_mod_prime_power(i64 a, i64 p, i64 modulus) {
    i64 s = -1;
    const i64 ar = mod_positive(a, p);
    for (i64 r = 1; r < p; ++r)
        if (r * r % p == ar) {
            s = r;
            break;
        }
    if (s < 0) throw std::logic_error("sqrt_mod_prime_power of a nonresidue");
    for (int iter = 0; iter < 64; ++iter) {
        const i64 err = mod_positive(mul_mod(s, s, modulus) - a, modulus);
        if (err == 0) return s;
        s = mod_positive(s - mul_mod(err, inverse_mod(2 * s, modulus), modulus), modulus);
    }
    throw std::logic_error("Hensel lifting did not converge");
}

}  // namespace detail

/// Structural decision of m -> <a,b,c> over Z_p.
inline LocalVerdict decide_zp(const DiagLattice& L, i64 m, i64 p, bool with_trace = false) {
    require_odd_prime(p);
    if (m <= 0) throw std::invalid_argument("decide_zp needs m >= 1");
    LocalVerdict out;
    out.p = p;
    out.method = Method::structural;
    out.represented = detail::decide_ternary(L.coeffs(), m, p, with_trace ? &out.trace : nullptr);
    return out;
}

/// Fast path without trace, coefficients in any order.
inline bool represented_zp(const Coeffs& c, i64 m, i64 p) { return detail::decide_ternary(c, m, p, nullptr); }

/// m -> <a,b> over Z_p.
inline bool binary_represented_zp(i64 a, i64 b, i64 m, i64 p) {
    require_odd_prime(p);
    if (a < 1 || b < 1) throw std::invalid_argument("binary coefficients must be positive");
    if (m == 0) return true;
    return detail::decide_binary(a, b, m, p);
}

struct OracleOptions {
    i64 max_modulus = i64{1} << 60;  // refuse when p^E exceeds this
};

/// Bounded square-class search with Hensel certificates. Works for any rank.
///
/// With E = ord_p(m) + 2 e_max + 3, every coordinate except one is drawn from
/// {0} U {p^k w : 1 <= w < p, e_j + 2k <= ord_p(m)}; the remaining coordinate
/// must then satisfy a_i x_i^2 = R exactly over Z_p, which holds iff R/a_i is
/// a p-adic square. Hits are lifted to an explicit solution mod p^E and the
/// congruence plus derivative valuation are re-checked.
inline LocalVerdict decide_zp_oracle(std::span<const i64> coeffs, i64 m, i64 p, const OracleOptions& opt = {}) {
    require_odd_prime(p);
    if (m <= 0) throw std::invalid_argument("decide_zp_oracle needs m >= 1");
    const std::size_t rank = coeffs.size();
    if (rank == 0) throw std::invalid_argument("empty coefficient list");
    std::vector<Valuation> parts;
    int e_max = 0;
    for (i64 c : coeffs) {
        if (c < 1) throw std::invalid_argument("coefficients must be positive");
        parts.push_back(detail::valuation_unchecked(c, p));
        e_max = std::max(e_max, parts.back().exponent);
    }
    const auto [v, mu] = detail::valuation_unchecked(m, p);
    const int E = v + 2 * e_max + 3;
    i64 modulus = 1;
    for (int k = 0; k < E; ++k) {
        if (modulus > opt.max_modulus / p) throw std::runtime_error("oracle work budget exceeded: p^E too large");
        modulus *= p;
    }

    LocalVerdict out;
    out.p = p;
    out.method = Method::oracle;

    // Candidate coordinate values per position.
    std::vector<std::vector<i64>> cand(rank);
    for (std::size_t j = 0; j < rank; ++j) {
        cand[j].push_back(0);
        i64 pk = 1;
        for (int k = 0; parts[j].exponent + 2 * k <= v; ++k, pk *= p)
            for (i64 w = 1; w < p; ++w) cand[j].push_back(pk * w);
    }

    std::vector<std::size_t> pick(rank, 0);
    for (std::size_t solved = 0; solved < rank; ++solved) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < rank; ++j)
            if (j != solved) others.push_back(j);
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            __int128 rest = m;
            for (std::size_t j : others) {
                const i64 x = cand[j][pick[j]];
                rest -= static_cast<__int128>(coeffs[j]) * x * x;
            }
            std::vector<i64> x(rank, 0);
            for (std::size_t j : others) x[j] = cand[j][pick[j]];
            bool hit = false;
            std::string how;
            if (rest == 0) {
                hit = true;
                how = "exact integer solution";
            } else {
                // Valuations above v + e_max + 1 would break the certificate bound.
                __int128 r = rest;
                int c = 0;
                while (r % p == 0 && c <= v + e_max + 1) {
                    r /= p;
                    ++c;
                }
                const int e_i = parts[solved].exponent;
                if (r % p != 0 && c >= e_i && (c - e_i) % 2 == 0) {
                    const i64 rho = static_cast<i64>(((r % modulus) + modulus) % modulus);
                    const i64 alpha = parts[solved].unit;
                    if (detail::legendre_product(rho, alpha, p) == 1) {
                        const int k = (c - e_i) / 2;
                        i64 sub_mod = 1;
                        for (int t = 0; t < E - c; ++t) sub_mod *= p;
                        const i64 target = mul_mod(rho, detail::inverse_mod(alpha, sub_mod), sub_mod);
                        const i64 s = detail::sqrt_mod_prime_power(target, p, sub_mod);
                        x[solved] = mul_mod(ipow(p, k), s, modulus);
                        // certificate: congruence mod p^E and derivative valuation
                        __int128 f = 0;
                        for (std::size_t j = 0; j < rank; ++j)
                            f += static_cast<__int128>(mul_mod(coeffs[j], mul_mod(x[j], x[j], modulus), modulus));
                        const bool congruent = static_cast<i64>((f - m) % modulus) == 0;
                        const int t = e_i + k;  // ord_p(2 a_i x_i)
                        if (!congruent || 2 * t + 1 > E)
                            throw std::logic_error("oracle produced an uncertified witness");
                        hit = true;
                        how = "Hensel certificate at coordinate " + std::to_string(solved) + ", t=" +
                              std::to_string(t) + ", mod p^" + std::to_string(E);
                    }
                }
            }
            if (hit) {
                out.represented = true;
                std::string w = "(";
                for (std::size_t j = 0; j < rank; ++j) w += (j ? "," : "") + std::to_string(x[j]);
                out.trace.push_back("witness " + w + ": " + how);
                return out;
            }
            // advance odometer over the non-solved coordinates
            std::size_t pos = 0;
            while (pos < others.size()) {
                const std::size_t j = others[pos];
                if (++pick[j] < cand[j].size()) break;
                pick[j] = 0;
                ++pos;
            }
            if (pos == others.size()) break;
        }
    }
    out.trace.push_back("no certified solution mod p^" + std::to_string(E));
    return out;
}

inline LocalVerdict decide_zp_oracle(const DiagLattice& L, i64 m, i64 p, const OracleOptions& opt = {}) {
    return decide_zp_oracle(std::span<const i64>(L.coeffs()), m, p, opt);
}

/// Anisotropy of the ternary space over Q_p via the Hasse invariant.
inline bool is_anisotropic(const DiagLattice& L, i64 p) {
    require_odd_prime(p);
    const i64 a = L[0], b = L[1], c = L[2];
    const int hasse = hilbert(a, b, p) * hilbert(a, c, p) * hilbert(b, c, p);
    return hasse != hilbert(-1, -checked_mul(checked_mul(a, b), c), p);
}

struct AnisotropicPrimes {
    std::vector<i64> T;        // odd primes where the space is anisotropic
    std::vector<i64> T_prime;  // T without 3
};

inline AnisotropicPrimes anisotropic_primes(const DiagLattice& L) {
    AnisotropicPrimes out;
    for (i64 p : odd_prime_divisors(L.discriminant())) {
        if (!is_anisotropic(L, p)) continue;
        out.T.push_back(p);
        if (p != 3) out.T_prime.push_back(p);
    }
    return out;
}

/// Classifies L_p as containing a hyperbolic plane, as
/// <1,-Delta_p> + <p eps_p>, or neither. L must be primitive at p.
inline PStability is_p_stable(const DiagLattice& L, i64 p) {
    require_odd_prime(p);
    std::array<Valuation, 3> parts{};
    for (std::size_t i = 0; i < 3; ++i) parts[i] = detail::valuation_unchecked(L[i], p);
    std::sort(parts.begin(), parts.end(),
              [](const Valuation& x, const Valuation& y) { return x.exponent < y.exponent; });
    if (parts[0].exponent != 0) throw std::invalid_argument("is_p_stable needs a lattice primitive at p");
    const int m = parts[1].exponent, n = parts[2].exponent;
    PStability out;
    if (m >= 1) return out;
    if (n == 0 || detail::legendre_product(-parts[0].unit, parts[1].unit, p) == 1) {
        out.stable = true;
        out.shape = StableShape::isotropic_plane;
        return out;
    }
    if (n == 1) {
        out.stable = true;
        out.shape = StableShape::unit_binary_anisotropic_times_p;
        out.epsilon_class = detail::jacobi(parts[2].unit, p) == 1 ? SquareClass::square : SquareClass::nonsquare;
    }
    return out;
}

struct PrimeStability {
    i64 p = 0;
    bool anisotropic = false;
    PStability stability;
};

struct StabilityProfile {
    DiagLattice form;
    AnisotropicPrimes primes;
    bool stable = true;
    std::vector<PrimeStability> per_prime;  // odd primes dividing the discriminant

    std::size_t t() const { return primes.T.size(); }
    std::size_t t_prime() const { return primes.T_prime.size(); }
};

inline StabilityProfile stability_profile(const DiagLattice& L) {
    StabilityProfile out{L, {}, true, {}};
    for (i64 p : odd_prime_divisors(L.discriminant())) {
        PrimeStability ps{p, is_anisotropic(L, p), is_p_stable(L, p)};
        if (ps.anisotropic) {
            out.primes.T.push_back(p);
            if (p != 3) out.primes.T_prime.push_back(p);
        }
        out.stable = out.stable && ps.stability.stable;
        out.per_prime.push_back(ps);
    }
    return out;
}

inline bool is_stable(const DiagLattice& L) {
    for (i64 p : odd_prime_divisors(L.discriminant()))
        if (!is_p_stable(L, p).stable) return false;
    return true;
}

/// True iff value = p^(2w-1) delta with delta * eps a nonsquare unit.
inline bool in_excluded_class(i64 value, i64 p, SquareClass eps) {
    if (value == 0) return false;
    const auto [v, u] = detail::valuation_unchecked(value, p);
    if (v % 2 == 0) return false;
    const int ls = detail::jacobi(u, p) * (eps == SquareClass::square ? 1 : -1);
    return ls == -1;
}

struct ExcludedClasses {
    i64 p = 0;
    SquareClass epsilon_class = SquareClass::square;

    bool contains(i64 value) const { return in_excluded_class(value, p, epsilon_class); }
};

inline std::optional<ExcludedClasses> excluded_classes(const DiagLattice& L, i64 p) {
    const auto st = is_p_stable(L, p);
    if (!st.stable || !is_anisotropic(L, p) || !st.epsilon_class) return std::nullopt;
    return ExcludedClasses{p, *st.epsilon_class};
}

struct LocalReport {
    bool represented = true;
    std::vector<LocalVerdict> per_prime;
};

/// Local representability of n by Delta(a,b,c). The 2-adic condition always
/// holds for primitive forms and odd primes not dividing abc are unimodular,
/// so only odd p | abc are examined.
inline LocalReport locally_represented(const TriForm& F, i64 n, bool with_trace = false) {
    if (n < 0) throw std::invalid_argument("locally_represented needs n >= 0");
    LocalReport out;
    const DiagLattice L(F);
    const i64 target = F.target(n);
    for (i64 p : odd_prime_divisors(F.discriminant())) {
        out.per_prime.push_back(decide_zp(L, target, p, with_trace));
        out.represented = out.represented && out.per_prime.back().represented;
    }
    return out;
}

/// Reusable predicate with the prime list computed once.
class LocalChecker {
public:
    explicit LocalChecker(const TriForm& F) : form_(F), primes_(odd_prime_divisors(F.discriminant())) {}

    bool operator()(i64 n) const {
        const i64 target = form_.target(n);
        for (i64 p : primes_)
            if (!represented_zp(form_.coeffs(), target, p)) return false;
        return true;
    }

    const std::vector<i64>& primes() const { return primes_; }

private:
    TriForm form_;
    std::vector<i64> primes_;
};

}  // namespace tritri
