// Exact integer and odd-p-adic primitives.
//
// Everything here works on 64-bit signed integers. Multiplications and
// additions that could leave the range go through the checked helpers and
// throw tritri::overflow_error instead of wrapping.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tritri {

using i64 = std::int64_t;

struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline i64 checked_add(i64 x, i64 y) {
    i64 out;
    if (__builtin_add_overflow(x, y, &out))
        throw overflow_error("integer overflow in addition");
    return out;
}

inline i64 checked_sub(i64 x, i64 y) {
    i64 out;
    if (__builtin_sub_overflow(x, y, &out))
        throw overflow_error("integer overflow in subtraction");
    return out;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 out;
    if (__builtin_mul_overflow(x, y, &out))
        throw overflow_error("integer overflow in multiplication");
    return out;
}

inline i64 ipow(i64 base, int exp) {
    i64 out = 1;
    for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
    return out;
}

/// floor(sqrt(n)) for n >= 0.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    const i64 r = isqrt(n);
    return r * r == n;
}

inline i64 ceil_div(i64 num, i64 den) {
    if (den <= 0) throw std::invalid_argument("ceil_div needs a positive divisor");
    const i64 q = num / den;
    return (num % den != 0 && num > 0) ? q + 1 : q;
}

inline i64 floor_div(i64 num, i64 den) {
    if (den <= 0) throw std::invalid_argument("floor_div needs a positive divisor");
    const i64 q = num / den;
    return (num % den != 0 && num < 0) ? q - 1 : q;
}

inline i64 mod_positive(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(mod_positive(a, m)) * mod_positive(b, m)) % m);
}

inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    i64 result = 1 % m;
    base = mod_positive(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline void require_odd_prime(i64 p) {
    if (p == 2) throw std::invalid_argument("p = 2 is not supported; only odd primes are decided");
    if (!is_prime(p)) throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

/// The k-th odd prime: odd_prime(1) = 3, odd_prime(2) = 5, ...
inline i64 odd_prime(int k) {
    if (k < 1) throw std::invalid_argument("odd prime index starts at 1");
    static thread_local std::vector<i64> primes{3};
    i64 candidate = primes.back();
    while (static_cast<int>(primes.size()) < k) {
        candidate += 2;
        if (is_prime(candidate)) primes.push_back(candidate);
    }
    return primes[static_cast<std::size_t>(k - 1)];
}

/// Odd primes dividing |n|, ascending.
inline std::vector<i64> odd_prime_divisors(i64 n) {
    if (n == 0) throw std::invalid_argument("odd_prime_divisors of zero");
    if (n < 0) n = -n;
    while (n % 2 == 0) n /= 2;
    std::vector<i64> out;
    for (i64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct Valuation {
    int exponent;
    i64 unit;  // n = p^exponent * unit, p does not divide unit; sign kept here

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

namespace detail {

inline Valuation valuation_unchecked(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return {v, n};
}

// Jacobi symbol (a/n) for odd n > 0.
inline int jacobi(i64 a, i64 n) {
    a = mod_positive(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

}  // namespace detail

/// Splits n = p^v * u with p not dividing u. n = 0 has no valuation here.
inline Valuation valuation(i64 n, i64 p) {
    require_odd_prime(p);
    if (n == 0) throw std::invalid_argument("valuation of zero is undefined");
    return detail::valuation_unchecked(n, p);
}

inline int legendre(i64 a, i64 p) {
    require_odd_prime(p);
    return detail::jacobi(a, p);
}

/// Least positive quadratic nonresidue mod p; the fixed representative of
/// the non-square unit class.
inline i64 nonresidue(i64 p) {
    require_odd_prime(p);
    for (i64 d = 2;; ++d)
        if (detail::jacobi(d, p) == -1) return d;
}

/// Hilbert symbol (a,b)_p at an odd prime.
inline int hilbert(i64 a, i64 b, i64 p) {
    require_odd_prime(p);
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
    const auto [alpha, u] = detail::valuation_unchecked(a, p);
    const auto [beta, w] = detail::valuation_unchecked(b, p);
    int out = 1;
    if ((alpha * beta) % 2 == 1) out *= detail::jacobi(-1, p);
    if (beta % 2 == 1) out *= detail::jacobi(u, p);
    if (alpha % 2 == 1) out *= detail::jacobi(w, p);
    return out;
}

inline i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace tritri
