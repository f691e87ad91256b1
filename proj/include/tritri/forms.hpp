// Canonical ternary triangular forms and diagonal ternary lattices.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tritri/arith.hpp"

namespace tritri {

using Coeffs = std::array<i64, 3>;

struct primitivity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Coeffs sorted(Coeffs c) {
    std::sort(c.begin(), c.end());
    return c;
}

/// Delta(a,b,c) = a T_x + b T_y + c T_z with a <= b <= c and gcd(a,b,c) = 1.
class TriForm {
public:
    TriForm(i64 a, i64 b, i64 c) : coeffs_(sorted({a, b, c})) {
        if (coeffs_[0] < 1)
            throw std::invalid_argument("triangular form coefficients must be positive");
        if (gcd3(coeffs_[0], coeffs_[1], coeffs_[2]) != 1)
            throw primitivity_error("non-primitive triangular form " + to_string());
    }

    explicit TriForm(const Coeffs& c) : TriForm(c[0], c[1], c[2]) {}

    i64 a() const { return coeffs_[0]; }
    i64 b() const { return coeffs_[1]; }
    i64 c() const { return coeffs_[2]; }
    const Coeffs& coeffs() const { return coeffs_; }

    i64 discriminant() const { return checked_mul(checked_mul(a(), b()), c()); }
    i64 shift() const { return a() + b() + c(); }

    /// 8n + a + b + c: the odd-coordinate quadratic target for n.
    i64 target(i64 n) const { return checked_add(checked_mul(8, n), shift()); }

    std::string to_string() const {
        return "D(" + std::to_string(coeffs_[0]) + "," + std::to_string(coeffs_[1]) + "," +
               std::to_string(coeffs_[2]) + ")";
    }

    friend auto operator<=>(const TriForm&, const TriForm&) = default;
    friend bool operator==(const TriForm&, const TriForm&) = default;

private:
    Coeffs coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const TriForm& f) { return os << f.to_string(); }

inline TriForm canonical_triform(i64 a, i64 b, i64 c) { return TriForm(a, b, c); }

/// Diagonal lattice <a,b,c>; coefficient order carries no meaning, so the
/// stored triple is sorted.
class DiagLattice {
public:
    DiagLattice(i64 a, i64 b, i64 c) : coeffs_(sorted({a, b, c})) {
        if (coeffs_[0] < 1) throw std::invalid_argument("lattice coefficients must be positive");
    }

    explicit DiagLattice(const Coeffs& c) : DiagLattice(c[0], c[1], c[2]) {}
    explicit DiagLattice(const TriForm& f) : coeffs_(f.coeffs()) {}

    const Coeffs& coeffs() const { return coeffs_; }
    i64 operator[](std::size_t i) const { return coeffs_[i]; }

    bool primitive() const { return gcd3(coeffs_[0], coeffs_[1], coeffs_[2]) == 1; }
    i64 discriminant() const {
        return checked_mul(checked_mul(coeffs_[0], coeffs_[1]), coeffs_[2]);
    }

    /// Divides out the common factor of the coefficients.
    DiagLattice primitivized() const {
        const i64 g = gcd3(coeffs_[0], coeffs_[1], coeffs_[2]);
        return DiagLattice(coeffs_[0] / g, coeffs_[1] / g, coeffs_[2] / g);
    }

    std::string to_string() const {
        return "<" + std::to_string(coeffs_[0]) + "," + std::to_string(coeffs_[1]) + "," +
               std::to_string(coeffs_[2]) + ">";
    }

    friend auto operator<=>(const DiagLattice&, const DiagLattice&) = default;
    friend bool operator==(const DiagLattice&, const DiagLattice&) = default;

private:
    Coeffs coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const DiagLattice& l) { return os << l.to_string(); }

}  // namespace tritri
