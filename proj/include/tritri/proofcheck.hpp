// Finite checks of proof ingredients: exact count identities, the binary
// witness lemma, parity forcing, and rational isometries with fixed lines.
#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritri/arith.hpp"
#include "tritri/forms.hpp"
#include "tritri/local.hpp"
#include "tritri/represent.hpp"

namespace tritri {

class Rational {
public:
    Rational(i64 num = 0, i64 den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("zero denominator");
        normalize();
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return {checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)), checked_mul(x.den_, y.den_)};
    }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + Rational(-y.num_, y.den_); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return {checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_)};
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::invalid_argument("division by zero");
        return {checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_)};
    }
    friend bool operator==(const Rational&, const Rational&) = default;

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const i64 g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i64 num_;
    i64 den_;
};

using Mat3 = std::array<std::array<Rational, 3>, 3>;

inline Mat3 mat_mul(const Mat3& A, const Mat3& B) {
    Mat3 C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s;
            for (int k = 0; k < 3; ++k) s = s + A[i][k] * B[k][j];
            C[i][j] = s;
        }
    return C;
}

inline Mat3 transpose(const Mat3& A) {
    Mat3 T{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T[i][j] = A[j][i];
    return T;
}

inline Rational det3(const Mat3& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

inline int rank3(Mat3 A) {
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (A[r][col].num() != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || A[r][col].num() == 0) continue;
            const Rational f = A[r][col] / A[rank][col];
            for (int c = 0; c < 3; ++c) A[r][c] = A[r][c] - f * A[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Integer matrix scaled by 1/denominator.
inline Mat3 scaled_matrix(const std::array<std::array<i64, 3>, 3>& m, i64 denominator) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = Rational(m[i][j], denominator);
    return out;
}

struct IsometryInstance {
    std::string name;
    Mat3 T;
    Coeffs gram;  // diagonal Gram matrix
    std::array<i64, 3> fixed_vector;
};

inline std::vector<IsometryInstance> isometry_instances() {
    return {
        {"D(1,4,9)", scaled_matrix({{{3, 6, 36}, {6, 3, -36}, {-1, 1, -3}}}, 9), {1, 1, 36}, {1, 1, 0}},
        {"D(1,3,27)", scaled_matrix({{{-3, 18, -27}, {6, 0, -18}, {1, 2, 9}}}, 12), {1, 3, 27}, {2, -1, 0}},
        {"D(1,6,27)", scaled_matrix({{{0, 18, -27}, {3, -3, -9}, {1, 2, 6}}}, 9), {1, 6, 27}, {2, -1, 0}},
    };
}

struct IsometryReport {
    std::string name;
    bool preserves_gram = false;
    Rational det;
    bool unimodular = false;  // det = +1 or -1
    int kernel_dimension = -1;
    bool fixed_vector_in_kernel = false;

    bool ok() const { return preserves_gram && unimodular && kernel_dimension == 1 && fixed_vector_in_kernel; }
};

/// Checks tT M T = M, det T = +-1, and that ker(T - det(T) I) is the line
/// spanned by the fixed vector.
inline IsometryReport verify_isometry(const IsometryInstance& inst) {
    IsometryReport out;
    out.name = inst.name;
    Mat3 M{};
    for (int i = 0; i < 3; ++i) M[i][i] = Rational(inst.gram[static_cast<std::size_t>(i)]);
    out.preserves_gram = mat_mul(mat_mul(transpose(inst.T), M), inst.T) == M;
    out.det = det3(inst.T);
    out.unimodular = out.det == Rational(1) || out.det == Rational(-1);
    Mat3 K = inst.T;
    for (int i = 0; i < 3; ++i) K[i][i] = K[i][i] - out.det;
    out.kernel_dimension = 3 - rank3(K);
    bool zero = true, nonzero_vec = false;
    for (int i = 0; i < 3; ++i) {
        Rational s;
        for (int j = 0; j < 3; ++j) s = s + K[i][j] * Rational(inst.fixed_vector[static_cast<std::size_t>(j)]);
        if (s.num() != 0) zero = false;
        if (inst.fixed_vector[static_cast<std::size_t>(i)] != 0) nonzero_vec = true;
    }
    out.fixed_vector_in_kernel = zero && nonzero_vec;
    return out;
}

struct CheckResult {
    bool ok = true;
    i64 checked = 0;
    std::string first_failure;

    void fail(std::string why) {
        if (ok) first_failure = std::move(why);
        ok = false;
    }
};

/// 3 r_(1,1)(m, <1,3>) = 2 r(m, <1,3>) for every m = 4 mod 8 up to M_max.
inline CheckResult verify_odd_ratio(i64 M_max) {
    CheckResult out;
    for (i64 m = 4; m <= M_max; m += 8) {
        const auto r = count_binary(m, 1, 3);
        ++out.checked;
        if (3 * r.by_parity[3] != 2 * r.total) out.fail("m=" + std::to_string(m));
    }
    return out;
}

inline bool mod3_witness_ok(i64 xt, i64 yt, i64 x, i64 y) {
    return mod_positive(xt - yt, 3) != 0 && mod_positive(xt - x, 4) == 0 && mod_positive(yt - y, 2) == 0;
}

/// For every solution (x,y) of x^2 + 2y^2 = N, N <= N_max, some solution
/// (x~,y~) has x~ != y~ mod 3, x~ = x mod 4 and y~ = y mod 2.
inline CheckResult verify_mod3_witness(i64 N_max) {
    CheckResult out;
    for (i64 N = 1; N <= N_max; ++N) {
        std::vector<std::pair<i64, i64>> sols;
        for (i64 y = -isqrt(N / 2); y <= isqrt(N / 2); ++y) {
            const i64 q = N - 2 * y * y;
            const i64 x = isqrt(q);
            if (x * x != q) continue;
            sols.push_back({x, y});
            if (x != 0) sols.push_back({-x, y});
        }
        for (const auto& [x, y] : sols) {
            ++out.checked;
            bool found = false;
            for (const auto& [xt, yt] : sols)
                if (mod3_witness_ok(xt, yt, x, y)) {
                    found = true;
                    break;
                }
            if (!found) out.fail("N=" + std::to_string(N) + " (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    return out;
}

enum class CountIdentity { i3, i12, i17, i30 };

inline const char* to_string(CountIdentity id) {
    switch (id) {
        case CountIdentity::i3: return "i3";
        case CountIdentity::i12: return "i12";
        case CountIdentity::i17: return "i17";
        case CountIdentity::i30: return "i30";
    }
    return "?";
}

/// Checks the named relation for M = 8n + shift, n = 0..n_max.
///   i3:  <1,1,3>,  M = 8n+5:  2 r_111 = r and r_111 = 2 r_100
///   i12: <1,3,4>,  M = 8n+8:  r_111 = 2 r_001
///   i17: <1,3,10>, M = 8n+14: 3 r_111 = 2 r
///   i30: <1,3,18>, M = 8n+22: 3 r_111 = 2 r
inline CheckResult verify_count_identity(CountIdentity id, i64 n_max) {
    CheckResult out;
    Coeffs L;
    switch (id) {
        case CountIdentity::i3: L = {1, 1, 3}; break;
        case CountIdentity::i12: L = {1, 3, 4}; break;
        case CountIdentity::i17: L = {1, 3, 10}; break;
        case CountIdentity::i30: L = {1, 3, 18}; break;
    }
    const i64 shift = L[0] + L[1] + L[2];
    for (i64 n = 0; n <= n_max; ++n) {
        const i64 M = 8 * n + shift;
        const auto r = count_ternary(M, L);
        const i64 r111 = r.all_odd();
        bool ok = true;
        switch (id) {
            case CountIdentity::i3: ok = 2 * r111 == r.total && r111 == 2 * r.by_parity[4]; break;
            case CountIdentity::i12: ok = r111 == 2 * r.by_parity[1]; break;
            case CountIdentity::i17:
            case CountIdentity::i30: ok = 3 * r111 == 2 * r.total; break;
        }
        ++out.checked;
        if (!ok) out.fail("n=" + std::to_string(n));
    }
    return out;
}

/// Every representation of a locally represented 8n + a + b + c is all-odd.
inline CheckResult verify_parity_forcing(const TriForm& F, i64 n_max) {
    CheckResult out;
    const LocalChecker local(F);
    for (i64 n = 0; n <= n_max; ++n) {
        if (!local(n)) continue;
        const auto r = count_ternary(F.target(n), F.coeffs());
        ++out.checked;
        if (r.total != r.all_odd()) out.fail("n=" + std::to_string(n));
    }
    return out;
}

}  // namespace tritri
