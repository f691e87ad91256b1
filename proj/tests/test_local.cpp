#include <gtest/gtest.h>

#include <random>

#include "tritri/golden.hpp"
#include "tritri/local.hpp"
#include "tritri/represent.hpp"

using namespace tritri;

namespace {

DiagLattice random_lattice(std::mt19937_64& rng, i64 p, int max_val = 3, i64 max_unit = 50) {
    Coeffs c{};
    for (auto& x : c) {
        i64 u;
        do u = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(max_unit));
        while (u % p == 0);
        x = u * ipow(p, static_cast<int>(rng() % static_cast<std::uint64_t>(max_val + 1)));
    }
    return DiagLattice(c);
}

}  // namespace

TEST(DecideZp, Examples) {
    EXPECT_FALSE(decide_zp(DiagLattice(1, 1, 3), 6, 3).represented);
    EXPECT_TRUE(decide_zp(DiagLattice(1, 1, 3), 2, 3).represented);
    EXPECT_FALSE(decide_zp_oracle(DiagLattice(1, 1, 3), 6, 3).represented);
    EXPECT_TRUE(decide_zp(DiagLattice(2, 3, 9), 14, 3).represented);
    EXPECT_TRUE(decide_zp_oracle(DiagLattice(2, 3, 9), 14, 3).represented);
    EXPECT_THROW(decide_zp(DiagLattice(1, 1, 3), 0, 3), std::invalid_argument);
    EXPECT_THROW(decide_zp(DiagLattice(1, 1, 3), 5, 2), std::invalid_argument);
}

TEST(DecideZp, TraceIsOptIn) {
    EXPECT_TRUE(decide_zp(DiagLattice(1, 1, 3), 6, 3).trace.empty());
    EXPECT_FALSE(decide_zp(DiagLattice(1, 1, 3), 6, 3, true).trace.empty());
}

TEST(DecideZp, OneTwentyFiveFamily) {
    const DiagLattice L(1, 25, 25);
    for (i64 u = 1; u < 25; ++u) {
        if (u % 5 == 0) continue;
        EXPECT_EQ(decide_zp(L, 5 * u, 5).represented, decide_zp_oracle(L, 5 * u, 5).represented) << u;
    }
}

TEST(DecideZp, AgreesWithOracleOnRandomInstances) {
    std::mt19937_64 rng(2024);
    const i64 primes[] = {3, 5, 7, 11, 13};
    int disagreements = 0;
    for (int k = 0; k < 10000; ++k) {
        const i64 p = primes[k % 5];
        const DiagLattice L = random_lattice(rng, p);
        const i64 m = 1 + static_cast<i64>(rng() % 10000);
        const bool s = decide_zp(L, m, p).represented;
        const bool o = decide_zp_oracle(L, m, p).represented;
        if (s != o) {
            ++disagreements;
            ADD_FAILURE() << L << " m=" << m << " p=" << p << " structural=" << s << " oracle=" << o;
        }
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(DecideZp, ExhaustiveSmallAgreement) {
    for (i64 p : {3, 5})
        for (int e1 = 0; e1 <= 2; ++e1)
            for (int e2 = e1; e2 <= 3; ++e2)
                for (i64 u1 : {1, 2})
                    for (i64 u2 : {1, 2}) {
                        const DiagLattice L(1, u1 * ipow(p, e1), u2 * ipow(p, e2));
                        for (i64 m = 1; m <= 400; ++m)
                            ASSERT_EQ(decide_zp(L, m, p).represented, decide_zp_oracle(L, m, p).represented)
                                << L << " m=" << m << " p=" << p;
                    }
}

TEST(BinaryZp, AgreesWithOracle) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 3000; ++k) {
        const i64 p = std::array<i64, 3>{5, 7, 11}[k % 3];
        const DiagLattice L = random_lattice(rng, p, 2, 30);
        const i64 a = L[0], b = L[1];
        const i64 m = 1 + static_cast<i64>(rng() % 5000);
        const std::array<i64, 2> co{a, b};
        ASSERT_EQ(binary_represented_zp(a, b, m, p), decide_zp_oracle(co, m, p).represented)
            << a << "," << b << " m=" << m << " p=" << p;
    }
}

TEST(DecideZp, ScalingByPSquared) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 3000; ++k) {
        const i64 p = std::array<i64, 4>{3, 5, 7, 11}[k % 4];
        const DiagLattice L = random_lattice(rng, p, 2, 20);
        const i64 m = 1 + static_cast<i64>(rng() % 3000);
        if (decide_zp(L, m, p).represented) {
            EXPECT_TRUE(decide_zp(L, p * p * m, p).represented) << L << " " << m;
        }
    }
}

TEST(Anisotropy, Examples) {
    EXPECT_FALSE(is_anisotropic(DiagLattice(1, 1, 1), 3));
    EXPECT_TRUE(is_anisotropic(DiagLattice(1, 1, 3), 3));
    EXPECT_TRUE(is_anisotropic(DiagLattice(1, 1, 21), 3));
    EXPECT_TRUE(is_anisotropic(DiagLattice(1, 1, 21), 7));
    EXPECT_TRUE(anisotropic_primes(DiagLattice(1, 1, 1)).T.empty());
    EXPECT_EQ(anisotropic_primes(DiagLattice(2, 2, 3)).T, (std::vector<i64>{3}));
    const auto t = anisotropic_primes(DiagLattice(3, 7, 63));
    for (i64 p : t.T) EXPECT_TRUE(p == 3 || p == 7);
}

TEST(Stability, Examples) {
    const auto s = is_p_stable(DiagLattice(1, 1, 3), 3);
    EXPECT_TRUE(s.stable);
    EXPECT_EQ(s.shape, StableShape::unit_binary_anisotropic_times_p);
    EXPECT_EQ(s.epsilon_class, SquareClass::square);
    EXPECT_FALSE(is_p_stable(DiagLattice(1, 9, 81), 3).stable);
    EXPECT_TRUE(is_p_stable(DiagLattice(1, 2, 5), 5).stable);
    EXPECT_EQ(is_p_stable(DiagLattice(1, 1, 1), 3).shape, StableShape::isotropic_plane);
}

TEST(Stability, ProfileInvariants) {
    for (i64 a = 1; a <= 6; ++a)
        for (i64 b = a; b <= 30; ++b)
            for (i64 c = b; c <= 60; ++c) {
                if (gcd3(a, b, c) != 1) continue;
                const DiagLattice L(a, b, c);
                const auto prof = stability_profile(L);
                EXPECT_EQ(prof.stable, is_stable(L));
                for (i64 p : prof.primes.T) EXPECT_EQ(L.discriminant() % p, 0);
                const bool has3 = std::find(prof.primes.T.begin(), prof.primes.T.end(), 3) != prof.primes.T.end();
                EXPECT_EQ(prof.t_prime(), has3 ? prof.t() - 1 : prof.t());
                bool all = true;
                for (const auto& pp : prof.per_prime) all = all && pp.stability.stable;
                EXPECT_EQ(all, prof.stable);
            }
}

// For p-stable L the refused set is empty when isotropic and equals the
// excluded classes when anisotropic.
TEST(Stability, StableAnisotropicMatchesExcludedClasses) {
    int anisotropic_cases = 0;
    for (i64 p : {3, 5, 7, 11, 13})
        for (i64 a = 1; a <= 12; ++a)
            for (i64 b = a; b <= 12; ++b)
                for (i64 c0 = 1; c0 <= 12; ++c0)
                    for (i64 c : {c0, c0 * p}) {
                        if (a % p == 0 || b % p == 0 || c0 % p == 0) continue;
                        const DiagLattice L(a, b, c);
                        if (!L.primitive() || !is_p_stable(L, p).stable) continue;
                        const auto ex = excluded_classes(L, p);
                        if (is_anisotropic(L, p)) {
                            ASSERT_TRUE(ex.has_value()) << L << " p=" << p;
                            ++anisotropic_cases;
                            bool refused_some = false;
                            for (i64 m = 1; m <= 10000; ++m) {
                                const bool refused = !represented_zp(L.coeffs(), m, p);
                                refused_some = refused_some || refused;
                                ASSERT_EQ(refused, ex->contains(m)) << L << " m=" << m << " p=" << p;
                            }
                            EXPECT_TRUE(refused_some);
                        } else {
                            EXPECT_FALSE(ex.has_value());
                            for (i64 m = 1; m <= 2000; ++m) ASSERT_TRUE(represented_zp(L.coeffs(), m, p)) << L << m;
                        }
                    }
    EXPECT_GT(anisotropic_cases, 100);
}

TEST(ExcludedClass, Formula) {
    // 6 = 3 * 2, 2 a nonsquare mod 3.
    EXPECT_TRUE(in_excluded_class(6, 3, SquareClass::square));
    EXPECT_FALSE(in_excluded_class(3, 3, SquareClass::square));
    EXPECT_TRUE(in_excluded_class(3, 3, SquareClass::nonsquare));
    EXPECT_FALSE(in_excluded_class(9 * 2, 3, SquareClass::square));
    EXPECT_TRUE(in_excluded_class(27 * 2, 3, SquareClass::square));
    EXPECT_FALSE(in_excluded_class(2, 3, SquareClass::square));
}

TEST(LocallyRepresented, Examples) {
    EXPECT_TRUE(locally_represented(TriForm(1, 1, 81), 19).represented);
    EXPECT_TRUE(locally_represented(TriForm(1, 1, 3), 1).represented);
    EXPECT_TRUE(locally_represented(TriForm(1, 1, 25), 5).represented);
    EXPECT_TRUE(locally_represented(TriForm(1, 1, 1), 7).per_prime.empty());
    const auto r = locally_represented(TriForm(1, 1, 3), 0);
    ASSERT_EQ(r.per_prime.size(), 1u);
    EXPECT_EQ(r.per_prime[0].p, 3);
}

TEST(LocallyRepresented, GlobalImpliesLocal) {
    for (const auto& F : golden::regular49()) {
        const LocalChecker local(F);
        const auto win = represented_window(F, 0, 2000);
        for (i64 n = 0; n <= 2000; ++n) {
            if (!win[static_cast<std::size_t>(n)]) continue;
            ASSERT_TRUE(local(n)) << F << " n=" << n;
            if (n % 97 == 0) {
                ASSERT_TRUE(locally_represented(F, n).represented);
            }
        }
    }
}
