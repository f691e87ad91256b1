#include <gtest/gtest.h>

#include <random>

#include "tritri/bounds.hpp"
#include "tritri/golden.hpp"

using namespace tritri;

TEST(Digits, Expansion) {
    const auto d = digit_expansion(19, 3);
    EXPECT_EQ(d.digits, (std::vector<i64>{1, 0, 2}));
    EXPECT_EQ(d.e, 3);
    EXPECT_EQ(d.delta, 2);
    EXPECT_EQ(d.digit(5), 0);
    for (i64 r : {3, 5, 7, 11})
        for (i64 i = 1; i <= 3000; ++i) {
            const auto x = digit_expansion(i, r);
            i64 back = 0, pw = 1;
            for (i64 b : x.digits) {
                EXPECT_LT(b, r);
                back += b * pw;
                pw *= r;
            }
            EXPECT_EQ(back, i);
            EXPECT_GT(x.digits.back(), 0);
            EXPECT_EQ(x.delta, (x.e + 1) / 2);
        }
}

TEST(Epsilon, Examples) {
    EXPECT_EQ(epsilon_ij(19, 1, 1), 1);
    EXPECT_EQ(epsilon_ij(9, 1, 1), 0);
    EXPECT_EQ(epsilon_ij(27, 1, 2), 0);
}

TEST(Psi, Examples) {
    EXPECT_EQ(psi_ij(4, 1, 1), 2);
    EXPECT_EQ(psi_ij(19, 1, 1), 1);
    EXPECT_EQ(psi_ij(19, 1, 2), 1);
    EXPECT_THROW(psi_ij(19, 1, 3), std::invalid_argument);
}

TEST(Aij, Examples) {
    EXPECT_EQ(a_ij(19, 1), 4);
    EXPECT_EQ(a_ij(314, 1), 41);
    EXPECT_EQ(a_ij(314, 8), 12);
    EXPECT_EQ(a_ij(83, 2), 9);
}

TEST(Aij, ReproducesTable1) {
    const auto rows = table1(golden::table1_indices());
    const auto& gold = golden::table1();
    ASSERT_EQ(rows.size(), 20u);
    ASSERT_EQ(gold.size(), 20u);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(rows[k].i, gold[k].i);
        for (int j = 0; j < kTable1Columns; ++j)
            EXPECT_EQ(rows[k].values[static_cast<std::size_t>(j)], gold[k].values[static_cast<std::size_t>(j)])
                << "i=" << rows[k].i << " j=" << j + 1;
    }
}

TEST(Aij, CeilingBound) {
    for (i64 i = 1; i <= 1000; ++i)
        for (int j = 1; j <= 11; ++j) EXPECT_LE(a_ij(i, j), ceil_div(i, odd_prime(j))) << i << " " << j;
}

TEST(PsiExact, Examples) {
    // Only n = 3 has odd 3-valuation among 1,2,3.
    EXPECT_EQ(psi_exact(1, 0, 3, 1), 1);
    EXPECT_EQ(psi_exact(1, 0, 2, 1), 0);
    EXPECT_THROW(psi_exact(3, 1, 10, 1), std::invalid_argument);
}

// Independent count: odd valuation with unit in the chosen class.
TEST(PsiExact, MatchesDirectCount) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int j = 1 + static_cast<int>(rng() % 4);
        const i64 r = odd_prime(j);
        i64 u;
        do u = 1 + static_cast<i64>(rng() % 200);
        while (u % r == 0);
        const i64 v = static_cast<i64>(rng() % 500);
        const i64 i = 1 + static_cast<i64>(rng() % 100);
        i64 best = 0;
        for (int cls : {1, -1}) {
            i64 cnt = 0;
            for (i64 n = 1; n <= i; ++n) {
                i64 x = u * n + v, e = 0;
                while (x % r == 0) {
                    x /= r;
                    ++e;
                }
                if (e % 2 == 1 && legendre(x, r) * cls == -1) ++cnt;
            }
            best = std::max(best, cnt);
        }
        EXPECT_EQ(psi_exact(u, v, i, j), best);
    }
}

TEST(PsiExact, BoundedByAijAndCrudeBound) {
    std::mt19937_64 rng(41);
    for (int j = 1; j <= 5; ++j) {
        const i64 r = odd_prime(j);
        for (i64 i = 1; i <= 100; ++i) {
            const i64 a = a_ij(i, j);
            const i64 crude = (r + 1) / 2 * ceil_div(i, r * r);
            for (int t = 0; t < 500; ++t) {
                i64 u;
                do u = 1 + static_cast<i64>(rng() % 1000);
                while (u % r == 0);
                const i64 v = static_cast<i64>(rng() % 100000);
                const i64 ps = psi_exact(u, v, i, j);
                ASSERT_LE(ps, a) << "u=" << u << " v=" << v << " i=" << i << " j=" << j;
                ASSERT_LE(ps, crude) << "u=" << u << " v=" << v << " i=" << i << " j=" << j;
            }
        }
    }
}

TEST(Bij, Examples) {
    EXPECT_EQ(b_ij(7, 2, 6), 2);
    EXPECT_EQ(b_ij(7, 3, 6), 1);
    for (int j = 3; j <= 11; ++j) EXPECT_EQ(b_ij(7, j, 6), 1);
    EXPECT_EQ(b_ij(32, 1, 8), 6);
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(locally_rep_lower_bound(32, 8), 7);
    EXPECT_GT(locally_rep_lower_bound(25, 11), 0);
    EXPECT_EQ(locally_rep_lower_bound(1, 2), 0);
}

TEST(LowerBound, ReproducesUkBounds) {
    for (const auto& row : golden::uk_pairs()) {
        // n with 8n + a + b + c below k^2 a + b + c: i = a (k^2 - 1) / 8 - 1.
        const i64 i = (row.k * row.k - 1) / 8 * row.a - 1;
        EXPECT_EQ(locally_rep_lower_bound(i, 8), row.u_lower) << "a=" << row.a << " k=" << row.k;
    }
}

TEST(CoprimeProgression, Examples) {
    EXPECT_EQ(coprime_progression_min(1, 0, {3, 5}), 1);
    EXPECT_EQ(coprime_progression_min(2, 1, {3}), 0);
    EXPECT_THROW(coprime_progression_min(3, 1, {3}), std::invalid_argument);
}

TEST(CoprimeProgression, WithinBothBounds) {
    std::mt19937_64 rng(8);
    const std::vector<i64> pool = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int t = 0; t < 10000; ++t) {
        std::vector<i64> primes;
        for (i64 p : pool)
            if (rng() % 3 == 0) primes.push_back(p);
        if (primes.empty()) primes.push_back(pool[rng() % pool.size()]);
        i64 u;
        do u = 1 + static_cast<i64>(rng() % 100000);
        while (std::any_of(primes.begin(), primes.end(), [&](i64 p) { return u % p == 0; }));
        const i64 v = static_cast<i64>(rng() % 1000000) - 500000;
        const i64 n = coprime_progression_min(u, v, primes);
        const i64 s = static_cast<i64>(primes.size());
        EXPECT_LT(n, (s + 2) * (i64{1} << (s - 1)));
        if (s < primes.front()) {
            EXPECT_LE(n, s);
        }
        const i64 x = u * n + v;
        for (i64 p : primes) EXPECT_NE(x % p, 0);
    }
}

TEST(FindG, WitnessesSatisfyAllConditions) {
    int found = 0;
    for (i64 p : {5, 7, 11, 13})
        for (i64 a = 1; a <= 10; ++a)
            for (i64 b = a; b <= 10; ++b)
                for (i64 u = 1; u < p; ++u) {
                    if (a % p == 0 || b % p == 0) continue;
                    const Coeffs L{a, b, u * p};
                    const DiagLattice D(L);
                    if (!D.primitive() || !is_p_stable(D, p).stable || !is_anisotropic(D, p)) continue;
                    for (i64 d : {1, 8, 24}) {
                        if (d % p == 0) continue;
                        const auto w = find_g(L, p, d);
                        ++found;
                        EXPECT_GT(w.g, 0);
                        EXPECT_LT(w.g, p * p);
                        EXPECT_EQ(w.binary_target, d * w.g + a + b);
                        EXPECT_EQ(w.ternary_target, w.binary_target + u * p);
                        const std::array<i64, 2> bin{a, b};
                        EXPECT_FALSE(decide_zp_oracle(bin, w.binary_target, p).represented);
                        EXPECT_TRUE(decide_zp(D, w.ternary_target, p).represented);
                        EXPECT_LE(valuation(w.binary_target, p).exponent, 1);
                        EXPECT_LE(valuation(w.ternary_target, p).exponent, 1);
                        // Least witness.
                        for (i64 g = 1; g < w.g; ++g) {
                            const i64 x = d * g + a + b, y = x + u * p;
                            const bool ok = valuation(x, p).exponent <= 1 && valuation(y, p).exponent <= 1 &&
                                            !decide_zp_oracle(bin, x, p).represented &&
                                            decide_zp(D, y, p).represented;
                            EXPECT_FALSE(ok) << g;
                        }
                    }
                }
    EXPECT_GT(found, 50);
}

TEST(FindG, RejectsBadInput) {
    EXPECT_THROW(find_g({1, 1, 3}, 3, 8), std::invalid_argument);
    EXPECT_THROW(find_g({1, 2, 5}, 5, 10), std::invalid_argument);
}
