#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tritri/golden.hpp"
#include "tritri/watson.hpp"

using namespace tritri;

namespace {

int disc_order(const TriForm& F, i64 p) { return valuation(F.discriminant(), p).exponent; }

// Every primitive form with p | discriminant built from the units of F with p-exponents
// up to the bound whose lambda_p image is F.
std::set<TriForm> preimages_bruteforce(const TriForm& F, i64 p) {
    Coeffs units{};
    int max_e = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto v = valuation(F.coeffs()[i], p);
        units[i] = v.unit;
        max_e = std::max(max_e, v.exponent);
    }
    std::set<TriForm> out;
    const int cap = max_e + 4;
    for (int e0 = 0; e0 <= cap; ++e0)
        for (int e1 = 0; e1 <= cap; ++e1)
            for (int e2 = 0; e2 <= cap; ++e2) {
                if (std::min({e0, e1, e2}) != 0) continue;
                const DiagLattice G(units[0] * ipow(p, e0), units[1] * ipow(p, e1), units[2] * ipow(p, e2));
                if (G.discriminant() % p != 0) continue;
                if (TriForm(lambda_p(G, p).coeffs()) == F) out.insert(TriForm(G.coeffs()));
            }
    return out;
}

}  // namespace

TEST(Lambda, Examples) {
    EXPECT_EQ(lambda_p(DiagLattice(1, 9, 81), 3), DiagLattice(1, 1, 9));
    EXPECT_EQ(lambda_p(DiagLattice(1, 25, 25), 5), DiagLattice(1, 1, 1));
    EXPECT_EQ(lambda_p(DiagLattice(1, 3, 6), 3), DiagLattice(1, 2, 3));
    EXPECT_EQ(lambda_p(TriForm(1, 9, 81), 3), TriForm(1, 1, 9));
    EXPECT_EQ(lambda_p(TriForm(1, 25, 25), 5), TriForm(1, 1, 1));
    EXPECT_EQ(lambda_p(TriForm(1, 3, 6), 3), TriForm(1, 2, 3));
    EXPECT_EQ(lambda_p(TriForm(1, 2, 3), 5), TriForm(1, 2, 3));
}

TEST(Lambda, TwoUnitCoefficients) {
    // One unit pair plus p c: <pa, pb, c>; plus p^n c with n >= 2: <a, b, p^(n-2) c>.
    EXPECT_EQ(lambda_p(TriForm(1, 1, 3), 3), TriForm(1, 3, 3));
    EXPECT_EQ(lambda_p(TriForm(1, 1, 9), 3), TriForm(1, 1, 1));
    EXPECT_EQ(lambda_p(TriForm(1, 1, 27), 3), TriForm(1, 1, 3));
}

TEST(Lambda, DiscriminantOrderDropsWhenUnstable) {
    for (i64 p : {3, 5, 7})
        for (i64 a = 1; a <= 4; ++a)
            for (i64 b = a; b <= 60; ++b)
                for (i64 c = b; c <= 400; c += 3) {
                    if (gcd3(a, b, c) != 1) continue;
                    const TriForm F(a, b, c);
                    if (F.discriminant() % p != 0) continue;
                    if (is_p_stable(DiagLattice(F), p).stable) continue;
                    EXPECT_LT(disc_order(lambda_p(F, p), p), disc_order(F, p)) << F << " p=" << p;
                }
}

TEST(Descent, ExactlyOneHypothesisForUnstableForms) {
    std::mt19937_64 rng(99);
    int tested = 0;
    while (tested < 5000) {
        const i64 p = std::array<i64, 3>{3, 5, 7}[rng() % 3];
        const i64 a = 1 + static_cast<i64>(rng() % 10000), b = 1 + static_cast<i64>(rng() % 10000),
                  c = 1 + static_cast<i64>(rng() % 10000);
        if (gcd3(a, b, c) != 1) continue;
        const TriForm F(a, b, c);
        if (is_p_stable(DiagLattice(F), p).stable) continue;
        ++tested;
        std::array<Valuation, 3> v{};
        for (std::size_t i = 0; i < 3; ++i) v[i] = valuation(F.coeffs()[i], p);
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.exponent < y.exponent; });
        const bool both_scaled = v[1].exponent >= 1;
        const bool unit_pair = v[1].exponent == 0 && v[2].exponent >= 2 && legendre(-v[0].unit * v[1].unit, p) == -1;
        EXPECT_NE(both_scaled, unit_pair) << F << " p=" << p;
        const auto rule = descent_rule(F, p);
        ASSERT_TRUE(rule.has_value());
        EXPECT_EQ(*rule, both_scaled ? DescentRule::both_scaled : DescentRule::unit_pair_anisotropic);
    }
}

TEST(Stabilize, Examples) {
    const auto s = stabilize(TriForm(1, 9, 81));
    EXPECT_EQ(s.stable, TriForm(1, 1, 1));
    ASSERT_EQ(s.chain.size(), 2u);
    EXPECT_EQ(s.chain[0].after, TriForm(1, 1, 9));
    EXPECT_EQ(s.chain[0].p, 3);
    EXPECT_EQ(s.chain[1].p, 3);

    const auto t = stabilize(TriForm(1, 1, 3));
    EXPECT_EQ(t.stable, TriForm(1, 1, 3));
    EXPECT_TRUE(t.chain.empty());

    const auto u = stabilize(TriForm(3, 7, 63));
    const auto& s17 = golden::stable17();
    EXPECT_NE(std::find(s17.begin(), s17.end(), u.stable), s17.end()) << u.stable;
}

TEST(Stabilize, RegularFormsReachTheStableList) {
    const auto& s17 = golden::stable17();
    for (const auto& F : golden::regular49()) {
        const auto s = stabilize(F);
        EXPECT_TRUE(is_stable(DiagLattice(s.stable)));
        EXPECT_NE(std::find(s17.begin(), s17.end(), s.stable), s17.end()) << F;
        i64 budget = 0;
        for (i64 p : odd_prime_divisors(F.discriminant())) budget += disc_order(F, p);
        EXPECT_LE(static_cast<i64>(s.chain.size()), budget);
        for (const auto& step : s.chain) {
            EXPECT_EQ(step.after, lambda_p(step.before, step.p));
            EXPECT_NE(step.rule, DescentRule::identity);
        }
    }
}

TEST(Preimages, Examples) {
    const auto p3 = preimages(TriForm(1, 1, 1), 3);
    EXPECT_EQ(p3.row, "r=s=0");
    EXPECT_EQ(p3.images, (std::vector<TriForm>{TriForm(1, 1, 9), TriForm(1, 9, 9)}));
    const auto p5 = preimages(TriForm(1, 1, 1), 5);
    EXPECT_EQ(p5.images, (std::vector<TriForm>{TriForm(1, 1, 25), TriForm(1, 25, 25)}));
    const auto q = preimages(TriForm(1, 1, 9), 3);
    EXPECT_EQ(q.row, "r=0,s>=2");
    EXPECT_NE(std::find(q.images.begin(), q.images.end(), TriForm(1, 1, 81)), q.images.end());
    EXPECT_NE(std::find(q.images.begin(), q.images.end(), TriForm(1, 9, 81)), q.images.end());
}

TEST(Preimages, RoundTripOnRegularForms) {
    for (const auto& F : golden::regular49())
        for (i64 p : {3, 5, 7}) {
            const auto pre = preimages(F, p);
            std::set<TriForm> uniq(pre.images.begin(), pre.images.end());
            EXPECT_EQ(uniq.size(), pre.images.size());
            for (const auto& G : pre.images) EXPECT_EQ(lambda_p(G, p), F) << G << " -> " << F << " p=" << p;
        }
}

TEST(Preimages, MatchBruteForceInverse) {
    std::vector<TriForm> forms = golden::regular49();
    for (i64 p : {3, 5, 7}) {
        forms.emplace_back(1, 2 * p, 5 * p);
        forms.emplace_back(1, 2 * p, 4 * p * p);
        forms.emplace_back(2, p * p, p * p * p);
        forms.emplace_back(1, p, p * p * p * p);
        forms.emplace_back(2, 3 * p * p, 5 * p * p * p);
    }
    for (const auto& F : forms)
        for (i64 p : {3, 5, 7}) {
            if (gcd3(F.a(), F.b(), F.c()) != 1) continue;
            const auto pre = preimages(F, p);
            const std::set<TriForm> table(pre.images.begin(), pre.images.end());
            EXPECT_EQ(table, preimages_bruteforce(F, p)) << F << " p=" << p << " row " << pre.row;
        }
}

TEST(MissingPrimes, Candidates) {
    const auto c = missing_prime_candidates(TriForm(1, 1, 1), 11);
    EXPECT_EQ(c.scaled_pair, (std::vector<TriForm>{TriForm(1, 121, 121)}));
    EXPECT_EQ(c.scaled_single, (std::vector<TriForm>{TriForm(1, 1, 121)}));
    // -1 is a square mod 13, so shape (ii) is empty.
    EXPECT_TRUE(missing_prime_candidates(TriForm(1, 1, 1), 13).scaled_single.empty());
    const auto d = missing_prime_candidates(TriForm(1, 2, 3), 5);
    EXPECT_EQ(d.scaled_pair.size(), 3u);
    EXPECT_THROW(missing_prime_candidates(TriForm(1, 2, 3), 3), std::invalid_argument);
}
