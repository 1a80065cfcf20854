#include "oracles.hpp"

#include "sfroot/charsum.hpp"
#include "sfroot/error.hpp"
#include "sfroot/sieve.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace sfroot;
using charsum::Character;
using charsum::Complex;
using nt::u64;

namespace {

charsum::IndexTablePtr table_for(u64 p) { return charsum::make_index_table(nt::PrimeContext(p)); }

} // namespace

TEST(IndexTable, PowersOfTwoModFive)
{
    const auto t = table_for(5);
    EXPECT_EQ(t->context().generator(), 2U);
    EXPECT_EQ(t->index(1), 0U);
    EXPECT_EQ(t->index(2), 1U);
    EXPECT_EQ(t->index(3), 3U);
    EXPECT_EQ(t->index(4), 2U);
}

TEST(IndexTable, InvertsPowering)
{
    for (u64 p : {3ULL, 7ULL, 101ULL, 1999ULL, 65537ULL}) {
        const auto t = table_for(p);
        const u64 g = t->context().generator();
        EXPECT_EQ(t->index(1), 0U);
        EXPECT_EQ(t->index(g), 1U);
        for (u64 n = 1; n < p; ++n) {
            ASSERT_EQ(nt::powmod(g, t->index(n), p), n);
        }
    }
}

TEST(IndexTable, BoundIsEnforced)
{
    EXPECT_THROW(charsum::make_index_table(nt::PrimeContext(10'000'019), 10'000'000), ResourceError);
    EXPECT_NO_THROW(charsum::make_index_table(nt::PrimeContext(101), 101));
}

TEST(Characters, OrderSetsPartitionTheGroup)
{
    for (u64 p = 3; p < 400; ++p) {
        if (!oracle::is_prime(p)) {
            continue;
        }
        const auto t = table_for(p);
        std::set<u64> seen;
        for (u64 d : t->context().pm1().divisors()) {
            const auto chars = charsum::characters_of_order(t, d);
            ASSERT_EQ(chars.size(), nt::factor(d).euler_phi());
            for (const auto& c : chars) {
                ASSERT_EQ(c.order(), d);
                ASSERT_EQ(c.order(), (p - 1) / std::gcd(c.t(), p - 1));
                ASSERT_TRUE(seen.insert(c.t()).second);
            }
        }
        ASSERT_EQ(seen.size(), p - 1);
    }
}

TEST(Characters, Examples)
{
    EXPECT_EQ(charsum::characters_of_order(table_for(7), 1).size(), 1U);
    EXPECT_TRUE(charsum::characters_of_order(table_for(7), 1)[0].is_principal());
    EXPECT_EQ(charsum::characters_of_order(table_for(7), 2).size(), 1U);
    EXPECT_EQ(charsum::characters_of_order(table_for(7), 3).size(), 2U);
    EXPECT_THROW(charsum::characters_of_order(table_for(7), 4), DomainError);
}

TEST(Characters, Multiplicative)
{
    const u64 p = 211;
    const auto t = table_for(p);
    for (u64 k = 0; k < p - 1; k += 7) {
        const Character chi(t, k);
        for (u64 n = 1; n < p; n += 3) {
            for (u64 m = 1; m < p; m += 5) {
                ASSERT_LT(std::abs(chi(n) * chi(m) - chi(n * m % p)), 1e-12);
            }
        }
        EXPECT_EQ(chi(p), Complex(0, 0));
        EXPECT_LT(std::abs(std::abs(chi(2)) - 1.0), 1e-12);
    }
}

TEST(Indicator, Examples)
{
    EXPECT_DOUBLE_EQ(std::round(charsum::indicator_primroot(table_for(3), 2)), 1.0);
    EXPECT_DOUBLE_EQ(std::round(charsum::indicator_primroot(table_for(7), 1)), 0.0);
    EXPECT_DOUBLE_EQ(std::round(charsum::indicator_primroot(table_for(7), 3)), 1.0);
    EXPECT_DOUBLE_EQ(std::round(charsum::indicator_efree(table_for(7), 2, 4)), 0.0);
    EXPECT_DOUBLE_EQ(std::round(charsum::indicator_efree(table_for(13), 6, 2)), 1.0);
    for (u64 n = 1; n < 13; ++n) {
        EXPECT_NEAR(charsum::indicator_efree(table_for(13), 1, n), 1.0, 1e-12);
    }
    EXPECT_THROW(charsum::indicator_efree(table_for(13), 5, 2), DomainError);
}

TEST(Indicator, MatchesOrderOracle)
{
    for (u64 p = 3; p < 500; ++p) {
        if (!oracle::is_prime(p)) {
            continue;
        }
        const auto t = table_for(p);
        for (u64 n = 1; n < p; ++n) {
            const double f = charsum::indicator_primroot(t, n);
            ASSERT_NEAR(f, oracle::is_primroot(n, p) ? 1.0 : 0.0, charsum::kIntegralityTolerance) << p << ' ' << n;
            ASSERT_NEAR(charsum::indicator_efree(t, p - 1, n), f, 1e-9);
        }
    }
}

TEST(CharSumInterval, Orthogonality)
{
    for (u64 p : {101ULL, 1009ULL, 9973ULL}) {
        const auto t = table_for(p);
        for (u64 k = 1; k < p - 1; k += (p / 50) + 1) {
            EXPECT_LT(std::abs(charsum::char_sum_interval(Character(t, k), 0, p - 1)), 1e-9);
        }
        EXPECT_NEAR(charsum::char_sum_interval(Character(t, 0), 0, p - 1).real(), double(p - 1), 1e-9);
    }
    EXPECT_THROW(charsum::char_sum_interval(Character(table_for(7), 1), 5, 4), DomainError);
}

TEST(CharSumInterval, AgreesWithDirectLoop)
{
    const u64 p = 1009;
    const auto t = table_for(p);
    const Character chi(t, 17);
    Complex direct{0, 0};
    for (u64 n = 101; n <= 2500; ++n) {
        direct += chi(n);
    }
    EXPECT_LT(std::abs(charsum::char_sum_interval(chi, 100, 2500) - direct), 1e-9);
}

TEST(CharSumSquarefree, PrincipalGivesSquarefreeCount)
{
    const u64 p = 1999;
    const Character chi0(table_for(p), 0);
    for (u64 x : {1ULL, 2ULL, 10ULL, 500ULL, 1998ULL}) {
        EXPECT_NEAR(charsum::char_sum_squarefree(chi0, x).real(), double(oracle::squarefree_count(x)), 1e-9);
    }
    EXPECT_THROW(charsum::char_sum_squarefree(chi0, 0), DomainError);
}

TEST(CharSumSquarefree, RoutesAgreeAndMatchDirectSum)
{
    for (u64 p : {13ULL, 211ULL, 997ULL}) {
        const auto t = table_for(p);
        for (u64 k = 1; k < p - 1; k += 5) {
            const Character chi(t, k);
            for (u64 x = 1; x < p; x += 37) {
                const auto r = charsum::char_sum_squarefree_routes(chi, x);
                Complex ref{0, 0};
                for (u64 n = 1; n <= x; ++n) {
                    if (oracle::is_squarefree(n)) {
                        ref += chi(n);
                    }
                }
                ASSERT_LT(std::abs(r.moebius_route - ref), 1e-6);
                ASSERT_LT(std::abs(r.direct_route - ref), 1e-6);
            }
        }
    }
    EXPECT_LT(std::abs(charsum::char_sum_squarefree(Character(table_for(7), 3), 1) - Complex(1, 0)), 1e-12);
}

TEST(CompensatedSum, RecoversCancelledTerms)
{
    charsum::CompensatedSum s;
    s.add({1e16, 0});
    s.add({1.0, 1.0});
    s.add({-1e16, 0});
    EXPECT_EQ(s.value(), Complex(1.0, 1.0));
}
