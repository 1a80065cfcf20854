#include "oracles.hpp"

#include "sfroot/error.hpp"
#include "sfroot/ntcore.hpp"
#include "sfroot/sieve.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace sfroot;
using nt::u64;

TEST(IsPrime, Examples)
{
    EXPECT_TRUE(nt::is_prime(2));
    EXPECT_TRUE(nt::is_prime(2'513'954'577'154'021ULL));
    EXPECT_FALSE(nt::is_prime(1));
    EXPECT_FALSE(nt::is_prime(0));
}

TEST(IsPrime, AgreesWithTrialDivision)
{
    for (u64 n = 0; n < 100'000; ++n) {
        ASSERT_EQ(nt::is_prime(n), oracle::is_prime(n)) << n;
    }
}

TEST(IsPrime, StrongPseudoprimesRejected)
{
    for (u64 n : {561ULL, 2047ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL, 341550071728321ULL,
                  3825123056546413051ULL}) {
        if (n > 1) {
            EXPECT_FALSE(nt::is_prime(n)) << n;
        }
    }
    EXPECT_TRUE(nt::is_prime(18446744073709551557ULL));
    EXPECT_FALSE(nt::is_prime(18446744073709551615ULL));
}

TEST(IsPrime, RandomLargeAgainstTrialDivision)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> dist(1'000'000'000ULL, 1'000'000'000'000ULL);
    for (int i = 0; i < 300; ++i) {
        const u64 n = dist(rng) | 1;
        ASSERT_EQ(nt::is_prime(n), oracle::is_prime(n)) << n;
    }
}

TEST(Factor, Examples)
{
    auto f12 = nt::factor(12);
    ASSERT_EQ(f12.factors().size(), 2U);
    EXPECT_EQ(f12.factors()[0], (nt::PrimePower{2, 2}));
    EXPECT_EQ(f12.factors()[1], (nt::PrimePower{3, 1}));

    auto fb = nt::factor(223092870);
    EXPECT_EQ(fb.primes(), (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23}));
    for (const auto& pp : fb.factors()) {
        EXPECT_EQ(pp.exponent, 1U);
    }
    EXPECT_TRUE(nt::factor(1).factors().empty());
    EXPECT_EQ(nt::factor(1).value(), 1U);
}

TEST(Factor, RoundTripRandom)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<u64> dist(1, 1'000'000'000'000ULL);
    for (int i = 0; i < 100'000; ++i) {
        const u64 n = dist(rng);
        const auto f = nt::factor(n);
        u64 prod = 1;
        u64 last = 0;
        for (const auto& pp : f.factors()) {
            ASSERT_GT(pp.prime, last);
            ASSERT_GE(pp.exponent, 1U);
            ASSERT_TRUE(nt::is_prime(pp.prime));
            for (unsigned e = 0; e < pp.exponent; ++e) {
                prod *= pp.prime;
            }
            last = pp.prime;
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(Factor, AgreesWithTrialDivision)
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<u64> dist(1, 10'000'000'000ULL);
    for (int i = 0; i < 2000; ++i) {
        const u64 n = dist(rng);
        const auto f = nt::factor(n);
        const auto ref = oracle::factor(n);
        ASSERT_EQ(f.factors().size(), ref.size()) << n;
        for (std::size_t k = 0; k < ref.size(); ++k) {
            ASSERT_EQ(f.factors()[k].prime, ref[k].first);
            ASSERT_EQ(f.factors()[k].exponent, ref[k].second);
        }
    }
}

TEST(Factor, LargeSemiprimeNeedsRho)
{
    const u64 a = 1'000'000'007ULL;
    const u64 b = 998'244'353ULL;
    const auto f = nt::factor(a * b);
    EXPECT_EQ(f.primes(), (std::vector<u64>{b, a}));
    const u64 sq = 4'294'967'291ULL;
    EXPECT_EQ(nt::factor(sq * sq).factors()[0], (nt::PrimePower{sq, 2}));
}

TEST(Factor, BudgetExhaustionIsReported)
{
    nt::FactorBudget tight;
    tight.trial_limit = 100;
    tight.rho_attempts = 0;
    EXPECT_THROW(nt::factor(1'000'000'007ULL * 998'244'353ULL, tight), ResourceError);
}

TEST(FactoredInt, InvariantsRejected)
{
    EXPECT_THROW(nt::FactoredInt::from_factors({{3, 1}, {2, 1}}), DomainError);
    EXPECT_THROW(nt::FactoredInt::from_factors({{4, 1}}), DomainError);
    EXPECT_THROW(nt::FactoredInt::from_factors({{2, 0}}), DomainError);
}

TEST(FactoredInt, ArithmeticFunctions)
{
    const auto f = nt::factor(360); // 2^3 3^2 5
    EXPECT_EQ(f.omega(), 3U);
    EXPECT_EQ(f.radical(), 30U);
    EXPECT_EQ(f.euler_phi(), 96U);
    EXPECT_EQ(f.mobius(), 0);
    EXPECT_EQ(nt::factor(30).mobius(), -1);
    EXPECT_EQ(f.divisors().size(), 24U);
    EXPECT_EQ(f.squarefree_divisors().size(), 8U);
}

TEST(PrimeContext, InvariantsBelow2000)
{
    for (u64 p = 2; p < 2000; ++p) {
        if (!oracle::is_prime(p)) {
            continue;
        }
        const nt::PrimeContext ctx(p);
        ASSERT_EQ(ctx.pm1().value(), p - 1);
        u64 rad = 1;
        for (const auto& [q, e] : oracle::factor(p - 1)) {
            rad *= q;
        }
        ASSERT_EQ(ctx.radical(), rad);
        ASSERT_EQ(ctx.omega(), oracle::factor(p - 1).size());
        if (p == 2) {
            EXPECT_EQ(ctx.generator(), 1U);
            continue;
        }
        ASSERT_EQ(oracle::order(ctx.generator(), p), p - 1);
        for (u64 n = 1; n < ctx.generator(); ++n) {
            ASSERT_LT(oracle::order(n, p), p - 1);
        }
    }
    EXPECT_THROW(nt::PrimeContext(15), DomainError);
}

TEST(PrimitiveRoot, AgreesWithOrderAndCountIsPhi)
{
    for (u64 p = 3; p < 2000; ++p) {
        if (!oracle::is_prime(p)) {
            continue;
        }
        const nt::PrimeContext ctx(p);
        u64 count = 0;
        for (u64 n = 1; n < p; ++n) {
            const bool r = nt::is_primitive_root(n, ctx);
            ASSERT_EQ(r, oracle::order(n, p) == p - 1) << p << ' ' << n;
            count += r;
        }
        ASSERT_EQ(count, ctx.phi_pm1());
    }
}

TEST(PrimitiveRoot, Examples)
{
    EXPECT_TRUE(nt::is_primitive_root(2, nt::PrimeContext(3)));
    EXPECT_FALSE(nt::is_primitive_root(1, nt::PrimeContext(7)));
    EXPECT_TRUE(nt::is_primitive_root(3, nt::PrimeContext(7)));
    EXPECT_TRUE(nt::is_primitive_root(1, nt::PrimeContext(2)));
    EXPECT_THROW(nt::is_primitive_root(7, nt::PrimeContext(7)), DomainError);
}

TEST(EFree, Examples)
{
    const nt::PrimeContext c7(7);
    for (u64 n = 1; n < 7; ++n) {
        EXPECT_TRUE(nt::is_e_free(n, 1, c7));
    }
    EXPECT_FALSE(nt::is_e_free(4, 2, c7));
    EXPECT_TRUE(nt::is_e_free(3, 6, c7));
    EXPECT_EQ(nt::is_e_free(3, 6, c7), oracle::is_e_free(3, 6, 7));
    EXPECT_THROW(nt::is_e_free(3, 4, c7), DomainError);
    EXPECT_THROW(nt::is_e_free(14, 2, c7), DomainError);
}

TEST(EFree, MatchesPowerResidueOracleSmall)
{
    for (u64 p : {5ULL, 7ULL, 11ULL, 13ULL, 31ULL, 37ULL, 61ULL}) {
        const nt::PrimeContext ctx(p);
        for (u64 e : ctx.pm1().divisors()) {
            for (u64 n = 1; n < p; ++n) {
                ASSERT_EQ(nt::is_e_free(n, e, ctx), oracle::is_e_free(n, e, p)) << p << ' ' << e << ' ' << n;
            }
        }
    }
}

TEST(EFree, DependsOnlyOnRadical)
{
    for (u64 p = 3; p < 600; ++p) {
        if (!oracle::is_prime(p)) {
            continue;
        }
        const nt::PrimeContext ctx(p);
        for (u64 e : ctx.pm1().divisors()) {
            const u64 rad = nt::factor(e).radical();
            for (u64 n = 1; n < p; ++n) {
                ASSERT_EQ(nt::is_e_free(n, e, ctx), nt::is_e_free(n, rad, ctx));
            }
        }
    }
}

TEST(SquarePredicates, Examples)
{
    EXPECT_TRUE(nt::is_squarefree(10));
    EXPECT_FALSE(nt::is_squarefree(12));
    EXPECT_TRUE(nt::is_squarefree(1));
    EXPECT_TRUE(nt::is_squarefull(8));
    EXPECT_FALSE(nt::is_squarefull(12));
    EXPECT_TRUE(nt::is_squarefull(72));
    EXPECT_TRUE(nt::is_squarefull(1));
}

TEST(SquarePredicates, AgreeWithOracleAndOnlyOneIsBoth)
{
    for (u64 n = 1; n <= 100'000; ++n) {
        const bool sf = nt::is_squarefree(n);
        const bool sq = nt::is_squarefull(n);
        ASSERT_EQ(sf, oracle::is_squarefree(n)) << n;
        ASSERT_EQ(sq, oracle::is_squarefull(n)) << n;
        ASSERT_TRUE(!(sf && sq) || n == 1) << n;
    }
}

TEST(SquarefreeCount, Examples)
{
    EXPECT_EQ(nt::squarefree_count(u64{10}), 7U);
    EXPECT_EQ(nt::squarefree_count(u64{0}), 0U);
    EXPECT_EQ(nt::squarefree_count(u64{1}), 1U);
    EXPECT_EQ(nt::squarefree_count(10.9), 7U);
    EXPECT_THROW(nt::squarefree_count(-1.0), DomainError);
}

TEST(SquarefreeCount, AgreesWithScan)
{
    u64 running = 0;
    for (u64 x = 1; x <= 100'000; ++x) {
        running += oracle::is_squarefree(x);
        ASSERT_EQ(nt::squarefree_count(x), running) << x;
    }
}

TEST(SquarefreeCount, Large)
{
    // Known value Q(10^9).
    EXPECT_EQ(nt::squarefree_count(u64{1'000'000'000}), 607'927'124U);
}

TEST(SquarefreeFlags, MatchPredicate)
{
    const u64 lo = 999'900'000;
    const auto flags = nt::squarefree_flags(lo, lo + 50'000);
    for (u64 i = 0; i < flags.size(); ++i) {
        ASSERT_EQ(flags[i] != 0, oracle::is_squarefree(lo + i)) << lo + i;
    }
}

TEST(Squarefull, Examples)
{
    EXPECT_EQ(nt::squarefull_ascending(10), (std::vector<u64>{1, 4, 8, 9}));
    EXPECT_EQ(nt::squarefull_ascending(36), (std::vector<u64>{1, 4, 8, 9, 16, 25, 27, 32, 36}));
    EXPECT_EQ(nt::squarefull_ascending(3), (std::vector<u64>{1}));
    EXPECT_THROW(nt::squarefull_ascending(0), DomainError);
}

TEST(Squarefull, AgreesWithScan)
{
    const auto v = nt::squarefull_ascending(100'000);
    std::vector<u64> ref;
    for (u64 n = 1; n <= 100'000; ++n) {
        if (oracle::is_squarefull(n)) {
            ref.push_back(n);
        }
    }
    EXPECT_EQ(v, ref);
}

TEST(Mobius, AgreesWithFactorization)
{
    const auto mu = nt::mobius_table(10'000);
    EXPECT_EQ(mu[0], 0);
    for (u64 n = 1; n <= 10'000; ++n) {
        const auto f = oracle::factor(n);
        int expect = 1;
        for (const auto& [q, e] : f) {
            expect = e > 1 ? 0 : -expect;
            if (expect == 0) {
                break;
            }
        }
        ASSERT_EQ(mu[n], expect) << n;
    }
}

TEST(SmoothMultiples, Examples)
{
    nt::SmoothMultiples r(6, {2, 3}, 6, 30, true);
    EXPECT_EQ(std::vector<u64>(r.begin(), r.end()), (std::vector<u64>{6, 12, 18, 24}));
    nt::SmoothMultiples all(6, {2, 3}, 6, 30, false);
    EXPECT_EQ(std::vector<u64>(all.begin(), all.end()), (std::vector<u64>{6, 12, 18, 24, 30}));
    nt::SmoothMultiples empty(6, {2, 3}, 31, 30, true);
    EXPECT_TRUE(empty.begin() == empty.end());
    EXPECT_EQ(empty.unfiltered_size(), 0U);
}

TEST(SmoothMultiples, WindowCandidateCount)
{
    nt::SmoothMultiples w(223092870, {2, 3, 5, 7, 11, 13, 17, 19, 23}, 2'500'000'000'000'000ULL - 1,
                          3'340'000'000'000'000ULL - 1, false);
    EXPECT_LT(w.unfiltered_size(), 4'000'000U);
    EXPECT_GT(w.unfiltered_size(), 3'000'000U);
}

TEST(SmoothMultiples, FilterMatchesFactorization)
{
    const std::vector<u64> set{2, 3, 5};
    nt::SmoothMultiples r(7, set, 1, 7 * 5000, true);
    std::vector<u64> ref;
    for (u64 m = 1; m <= 5000; ++m) {
        bool ok = true;
        for (const auto& [q, e] : oracle::factor(m)) {
            ok = ok && std::find(set.begin(), set.end(), q) != set.end();
        }
        if (ok) {
            ref.push_back(7 * m);
        }
    }
    EXPECT_EQ(std::vector<u64>(r.begin(), r.end()), ref);
}

TEST(Primorial, Examples)
{
    EXPECT_EQ(nt::primorial(3), 30);
    EXPECT_EQ(nt::primorial(1), 2);
    EXPECT_EQ(nt::primorial(29), nt::BigInt("279734996817854936178276161872067809674997230"));
    EXPECT_EQ(nt::primorial(9), 223092870);
    EXPECT_THROW(nt::primorial(0), DomainError);
}

TEST(Primes, SieveMatchesOracle)
{
    const auto ps = nt::primes_up_to(20'000);
    std::vector<u64> ref;
    for (u64 n = 0; n <= 20'000; ++n) {
        if (oracle::is_prime(n)) {
            ref.push_back(n);
        }
    }
    EXPECT_EQ(ps, ref);
    EXPECT_EQ(nt::first_primes(10).back(), 29U);
}
