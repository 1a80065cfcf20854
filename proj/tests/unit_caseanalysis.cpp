#include "oracles.hpp"

#include "sfroot/caseanalysis.hpp"
#include "sfroot/counting.hpp"
#include "sfroot/error.hpp"
#include "sfroot/report_io.hpp"
#include "sfroot/sieve.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sfroot;
using cases::CaseStatus;
using nt::u64;

namespace {

constexpr u64 kBase = 223'092'870;

// Small window around the least survivor.
constexpr u64 kLo = 2'500'000'000'000'000ULL;
constexpr u64 kHi = 2'530'000'000'000'000ULL;

const cases::ProofReport& proof_096()
{
    static const cases::ProofReport r = [] {
        cases::ProofOptions opt;
        opt.direct_scan_limit = 200'000;
        opt.jobs = 4;
        return cases::full_proof(0.96, opt);
    }();
    return r;
}

} // namespace

TEST(RunCase, Examples)
{
    const auto c29 = cases::run_case(0.96, 29, 26);
    EXPECT_EQ(c29.status, CaseStatus::ClosedByBound);
    EXPECT_EQ(c29.primorial_floor, nt::BigInt("279734996817854936178276161872067809674997231"));
    EXPECT_LE(std::stod(c29.threshold), 9.2e18);
    EXPECT_EQ(cases::run_case(0.96, 8, 6).status, CaseStatus::ClosedByLloyd);
    const auto c13 = cases::run_case(0.96, 13, 10);
    EXPECT_EQ(c13.status, CaseStatus::RequiresEnumeration);
    EXPECT_LE(std::stod(c13.threshold), 3.34e15);
    EXPECT_GT(std::stod(c13.threshold), 2.5e15);
    EXPECT_THROW(cases::run_case(0.96, 7, 5), DomainError);
    EXPECT_THROW(cases::run_case(0.96, 30, 5), DomainError);
}

TEST(RunCase, StatusInvariants)
{
    for (unsigned omega = 8; omega <= 29; ++omega) {
        const auto c = cases::run_case(0.96, omega, cases::default_s_rule(omega));
        const double t = std::stod(c.threshold);
        if (c.status == CaseStatus::ClosedByBound) {
            EXPECT_LE(nt::BigInt(c.threshold.substr(0, c.threshold.find('.'))), c.floor) << omega;
        }
        if (c.status == CaseStatus::ClosedByLloyd) {
            EXPECT_LE(t, 2.5e15) << omega;
        }
        EXPECT_EQ(c.primorial_floor, nt::primorial(omega) + 1);
        EXPECT_NE(c.status, CaseStatus::Open) << omega;
    }
}

TEST(SRule, Values)
{
    EXPECT_EQ(cases::default_s_rule(29), 26U);
    EXPECT_EQ(cases::default_s_rule(14), 11U);
    EXPECT_EQ(cases::default_s_rule(13), 10U);
    EXPECT_EQ(cases::default_s_rule(12), 10U);
    EXPECT_EQ(cases::default_s_rule(8), 6U);
    EXPECT_EQ(cases::default_s_rule(7), 0U);
    EXPECT_EQ(cases::default_s_rule(30), 0U);
}

TEST(LargeOmega, ThirtyAndAboveClosed)
{
    const auto certs = cases::verify_large_omega(0.96, 30, 80);
    ASSERT_EQ(certs.size(), 51U);
    for (const auto& c : certs) {
        EXPECT_EQ(c.status, CaseStatus::ClosedByBound);
        EXPECT_EQ(c.s, 0U);
    }
    EXPECT_EQ(cases::verify_large_omega(1.0, 30, 30).size(), 1U);
}

TEST(LargeOmega, TwentyNineNeedsSieving)
{
    EXPECT_THROW(cases::verify_large_omega(0.96, 29, 29), CertificationError);
}

TEST(Tail, HoldsAtDefault)
{
    const auto t = cases::verify_omega_tail(0.96, 500);
    EXPECT_TRUE(t.holds());
    EXPECT_EQ(t.next_prime, nt::first_primes(501).back());
}

TEST(AlphaFloor, Value) { EXPECT_NEAR(cases::alpha_floor(), std::log(2.0) / std::log(3.0), 1e-15); }

TEST(Ladder, ClosesEveryForcedDivisor)
{
    const auto ladder = cases::forced_divisor_ladder(0.96);
    ASSERT_TRUE(ladder.closed());
    ASSERT_EQ(ladder.steps.size(), 8U);
    EXPECT_EQ(ladder.steps[0].q, 3U);
    EXPECT_EQ(ladder.steps[0].method, cases::LadderMethod::Size);
    EXPECT_GT(std::stod(ladder.steps[0].witness), 4.3e15);
    EXPECT_EQ(ladder.steps[1].q, 5U);
    EXPECT_EQ(ladder.steps[1].method, cases::LadderMethod::Bound);
    EXPECT_LT(std::stod(ladder.steps[1].witness), 2.5e15);
    EXPECT_EQ(ladder.steps.back().q, 23U);
    EXPECT_EQ(ladder.steps.back().s, 11U);
}

TEST(Omega13, WindowHi) { EXPECT_EQ(cases::omega13_window_hi(0.96), 3'340'000'000'000'000ULL); }

TEST(Omega13, SmallWindowMatchesBruteFilter)
{
    const auto rec = cases::omega13_pipeline(0.96, kLo, kHi, 1);
    EXPECT_EQ(rec.base, kBase);

    u64 candidates = 0;
    u64 primes = 0;
    for (u64 m = (kLo - 1 + kBase - 1) / kBase; m * kBase + 1 <= kHi; ++m) {
        const u64 p = m * kBase + 1;
        if (p < kLo) {
            continue;
        }
        ++candidates;
        if (nt::is_prime(p) && oracle::factor(p - 1).size() == 13) {
            ++primes;
        }
    }
    EXPECT_EQ(rec.candidate_count, candidates);
    EXPECT_EQ(rec.prime_count, primes);
    EXPECT_EQ(rec.eliminated.size() + rec.survivors.size(), rec.prime_count);
    EXPECT_EQ(rec.survivor_count, rec.survivors.size());
    ASSERT_FALSE(rec.survivors.empty());
    EXPECT_EQ(rec.smallest_survivor, 2'513'954'577'154'021ULL);
}

TEST(Omega13, DeterministicAcrossJobs)
{
    const auto a = cases::omega13_pipeline(0.96, kLo, kHi, 1);
    const auto b = cases::omega13_pipeline(0.96, kLo, kHi, 5);
    EXPECT_EQ(a, b);
    EXPECT_EQ(io::to_lines(a), io::to_lines(b));
}

TEST(Omega13, SurvivorsAreAFixedPoint)
{
    const auto rec = cases::omega13_pipeline(0.96, kLo, kHi, 2);
    for (const auto& s : rec.survivors) {
        ASSERT_TRUE(nt::is_prime(s.p));
        ASSERT_EQ((s.p - 1) % kBase, 0U);
        ASSERT_EQ(oracle::factor(s.p - 1).size(), 13U);
        ASSERT_GE(s.p, kLo);
        ASSERT_LE(s.p, kHi);
        const auto cfg = bounds::make_sieve_config(nt::PrimeContext(s.p), 10);
        ASSERT_EQ(cfg.delta, s.delta);
        ASSERT_FALSE(bounds::eval_Gs(bounds::Enclosure::exact(s.p), 0.96, 3, s.delta, 10).verdict);
        ASSERT_LT(s.least_squarefree_root, cases::kSurvivorRootLimit);
        ASSERT_EQ(s.least_squarefree_root, oracle::least_squarefree_primroot_big(s.p));
    }
    for (const auto& e : rec.eliminated) {
        ASSERT_TRUE(bounds::eval_Gs(bounds::Enclosure::exact(e.p), 0.96, 3, e.delta, 10).verdict);
    }
}

TEST(FullProof, RejectsAlphaBelowFloor)
{
    EXPECT_THROW(cases::full_proof(0.60), DomainError);
    EXPECT_THROW(cases::full_proof(0.63), DomainError);
    EXPECT_THROW(cases::full_proof(1.01), DomainError);
}

TEST(FullProof, CompleteAt096)
{
    const auto& r = proof_096();
    EXPECT_TRUE(r.complete());
    EXPECT_FALSE(r.residual_p0.has_value());
    EXPECT_TRUE(r.direct.violations.empty());
    EXPECT_TRUE(r.lloyd.violations.empty());
    ASSERT_TRUE(r.omega13.has_value());
    EXPECT_EQ(r.omega13->prime_count, 518U);
    EXPECT_EQ(r.omega13->survivor_count, 25U);
    EXPECT_TRUE(r.tail.holds());
}

TEST(FullProof, ReverifiesAndCovers)
{
    const auto& r = proof_096();
    EXPECT_TRUE(cases::reverify(r, 256).empty());
    EXPECT_TRUE(cases::reverify(r, 96).empty());
    EXPECT_TRUE(cases::audit_coverage(r).empty());
}

TEST(FullProof, AuditDetectsMissingCase)
{
    auto r = proof_096();
    r.cases.erase(r.cases.begin() + 3);
    EXPECT_FALSE(cases::audit_coverage(r).empty());
}

TEST(FullProof, ReportRoundTrip)
{
    const auto& r = proof_096();
    const std::string text = io::to_lines(r);
    const auto back = io::proof_from_lines(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(io::to_lines(back), text);
}

TEST(FullProof, ThreeQuartersHasResidual)
{
    cases::ProofOptions opt;
    opt.direct_scan_limit = 10'000;
    const auto r = cases::full_proof(0.75, opt);
    EXPECT_TRUE(r.complete());
    ASSERT_TRUE(r.residual_p0.has_value());
    const double p0 = std::stod(*r.residual_p0);
    EXPECT_GT(p0, 1e33);
    EXPECT_LT(p0, 1e36);
}
