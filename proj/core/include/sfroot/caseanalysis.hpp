#pragma once

// Certificate-producing driver for the bound g_sf(p) < p^alpha: one
// certificate per omega(p-1), the forced-divisor ladder and enumeration for
// the omega = 13 window, a direct scan for small p, and the aggregate report.

#include "sfroot/bounds.hpp"
#include "sfroot/ntcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfroot::cases {

using bounds::BigInt;
using bounds::Rational;
using nt::u64;

// External table: the least prime primitive root is below sqrt(p) - 2 for
// 2791 < p < 2.5e15.
inline constexpr u64 kLloydLower = 2791;
inline constexpr u64 kLloydUpper = 2'500'000'000'000'000ULL;

// Lowest exponent any all-primes bound can reach (p = 3 has only the root 2).
double alpha_floor();

enum class CaseStatus { ClosedByBound, ClosedByLloyd, RequiresEnumeration, Open };

std::string_view to_string(CaseStatus s);
CaseStatus case_status_from_string(std::string_view s);

struct CaseCertificate {
    unsigned omega = 0;
    // 0 = plain G.
    unsigned s = 0;
    std::vector<u64> excluded;
    std::optional<Rational> delta_min;
    // Least p (rounded up) from which the bound's verdict holds.
    std::string threshold;
    BigInt primorial_floor;
    // max(primorial_floor, kLloydUpper) when the Lloyd range is trusted.
    BigInt floor;
    CaseStatus status = CaseStatus::Open;
    bool stable = false;
    bool monotone_beyond = false;
    std::string notes;

    bool operator==(const CaseCertificate&) const = default;
};

struct CaseOptions {
    bool trust_lloyd = true;
    // Highest p covered by the direct scan; bounds the Lloyd range when it is not trusted.
    u64 direct_scan_limit = 10'000'000;
    std::string threshold_ceiling = "1e2000";
};

// Certificate for omega with s sieving primes (s = 0: plain G).
CaseCertificate evaluate_case(double alpha, unsigned omega, unsigned s, const CaseOptions& options = {},
                              const std::vector<u64>& excluded = {});

// As evaluate_case, restricted to 8 <= omega <= 29.
CaseCertificate run_case(double alpha, unsigned omega, unsigned s);

// s = omega-3 for 14..29, omega-2 for 8..12, 10 at 13; 0 (plain G) otherwise.
unsigned default_s_rule(unsigned omega);

// Certifies plain G at primorial(omega)+1 and beyond for each omega in range.
// Throws CertificationError listing every omega that fails.
std::vector<CaseCertificate> verify_large_omega(double alpha, unsigned omega_min, unsigned omega_max = 500);

// Induction step covering every omega > omega_max for plain G.
struct TailCertificate {
    unsigned omega_max = 0;
    u64 next_prime = 0;
    bool base_verdict = false;
    bool step_holds = false;
    std::string notes;

    bool holds() const { return base_verdict && step_holds; }
    bool operator==(const TailCertificate&) const = default;
};

TailCertificate verify_omega_tail(double alpha, unsigned omega_max);

enum class LadderMethod { Size, Bound };

std::string_view to_string(LadderMethod m);

struct LadderStep {
    u64 q = 0;
    unsigned s = 0;
    LadderMethod method = LadderMethod::Size;
    // Size: smallest p-1 with omega = 13 and q excluded. Bound: threshold with q excluded.
    std::string witness;
    std::optional<Rational> delta;
    bool closed = false;

    bool operator==(const LadderStep&) const = default;
};

struct LadderResult {
    std::string window_lo;
    std::string window_hi;
    std::vector<LadderStep> steps;

    bool closed() const;
    bool operator==(const LadderResult&) const = default;
};

// Upper end of the omega = 13 window: the s = 10 threshold rounded up to 3
// significant figures.
u64 omega13_window_hi(double alpha);

// Shows each q in {3, 5, ..., 23} must divide p-1 for any prime with
// omega(p-1) = 13 left uncovered in [2.5e15, window_hi]. Throws
// CertificationError naming the first q that cannot be closed.
LadderResult forced_divisor_ladder(double alpha);

struct Omega13Survivor {
    u64 p = 0;
    Rational delta;
    double gs_value = 0.0;
    u64 least_squarefree_root = 0;

    bool operator==(const Omega13Survivor&) const = default;
};

struct Omega13Eliminated {
    u64 p = 0;
    Rational delta;
    double gs_value = 0.0;

    bool operator==(const Omega13Eliminated&) const = default;
};

struct Omega13Record {
    u64 base = 0;
    u64 window_lo = 0;
    u64 window_hi = 0;
    u64 candidate_count = 0;
    u64 prime_count = 0;
    std::vector<Omega13Eliminated> eliminated;
    std::vector<Omega13Survivor> survivors;
    u64 survivor_count = 0;
    u64 smallest_survivor = 0;
    bool endpoints_clear = false;

    bool operator==(const Omega13Record&) const = default;
};

inline constexpr u64 kSurvivorRootLimit = 100;

// Enumerates p = m * (2*3*...*23) + 1 across the window, keeps primes with
// omega(p-1) = 13, eliminates them with the exact-delta G_s (s = 10), and
// certifies a square-free primitive root below 100 for each survivor.
Omega13Record omega13_pipeline(double alpha, unsigned jobs = 1);
Omega13Record omega13_pipeline(double alpha, u64 window_lo, u64 window_hi, unsigned jobs = 1);

struct DirectScanSummary {
    u64 limit = 0;
    u64 primes_checked = 0;
    std::vector<u64> violations;

    bool operator==(const DirectScanSummary&) const = default;
};

struct LloydCheck {
    bool trusted = false;
    u64 verified_from = 0;
    u64 verified_to = 0;
    u64 primes_checked = 0;
    std::vector<u64> violations;

    bool operator==(const LloydCheck&) const = default;
};

struct ProofOptions {
    bool trust_lloyd = true;
    u64 direct_scan_limit = 10'000'000;
    unsigned omega_max = 500;
    unsigned jobs = 1;
};

struct ProofReport {
    double alpha = 0.0;
    ProofOptions options;
    DirectScanSummary direct;
    LloydCheck lloyd;
    std::vector<CaseCertificate> cases;
    std::optional<LadderResult> ladder;
    std::optional<Omega13Record> omega13;
    TailCertificate tail;
    // Set when some case stays open: the bound is proved only for p > residual_p0.
    std::optional<std::string> residual_p0;
    std::vector<std::string> failures;

    bool complete() const { return failures.empty(); }
    bool operator==(const ProofReport& o) const
    {
        return alpha == o.alpha && options.trust_lloyd == o.options.trust_lloyd &&
               options.direct_scan_limit == o.options.direct_scan_limit && options.omega_max == o.options.omega_max &&
               direct == o.direct && lloyd == o.lloyd && cases == o.cases && ladder == o.ladder &&
               omega13 == o.omega13 && tail == o.tail && residual_p0 == o.residual_p0 && failures == o.failures;
    }
};

// Throws DomainError unless alpha_floor() < alpha <= 1.
ProofReport full_proof(double alpha, const ProofOptions& options = {});

// Re-evaluates every bound certificate in the report at a different working
// precision. Returns a description of each certificate that fails to re-verify.
std::vector<std::string> reverify(const ProofReport& report, mpfr_prec_t precision = 256);

// Checks that the report's cases, scans and external ranges leave no prime uncovered.
std::vector<std::string> audit_coverage(const ProofReport& report);

} // namespace sfroot::cases
