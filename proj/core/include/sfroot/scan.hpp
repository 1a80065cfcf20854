#pragma once

// Range scans over primes: least square-free / square-full / prime primitive
// roots checked against a per-kind predicate. Work is split into fixed-size
// chunks; any number of workers may process chunks, and the reducer merges
// them in chunk order, so reports do not depend on the worker count.

#include "sfroot/ntcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfroot::scan {

using nt::u64;

enum class ScanKind {
    // g_sf(p) < sqrt(p) - 2, asserted for p > 409.
    SquarefreeConjecture,
    // Primes with no square-full primitive root below p.
    SquarefullDudek,
    // g_sf(p) < p^alpha.
    TheoremDirect,
    // Least prime primitive root < sqrt(p) - 2, asserted for p > 2791.
    LloydPrimeRoot,
};

std::string_view to_string(ScanKind k);
ScanKind scan_kind_from_string(std::string_view s);

inline constexpr u64 kConjectureCutoff = 409;
inline constexpr u64 kLloydCutoff = 2791;
inline constexpr u64 kDefaultScanCeiling = 10'000'000'000ULL;
inline constexpr u64 kCheckpointThreshold = 1'000'000;

// SFROOT_SCAN_CEILING overrides the default ceiling.
u64 scan_ceiling();

struct Violation {
    u64 p = 0;
    // The least root found, or empty when none exists below p.
    std::optional<u64> value;

    bool operator==(const Violation&) const = default;
};

struct ScanReport {
    ScanKind kind = ScanKind::SquarefreeConjecture;
    u64 from = 0;
    u64 to = 0;
    // Only meaningful for TheoremDirect.
    double alpha = 0.0;
    u64 primes_scanned = 0;
    // Primes failing the predicate inside the range where it is asserted.
    std::vector<Violation> violations;
    // Failures at or below the kind's cutoff (conjecture / Lloyd kinds).
    std::vector<Violation> exempt_failures;
    // Largest root/sqrt(p) among primes where the predicate is asserted.
    std::optional<u64> worst_p;
    std::optional<u64> worst_value;
    double worst_ratio = 0.0;
    u64 chunks = 0;
    // Wall-clock metadata; excluded from the deterministic serialization.
    double seconds = 0.0;

    std::optional<u64> largest_violation() const
    {
        return violations.empty() ? std::nullopt : std::optional<u64>(violations.back().p);
    }
    bool operator==(const ScanReport& o) const
    {
        return kind == o.kind && from == o.from && to == o.to && alpha == o.alpha &&
               primes_scanned == o.primes_scanned && violations == o.violations &&
               exempt_failures == o.exempt_failures && worst_p == o.worst_p && worst_value == o.worst_value &&
               worst_ratio == o.worst_ratio && chunks == o.chunks;
    }
};

struct ScanOptions {
    unsigned jobs = 1;
    u64 chunk_size = u64{1} << 20;
    double alpha = 0.96;
    // When non-empty, completed chunks are appended here and reused on restart.
    std::string checkpoint_path;
    // 0 means scan_ceiling().
    u64 ceiling = 0;
};

// Throws DomainError if from > to, ResourceError if `to` exceeds the ceiling.
ScanReport run_scan(ScanKind kind, u64 from, u64 to, const ScanOptions& options = {});

// g < p^alpha, decided exactly (double fast path, MPFR when close).
bool below_power(u64 g, u64 p, double alpha);

} // namespace sfroot::scan
