#pragma once

// Exact counts of square-free / square-full primitive roots and e-free
// square-free integers up to x < p, with the explicit main term and error
// bound where the character-sum machinery supplies one; least-element
// searches g_sf(p), g_sfull(p) and the least prime primitive root.

#include "sfroot/ntcore.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace sfroot::counting {

using nt::u64;

enum class CountKind { SquarefreePrimroot, EfreeSquarefree, SquarefullPrimroot };

std::string_view to_string(CountKind kind);

struct CountResult {
    u64 p = 0;
    u64 x = 0;
    CountKind kind = CountKind::SquarefreePrimroot;
    std::optional<u64> e;
    u64 count = 0;
    // (phi(e)/e) (6/pi^2) x for the square-free kinds.
    std::optional<double> main_term;
    // (phi(e)/e) (0.104 sqrt x + 2^(omega(e)+1) x^(1/2) p^(1/4) (log p)^(1/2)).
    std::optional<double> error_bound;
};

CountResult count_squarefree_primroots(const nt::PrimeContext& ctx, u64 x);
CountResult count_efree_squarefree(const nt::PrimeContext& ctx, u64 e, u64 x);
CountResult count_squarefull_primroots(const nt::PrimeContext& ctx, u64 x);

// Optional lookup table for scans: flags[n] != 0 iff n is square-free,
// valid for n < flags.size(). Candidates past the table fall back to factoring.
struct SquarefreeLookup {
    std::span<const std::uint8_t> flags;

    bool operator()(u64 n) const;
};

u64 least_squarefree_primroot(const nt::PrimeContext& ctx, SquarefreeLookup lookup = {});

// Candidates are taken from `squarefull` (ascending); when empty the list is
// generated up to p-1.
std::optional<u64> least_squarefull_primroot(const nt::PrimeContext& ctx, std::span<const u64> squarefull = {});

// Throws ResourceError when no prime primitive root lies below p.
u64 least_prime_primroot(const nt::PrimeContext& ctx, std::span<const u64> primes = {});

} // namespace sfroot::counting
