#include "sfroot/counting.hpp"

#include "sfroot/error.hpp"
#include "sfroot/sieve.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sfroot::counting {

std::string_view to_string(CountKind kind)
{
    switch (kind) {
    case CountKind::SquarefreePrimroot:
        return "squarefree-primroot";
    case CountKind::EfreeSquarefree:
        return "efree-squarefree";
    case CountKind::SquarefullPrimroot:
        return "squarefull-primroot";
    }
    return "unknown";
}

namespace {

void require_below_p(const nt::PrimeContext& ctx, u64 x, const char* what)
{
    if (x == 0 || x >= ctx.p()) {
        throw DomainError(std::string(what) + ": require 1 <= x < p (x = " + std::to_string(x) +
                          ", p = " + std::to_string(ctx.p()) + ")");
    }
}

// Fills main term and error bound for the e-free square-free count.
void attach_estimate(CountResult& r, const nt::PrimeContext& ctx, u64 e)
{
    double density = 1.0;
    unsigned omega_e = 0;
    for (const auto& f : ctx.pm1().factors()) {
        if (e % f.prime == 0) {
            density *= 1.0 - 1.0 / static_cast<double>(f.prime);
            ++omega_e;
        }
    }
    const double x = static_cast<double>(r.x);
    const double p = static_cast<double>(ctx.p());
    r.main_term = density * (6.0 / (std::numbers::pi * std::numbers::pi)) * x;
    const double char_term =
        std::ldexp(1.0, static_cast<int>(omega_e) + 1) * std::sqrt(x) * std::pow(p, 0.25) * std::sqrt(std::log(p));
    r.error_bound = density * (0.104 * std::sqrt(x) + char_term);
}

} // namespace

CountResult count_efree_squarefree(const nt::PrimeContext& ctx, u64 e, u64 x)
{
    if (e == 0 || (ctx.p() - 1) % e != 0) {
        throw DomainError("count_efree_squarefree: e = " + std::to_string(e) + " does not divide p-1");
    }
    require_below_p(ctx, x, "count_efree_squarefree");
    const auto flags = nt::squarefree_flags(1, x + 1);
    u64 count = 0;
    for (u64 n = 1; n <= x; ++n) {
        if (flags[n - 1] && nt::is_e_free(n, e, ctx)) {
            ++count;
        }
    }
    CountResult r{.p = ctx.p(), .x = x, .kind = CountKind::EfreeSquarefree, .e = e, .count = count, .main_term = std::nullopt, .error_bound = std::nullopt};
    attach_estimate(r, ctx, e);
    return r;
}

CountResult count_squarefree_primroots(const nt::PrimeContext& ctx, u64 x)
{
    require_below_p(ctx, x, "count_squarefree_primroots");
    const auto flags = nt::squarefree_flags(1, x + 1);
    u64 count = 0;
    for (u64 n = 1; n <= x; ++n) {
        if (flags[n - 1] && nt::is_primitive_root(n, ctx)) {
            ++count;
        }
    }
    CountResult r{.p = ctx.p(), .x = x, .kind = CountKind::SquarefreePrimroot, .e = std::nullopt, .count = count, .main_term = std::nullopt, .error_bound = std::nullopt};
    attach_estimate(r, ctx, ctx.p() - 1);
    return r;
}

CountResult count_squarefull_primroots(const nt::PrimeContext& ctx, u64 x)
{
    require_below_p(ctx, x, "count_squarefull_primroots");
    u64 count = 0;
    for (u64 n : nt::squarefull_ascending(x)) {
        if (nt::is_primitive_root(n, ctx)) {
            ++count;
        }
    }
    return {.p = ctx.p(), .x = x, .kind = CountKind::SquarefullPrimroot, .e = std::nullopt, .count = count, .main_term = std::nullopt, .error_bound = std::nullopt};
}

bool SquarefreeLookup::operator()(u64 n) const
{
    if (n < flags.size()) {
        return flags[n] != 0;
    }
    return nt::is_squarefree(n);
}

u64 least_squarefree_primroot(const nt::PrimeContext& ctx, SquarefreeLookup lookup)
{
    const u64 p = ctx.p();
    if (p == 2) {
        return 1;
    }
    for (u64 n = 2; n < p; ++n) {
        if (lookup(n) && nt::is_primitive_root(n, ctx)) {
            return n;
        }
    }
    throw InvariantError("least_squarefree_primroot: no square-free primitive root below p = " + std::to_string(p));
}

std::optional<u64> least_squarefull_primroot(const nt::PrimeContext& ctx, std::span<const u64> squarefull)
{
    const u64 p = ctx.p();
    if (p == 2) {
        throw DomainError("least_squarefull_primroot: requires p > 2");
    }
    std::vector<u64> owned;
    if (squarefull.empty() || squarefull.back() < p - 1) {
        owned = nt::squarefull_ascending(p - 1);
        squarefull = owned;
    }
    for (u64 n : squarefull) {
        if (n >= p) {
            break;
        }
        if (nt::is_primitive_root(n, ctx)) {
            return n;
        }
    }
    return std::nullopt;
}

u64 least_prime_primroot(const nt::PrimeContext& ctx, std::span<const u64> primes)
{
    const u64 p = ctx.p();
    if (p == 2) {
        throw DomainError("least_prime_primroot: requires an odd prime");
    }
    u64 next = 2;
    for (u64 q : primes) {
        if (q >= p) {
            break;
        }
        if (nt::is_primitive_root(q, ctx)) {
            return q;
        }
        next = q + 1;
    }
    for (u64 q = next; q < p; ++q) {
        if (nt::is_prime(q) && nt::is_primitive_root(q, ctx)) {
            return q;
        }
    }
    throw ResourceError("least_prime_primroot: no prime primitive root below p = " + std::to_string(p));
}

} // namespace sfroot::counting
