#include "sfroot/error.hpp"
#include "sfroot/ntcore.hpp"
#include "sfroot/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace sfroot::nt {

namespace {

const std::vector<u64>& trial_primes()
{
    static const std::vector<u64> primes = primes_up_to(1'000'000);
    return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
u64 brent_rho(u64 n, u64 seed, u64 max_iterations)
{
    const u64 c = seed % (n - 1) + 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };

    u64 y = (seed * 0x9E3779B97F4A7C15ULL) % n;
    u64 x = y;
    u64 ys = y;
    u64 q = 1;
    u64 g = 1;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    u64 iterations = 0;

    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) {
            y = f(y);
        }
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            const u64 lim = std::min(kBatch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += lim;
            iterations += lim;
        }
        r <<= 1U;
        if (iterations > max_iterations) {
            return 0;
        }
    }
    if (g == n) {
        // Batched gcd overshot; replay one step at a time.
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return (g == n) ? 0 : g;
}

void split(u64 n, const FactorBudget& budget, std::map<u64, unsigned>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // Perfect squares defeat rho with some seeds; peel them first.
    const u64 s = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    for (u64 cand = (s > 2 ? s - 2 : 0); cand <= s + 2; ++cand) {
        if (cand > 1 && cand * cand == n) {
            split(cand, budget, out);
            split(cand, budget, out);
            return;
        }
    }
    for (unsigned attempt = 0; attempt < budget.rho_attempts; ++attempt) {
        const u64 d = brent_rho(n, attempt + 1, budget.rho_iterations);
        if (d != 0) {
            split(d, budget, out);
            split(n / d, budget, out);
            return;
        }
    }
    throw ResourceError("factor: rho budget exhausted on cofactor " + std::to_string(n));
}

FactoredInt assemble(const std::map<u64, unsigned>& m)
{
    std::vector<PrimePower> fs;
    fs.reserve(m.size());
    for (const auto& [prime, exp] : m) {
        fs.push_back({prime, exp});
    }
    return FactoredInt::from_factors(std::move(fs));
}

} // namespace

FactoredInt factor(u64 n, const FactorBudget& budget)
{
    if (n == 0) {
        throw DomainError("factor: n must be >= 1");
    }
    std::map<u64, unsigned> found;
    u64 rest = n;
    const auto& primes = trial_primes();
    u64 last_tried = 1;
    for (u64 q : primes) {
        if (q > budget.trial_limit || q * q > rest) {
            break;
        }
        last_tried = q;
        if (rest % q == 0) {
            unsigned e = 0;
            do {
                rest /= q;
                ++e;
            } while (rest % q == 0);
            found[q] = e;
        }
    }
    if (rest > 1) {
        // Every factor of rest exceeds last_tried, so rest is prime if it is
        // below the square of the next candidate.
        const u128 bound = static_cast<u128>(last_tried + 1) * (last_tried + 1);
        if (static_cast<u128>(rest) < bound || is_prime(rest)) {
            ++found[rest];
        } else {
            split(rest, budget, found);
        }
    }
    return assemble(found);
}

FactoredInt factor_with_primes(u64 n, std::span<const u64> primes)
{
    if (n == 0) {
        throw DomainError("factor_with_primes: n must be >= 1");
    }
    std::vector<PrimePower> fs;
    u64 rest = n;
    for (u64 q : primes) {
        if (q * q > rest) {
            break;
        }
        if (rest % q == 0) {
            unsigned e = 0;
            do {
                rest /= q;
                ++e;
            } while (rest % q == 0);
            fs.push_back({q, e});
        }
    }
    if (rest > 1) {
        const u64 top = primes.empty() ? 1 : primes.back();
        if (static_cast<u128>(top) * top < rest) {
            return factor(n);
        }
        fs.push_back({rest, 1});
    }
    return FactoredInt::from_factors(std::move(fs));
}

} // namespace sfroot::nt
