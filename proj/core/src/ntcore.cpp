#include "sfroot/ntcore.hpp"

#include "sfroot/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace sfroot::nt {

u64 powmod(u64 base, u64 exp, u64 mod)
{
    if (mod == 1) {
        return 0;
    }
    u64 result = 1;
    base %= mod;
    while (exp != 0) {
        if (exp & 1U) {
            result = mulmod(result, base, mod);
        }
        base = mulmod(base, base, mod);
        exp >>= 1U;
    }
    return result;
}

namespace {

constexpr std::array<u64, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 a, u64 d, unsigned r)
{
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

bool checked_mul(u64 a, u64 b, u64& out)
{
    return !__builtin_mul_overflow(a, b, &out);
}

} // namespace

bool is_prime(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 q : kWitnesses) {
        if (n == q) {
            return true;
        }
        if (n % q == 0) {
            return false;
        }
    }
    if (n < 41 * 41) {
        return true;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                       [&](u64 a) { return strong_probable_prime(n, a, d, r); });
}

FactoredInt FactoredInt::from_factors(std::vector<PrimePower> factors)
{
    FactoredInt out;
    u64 value = 1;
    u64 prev = 0;
    for (const auto& f : factors) {
        if (f.exponent == 0) {
            throw DomainError("FactoredInt: zero exponent for prime " + std::to_string(f.prime));
        }
        if (f.prime <= prev) {
            throw DomainError("FactoredInt: primes must be strictly increasing");
        }
        if (!is_prime(f.prime)) {
            throw DomainError("FactoredInt: " + std::to_string(f.prime) + " is not prime");
        }
        for (unsigned i = 0; i < f.exponent; ++i) {
            if (!checked_mul(value, f.prime, value)) {
                throw DomainError("FactoredInt: value exceeds 64 bits");
            }
        }
        prev = f.prime;
    }
    out.value_ = value;
    out.factors_ = std::move(factors);
    return out;
}

u64 FactoredInt::radical() const
{
    u64 r = 1;
    for (const auto& f : factors_) {
        r *= f.prime;
    }
    return r;
}

u64 FactoredInt::euler_phi() const
{
    u64 phi = 1;
    for (const auto& f : factors_) {
        phi *= f.prime - 1;
        for (unsigned i = 1; i < f.exponent; ++i) {
            phi *= f.prime;
        }
    }
    return phi;
}

int FactoredInt::mobius() const
{
    if (!is_squarefree()) {
        return 0;
    }
    return (factors_.size() % 2 == 0) ? 1 : -1;
}

bool FactoredInt::is_squarefree() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

bool FactoredInt::is_squarefull() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent >= 2; });
}

std::vector<u64> FactoredInt::primes() const
{
    std::vector<u64> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) {
        out.push_back(f.prime);
    }
    return out;
}

std::vector<u64> FactoredInt::divisors() const
{
    std::vector<u64> divs{1};
    for (const auto& f : factors_) {
        const std::size_t n = divs.size();
        u64 pk = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < n; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<u64> FactoredInt::squarefree_divisors() const
{
    std::vector<u64> divs{1};
    for (const auto& f : factors_) {
        const std::size_t n = divs.size();
        for (std::size_t i = 0; i < n; ++i) {
            divs.push_back(divs[i] * f.prime);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

PrimeContext::PrimeContext(u64 p) : p_(p)
{
    if (!is_prime(p)) {
        throw DomainError("PrimeContext: " + std::to_string(p) + " is not prime");
    }
    pm1_ = factor(p - 1);
    init();
}

PrimeContext::PrimeContext(u64 p, FactoredInt pm1) : p_(p), pm1_(std::move(pm1))
{
    if (!is_prime(p)) {
        throw DomainError("PrimeContext: " + std::to_string(p) + " is not prime");
    }
    if (pm1_.value() != p - 1) {
        throw DomainError("PrimeContext: supplied factorization is not of p-1");
    }
    init();
}

void PrimeContext::init()
{
    radical_ = pm1_.radical();
    cofactors_.clear();
    for (const auto& f : pm1_.factors()) {
        cofactors_.push_back((p_ - 1) / f.prime);
    }
    if (p_ == 2) {
        generator_ = 1;
        return;
    }
    for (u64 g = 2; g < p_; ++g) {
        if (is_primitive_root(g, *this)) {
            generator_ = g;
            return;
        }
    }
    throw InvariantError("PrimeContext: no primitive root found for " + std::to_string(p_));
}

bool is_e_free(u64 n, u64 e, const PrimeContext& ctx)
{
    const u64 p = ctx.p();
    if (e == 0 || (p - 1) % e != 0) {
        throw DomainError("is_e_free: e = " + std::to_string(e) + " does not divide p-1");
    }
    const u64 r = n % p;
    if (r == 0) {
        throw DomainError("is_e_free: p divides n");
    }
    const auto factors = ctx.pm1().factors();
    const auto cof = ctx.cofactors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (e % factors[i].prime == 0 && powmod(r, cof[i], p) == 1) {
            return false;
        }
    }
    return true;
}

bool is_primitive_root(u64 n, const PrimeContext& ctx)
{
    const u64 p = ctx.p();
    if (n % p == 0) {
        throw DomainError("is_primitive_root: n is divisible by p");
    }
    if (p == 2) {
        return true;
    }
    const u64 r = n % p;
    for (u64 c : ctx.cofactors()) {
        if (powmod(r, c, p) == 1) {
            return false;
        }
    }
    return true;
}

bool is_squarefree(u64 n)
{
    if (n == 0) {
        throw DomainError("is_squarefree: n must be >= 1");
    }
    return factor(n).is_squarefree();
}

bool is_squarefull(u64 n)
{
    if (n == 0) {
        throw DomainError("is_squarefull: n must be >= 1");
    }
    return factor(n).is_squarefull();
}

} // namespace sfroot::nt
