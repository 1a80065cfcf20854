#pragma once

// Integer and modular arithmetic foundation: primality, factorization,
// prime contexts, and the e-free / primitive-root / square-free predicates.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace sfroot::nt {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 mod);

// Deterministic for every 64-bit input: Miller-Rabin with the first twelve
// prime bases {2, 3, ..., 37}, which has no strong pseudoprime below
// 3.3e24 (Sorenson & Webster 2015). Small n are decided by trial division.
bool is_prime(u64 n);

// A positive integer together with its complete prime factorization.
class FactoredInt {
public:
    FactoredInt() = default;

    // Validates the invariants (strictly increasing primes, exponents >= 1,
    // every prime passes is_prime, product fits and equals value).
    static FactoredInt from_factors(std::vector<PrimePower> factors);

    u64 value() const { return value_; }
    std::span<const PrimePower> factors() const { return factors_; }

    unsigned omega() const { return static_cast<unsigned>(factors_.size()); }
    u64 radical() const;
    u64 euler_phi() const;
    int mobius() const;
    bool is_squarefree() const;
    bool is_squarefull() const;
    bool divisible_by(u64 d) const { return d != 0 && value_ % d == 0; }

    std::vector<u64> primes() const;
    // All positive divisors, ascending.
    std::vector<u64> divisors() const;
    // Divisors d with mu(d) != 0, ascending.
    std::vector<u64> squarefree_divisors() const;

    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

private:
    u64 value_ = 1;
    std::vector<PrimePower> factors_;
};

struct FactorBudget {
    u64 trial_limit = 1'000'000;
    unsigned rho_attempts = 48;
    u64 rho_iterations = u64{1} << 22;
};

// Trial division up to budget.trial_limit, then Pollard-Brent rho on the
// remaining composite cofactors. Throws ResourceError when the rho budget
// is exhausted; never returns a partial factorization.
FactoredInt factor(u64 n, const FactorBudget& budget = {});

// Factorization by trial division with a caller-supplied ascending prime
// list covering sqrt(n). Used by range scans.
FactoredInt factor_with_primes(u64 n, std::span<const u64> primes);

// A prime modulus bundled with the factorization of p-1 and the least
// primitive root. For p = 2 the group is trivial and the stored generator
// is 1.
class PrimeContext {
public:
    explicit PrimeContext(u64 p);
    // Reuses an already computed factorization of p-1.
    PrimeContext(u64 p, FactoredInt pm1);

    u64 p() const { return p_; }
    const FactoredInt& pm1() const { return pm1_; }
    u64 radical() const { return radical_; }
    unsigned omega() const { return pm1_.omega(); }
    u64 generator() const { return generator_; }
    u64 phi_pm1() const { return pm1_.euler_phi(); }

    // (p-1)/q for every prime q | p-1, in the order of pm1().factors().
    std::span<const u64> cofactors() const { return cofactors_; }

private:
    void init();

    u64 p_ = 0;
    FactoredInt pm1_;
    u64 radical_ = 1;
    u64 generator_ = 1;
    std::vector<u64> cofactors_;
};

// n is e-free iff n^((p-1)/q) != 1 (mod p) for every prime q | e.
bool is_e_free(u64 n, u64 e, const PrimeContext& ctx);

bool is_primitive_root(u64 n, const PrimeContext& ctx);

bool is_squarefree(u64 n);
// 1 counts as square-full.
bool is_squarefull(u64 n);

} // namespace sfroot::nt
