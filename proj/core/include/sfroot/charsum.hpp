#pragma once

// Dirichlet characters modulo a prime, evaluated lazily from a discrete-log
// table, and the character-sum indicator functions for primitive roots and
// e-free residues.
//
// chi_t(n) = exp(2 pi i t ind_g(n) / (p-1)) for a stored generator g. Values
// come from a per-modulus table of (p-1)-th roots of unity, so the rounding
// error of a sum of N terms grows like N * machine epsilon.

#include "sfroot/ntcore.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace sfroot::charsum {

using nt::u64;
using Complex = std::complex<double>;

inline constexpr u64 kDefaultTableBound = 10'000'000;
inline constexpr double kIntegralityTolerance = 1e-6;

// Discrete logarithms to the generator of a PrimeContext, plus the roots of
// unity used to evaluate characters. Immutable after construction.
class IndexTable {
public:
    // Throws ResourceError if p exceeds table_bound.
    explicit IndexTable(const nt::PrimeContext& ctx, u64 table_bound = kDefaultTableBound);

    const nt::PrimeContext& context() const { return ctx_; }
    u64 p() const { return ctx_.p(); }
    u64 group_order() const { return ctx_.p() - 1; }

    // ind(n) for n coprime to p (n reduced mod p).
    u64 index(u64 n) const { return ind_[n % ctx_.p()]; }
    // exp(2 pi i k / (p-1)).
    const Complex& root(u64 k) const { return roots_[k]; }

private:
    nt::PrimeContext ctx_;
    std::vector<std::uint32_t> ind_;
    std::vector<Complex> roots_;
};

using IndexTablePtr = std::shared_ptr<const IndexTable>;

IndexTablePtr make_index_table(const nt::PrimeContext& ctx, u64 table_bound = kDefaultTableBound);

class Character {
public:
    Character(IndexTablePtr table, u64 t);

    u64 t() const { return t_; }
    const IndexTable& table() const { return *table_; }
    u64 order() const;
    bool is_principal() const { return t_ == 0; }

    // 0 when p | n.
    Complex operator()(u64 n) const
    {
        const u64 p = table_->p();
        if (n % p == 0) {
            return {0.0, 0.0};
        }
        const u64 m = table_->group_order();
        return table_->root(static_cast<u64>(static_cast<nt::u128>(t_) * table_->index(n) % m));
    }

private:
    IndexTablePtr table_;
    u64 t_;
};

// Gamma_d: the phi(d) characters of order exactly d. Throws DomainError if d does not divide p-1.
std::vector<Character> characters_of_order(const IndexTablePtr& table, u64 d);

// Sum over d | e of mu(d)/phi(d) * sum_{chi in Gamma_d} chi(n), scaled by phi(e)/e.
// Throws ToleranceError if the result is not within 1e-6 of 0 or 1.
double indicator_efree(const IndexTablePtr& table, u64 e, u64 n);

// indicator_efree with e = p-1.
double indicator_primroot(const IndexTablePtr& table, u64 n);

// sum_{M < n <= N} chi(n), compensated summation.
Complex char_sum_interval(const Character& chi, u64 M, u64 N);

struct SquarefreeCharSum {
    Complex moebius_route;
    Complex direct_route;
};

// Both routes to sum_{n <= x, n square-free} chi(n); throws ToleranceError if
// they disagree by more than 1e-6.
SquarefreeCharSum char_sum_squarefree_routes(const Character& chi, u64 x);
Complex char_sum_squarefree(const Character& chi, u64 x);

// Neumaier-compensated complex accumulator; deterministic for a fixed input order.
class CompensatedSum {
public:
    void add(Complex v)
    {
        add_part(re_, re_c_, v.real());
        add_part(im_, im_c_, v.imag());
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& s, double& c, double v)
    {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v)) {
            c += (s - t) + v;
        } else {
            c += (v - t) + s;
        }
        s = t;
    }

    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

} // namespace sfroot::charsum
