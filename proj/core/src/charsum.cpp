#include "sfroot/charsum.hpp"

#include "sfroot/error.hpp"
#include "sfroot/sieve.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace sfroot::charsum {

IndexTable::IndexTable(const nt::PrimeContext& ctx, u64 table_bound) : ctx_(ctx)
{
    const u64 p = ctx.p();
    if (p > table_bound) {
        throw ResourceError("IndexTable: p = " + std::to_string(p) + " exceeds table bound " +
                            std::to_string(table_bound));
    }
    const u64 m = p - 1;
    ind_.assign(p, 0);
    u64 power = 1;
    for (u64 k = 0; k < m; ++k) {
        ind_[power] = static_cast<std::uint32_t>(k);
        power = nt::mulmod(power, ctx.generator(), p);
    }
    roots_.resize(m);
    for (u64 k = 0; k < m; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        roots_[k] = {std::cos(angle), std::sin(angle)};
    }
}

IndexTablePtr make_index_table(const nt::PrimeContext& ctx, u64 table_bound)
{
    return std::make_shared<const IndexTable>(ctx, table_bound);
}

Character::Character(IndexTablePtr table, u64 t) : table_(std::move(table)), t_(t)
{
    if (!table_) {
        throw DomainError("Character: null index table");
    }
    if (t_ >= table_->group_order() && !(t_ == 0 && table_->group_order() == 1)) {
        throw DomainError("Character: t out of range");
    }
}

u64 Character::order() const
{
    const u64 m = table_->group_order();
    return m / std::gcd(t_, m);
}

std::vector<Character> characters_of_order(const IndexTablePtr& table, u64 d)
{
    const u64 m = table->group_order();
    if (d == 0 || m % d != 0) {
        throw DomainError("characters_of_order: d = " + std::to_string(d) + " does not divide p-1");
    }
    std::vector<Character> out;
    const u64 step = m / d;
    for (u64 j = 0; j < d; ++j) {
        if (std::gcd(j, d) == 1) {
            out.emplace_back(table, step * j);
        }
    }
    return out;
}

namespace {

double checked_indicator(Complex value, const char* what)
{
    const double re = value.real();
    const double dist = std::min(std::abs(re), std::abs(re - 1.0));
    if (std::abs(value.imag()) > kIntegralityTolerance || dist > kIntegralityTolerance) {
        throw ToleranceError(std::string(what) + ": value (" + std::to_string(re) + ", " +
                             std::to_string(value.imag()) + ") is not within tolerance of 0 or 1");
    }
    return re;
}

} // namespace

double indicator_efree(const IndexTablePtr& table, u64 e, u64 n)
{
    const auto& ctx = table->context();
    const u64 p = ctx.p();
    const u64 m = p - 1;
    if (e == 0 || m % e != 0) {
        throw DomainError("indicator_efree: e = " + std::to_string(e) + " does not divide p-1");
    }
    if (n % p == 0) {
        throw DomainError("indicator_efree: p divides n");
    }
    std::vector<u64> qs;
    for (const auto& f : ctx.pm1().factors()) {
        if (e % f.prime == 0) {
            qs.push_back(f.prime);
        }
    }
    const u64 ind = table->index(n);

    // Outer sum over square-free d | e, encoded as subsets of qs.
    CompensatedSum outer;
    const std::size_t subsets = std::size_t{1} << qs.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        u64 d = 1;
        u64 phi_d = 1;
        int mu = 1;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                d *= qs[i];
                phi_d *= qs[i] - 1;
                mu = -mu;
            }
        }
        CompensatedSum inner;
        const u64 step = m / d;
        for (u64 j = 0; j < d; ++j) {
            if (std::gcd(j, d) != 1) {
                continue;
            }
            const u64 t = step * j;
            inner.add(table->root(static_cast<u64>(static_cast<nt::u128>(t) * ind % m)));
        }
        outer.add(inner.value() * (static_cast<double>(mu) / static_cast<double>(phi_d)));
    }
    double density = 1.0;
    for (u64 q : qs) {
        density *= 1.0 - 1.0 / static_cast<double>(q);
    }
    return checked_indicator(outer.value() * density, "indicator_efree");
}

double indicator_primroot(const IndexTablePtr& table, u64 n)
{
    return indicator_efree(table, table->group_order(), n);
}

Complex char_sum_interval(const Character& chi, u64 M, u64 N)
{
    if (M > N) {
        throw DomainError("char_sum_interval: M must not exceed N");
    }
    CompensatedSum acc;
    for (u64 n = M + 1; n <= N; ++n) {
        acc.add(chi(n));
    }
    return acc.value();
}

SquarefreeCharSum char_sum_squarefree_routes(const Character& chi, u64 x)
{
    if (x == 0) {
        throw DomainError("char_sum_squarefree: x must be >= 1");
    }
    SquarefreeCharSum out;

    // Moebius unfolding: sum_{d <= sqrt x} mu(d) sum_{n <= x, d^2 | n} chi(n).
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) {
        --r;
    }
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    const auto mu = nt::mobius_table(r);
    CompensatedSum moebius;
    for (u64 d = 1; d <= r; ++d) {
        if (mu[d] == 0) {
            continue;
        }
        const u64 step = d * d;
        CompensatedSum inner;
        for (u64 n = step; n <= x; n += step) {
            inner.add(chi(n));
        }
        moebius.add(inner.value() * static_cast<double>(mu[d]));
    }
    out.moebius_route = moebius.value();

    const auto flags = nt::squarefree_flags(1, x + 1);
    CompensatedSum direct;
    for (u64 n = 1; n <= x; ++n) {
        if (flags[n - 1]) {
            direct.add(chi(n));
        }
    }
    out.direct_route = direct.value();

    if (std::abs(out.moebius_route - out.direct_route) > kIntegralityTolerance) {
        throw ToleranceError("char_sum_squarefree: Moebius and direct routes disagree");
    }
    return out;
}

Complex char_sum_squarefree(const Character& chi, u64 x)
{
    return char_sum_squarefree_routes(chi, x).moebius_route;
}

} // namespace sfroot::charsum
