#include "sfroot/sieve.hpp"

#include "sfroot/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sfroot::nt {

namespace {

u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) {
        --r;
    }
    while (static_cast<u128>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

u64 icbrt(u64 n)
{
    u64 r = static_cast<u64>(std::cbrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r * r > n) {
        --r;
    }
    while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

} // namespace

std::vector<u64> primes_up_to(u64 n)
{
    std::vector<u64> out;
    if (n < 2) {
        return out;
    }
    // Odd-only sieve: index i stands for 2i+1.
    const u64 half = (n - 1) / 2;
    std::vector<bool> composite(half + 1, false);
    out.push_back(2);
    for (u64 i = 1; i <= half; ++i) {
        if (composite[i]) {
            continue;
        }
        const u64 q = 2 * i + 1;
        out.push_back(q);
        for (u64 j = (q * q - 1) / 2; j <= half; j += q) {
            composite[j] = true;
        }
    }
    return out;
}

std::vector<u64> first_primes(std::size_t k)
{
    if (k == 0) {
        return {};
    }
    // p_k < k (ln k + ln ln k) for k >= 6.
    const double kd = static_cast<double>(k);
    u64 limit = k < 6 ? 15 : static_cast<u64>(kd * (std::log(kd) + std::log(std::log(kd)))) + 1;
    auto primes = primes_up_to(limit);
    primes.resize(k);
    return primes;
}

std::vector<std::int8_t> mobius_table(u64 n)
{
    std::vector<std::int8_t> mu(n + 1, 1);
    mu[0] = 0;
    std::vector<bool> composite(n + 1, false);
    for (u64 q = 2; q <= n; ++q) {
        if (composite[q]) {
            continue;
        }
        for (u64 m = q; m <= n; m += q) {
            if (m > q) {
                composite[m] = true;
            }
            mu[m] = static_cast<std::int8_t>(-mu[m]);
        }
        const u128 sq = static_cast<u128>(q) * q;
        if (sq <= n) {
            for (u64 m = static_cast<u64>(sq); m <= n; m += static_cast<u64>(sq)) {
                mu[m] = 0;
            }
        }
    }
    return mu;
}

u64 squarefree_count(u64 x)
{
    if (x == 0) {
        return 0;
    }
    const u64 r = isqrt(x);
    const auto mu = mobius_table(r);
    std::int64_t total = 0;
    for (u64 d = 1; d <= r; ++d) {
        if (mu[d] != 0) {
            total += mu[d] * static_cast<std::int64_t>(x / (d * d));
        }
    }
    return static_cast<u64>(total);
}

u64 squarefree_count(double x)
{
    if (!std::isfinite(x) || x < 0) {
        throw DomainError("squarefree_count: x must be finite and nonnegative");
    }
    return squarefree_count(static_cast<u64>(std::floor(x)));
}

std::vector<std::uint8_t> squarefree_flags(u64 lo, u64 hi)
{
    if (hi <= lo) {
        return {};
    }
    std::vector<std::uint8_t> flags(hi - lo, 1);
    if (lo == 0) {
        flags[0] = 0;
    }
    const u64 r = isqrt(hi - 1);
    for (u64 q : primes_up_to(r)) {
        const u64 sq = q * q;
        u64 start = (lo + sq - 1) / sq * sq;
        if (start == 0) {
            start = sq;
        }
        for (u64 m = start; m < hi; m += sq) {
            flags[m - lo] = 0;
        }
    }
    return flags;
}

std::vector<u64> squarefull_ascending(u64 x)
{
    if (x == 0) {
        throw DomainError("squarefull_ascending: x must be >= 1");
    }
    std::vector<u64> out;
    const u64 bmax = icbrt(x);
    const auto mu = mobius_table(bmax);
    for (u64 b = 1; b <= bmax; ++b) {
        if (mu[b] == 0) {
            continue;
        }
        const u64 b3 = b * b * b;
        const u64 amax = isqrt(x / b3);
        for (u64 a = 1; a <= amax; ++a) {
            out.push_back(a * a * b3);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt primorial(std::size_t k)
{
    if (k == 0) {
        throw DomainError("primorial: k must be >= 1");
    }
    BigInt acc = 1;
    for (u64 q : first_primes(k)) {
        acc *= q;
    }
    return acc;
}

SmoothMultiples::SmoothMultiples(u64 base, std::vector<u64> prime_set, u64 lo, u64 hi, bool smooth_only)
    : base_(base), primes_(std::move(prime_set)), smooth_only_(smooth_only)
{
    if (base == 0) {
        throw DomainError("SmoothMultiples: base must be >= 1");
    }
    std::sort(primes_.begin(), primes_.end());
    if (lo > hi) {
        return;
    }
    // m ranges over [ceil(lo/base), floor(hi/base)] with m >= 1.
    const u64 first = std::max<u64>(1, lo / base + (lo % base != 0 ? 1 : 0));
    const u64 last = hi / base;
    if (first <= last) {
        m_begin_ = first;
        m_end_ = last + 1;
    }
}

bool SmoothMultiples::accepts(u64 m) const
{
    if (!smooth_only_) {
        return true;
    }
    for (u64 q : primes_) {
        while (m % q == 0) {
            m /= q;
        }
    }
    return m == 1;
}

SmoothMultiples::iterator SmoothMultiples::begin() const
{
    iterator it(this, m_begin_);
    it.settle();
    return it;
}

SmoothMultiples::iterator& SmoothMultiples::iterator::operator++()
{
    ++m_;
    settle();
    return *this;
}

void SmoothMultiples::iterator::settle()
{
    while (m_ < range_->m_end_ && !range_->accepts(m_)) {
        ++m_;
    }
}

} // namespace sfroot::nt
