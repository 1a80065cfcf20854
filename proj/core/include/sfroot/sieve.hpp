#pragma once

// Sieves and enumerations: primes, Moebius values, square-free counting,
// square-full enumeration, smooth multiples in a window, primorials.

#include "sfroot/ntcore.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

namespace sfroot::nt {

using BigInt = boost::multiprecision::mpz_int;

std::vector<u64> primes_up_to(u64 n);
std::vector<u64> first_primes(std::size_t k);

// mu(0..n); mu[0] is 0.
std::vector<std::int8_t> mobius_table(u64 n);

// Exact number of square-free n <= x, via sum_{d <= sqrt x} mu(d) floor(x/d^2).
u64 squarefree_count(u64 x);
// Floors x; x must be finite and >= 0.
u64 squarefree_count(double x);

// flags[i] == 1 iff lo + i is square-free, for lo + i in [lo, hi). 0 is not square-free.
std::vector<std::uint8_t> squarefree_flags(u64 lo, u64 hi);

// All square-full n <= x in increasing order. Each n is produced once from
// its unique form a^2 b^3 with b square-free.
std::vector<u64> squarefull_ascending(u64 x);

// Product of the first k primes.
BigInt primorial(std::size_t k);

// Iterates n = m * base with lo <= n <= hi. When smooth_only is set, m must
// have all prime factors in prime_set (m = 1 qualifies).
class SmoothMultiples {
public:
    SmoothMultiples(u64 base, std::vector<u64> prime_set, u64 lo, u64 hi, bool smooth_only);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = u64;
        using difference_type = std::ptrdiff_t;
        using pointer = const u64*;
        using reference = u64;

        iterator() = default;
        u64 operator*() const { return m_ * range_->base_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.m_ == b.m_; }

    private:
        friend class SmoothMultiples;
        iterator(const SmoothMultiples* range, u64 m) : range_(range), m_(m) {}
        void settle();

        const SmoothMultiples* range_ = nullptr;
        u64 m_ = 0;
    };

    iterator begin() const;
    iterator end() const { return iterator(this, m_end_); }

    // Number of multiples in the window, ignoring the smoothness filter.
    u64 unfiltered_size() const { return m_end_ - m_begin_; }
    bool accepts(u64 m) const;

private:
    u64 base_;
    std::vector<u64> primes_;
    bool smooth_only_;
    u64 m_begin_ = 0;
    u64 m_end_ = 0;
};

} // namespace sfroot::nt
