#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library: no shared helpers, no Miller-Rabin, no sieves.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

inline bool is_prime(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n)
{
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) {
            out.emplace_back(d, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

// Multiplicative order of n mod p by repeated multiplication.
inline u64 order(u64 n, u64 p)
{
    n %= p;
    u64 v = n;
    u64 k = 1;
    while (v != 1) {
        v = v * n % p;
        ++k;
    }
    return k;
}

inline bool is_primroot(u64 n, u64 p) { return p == 2 ? n % 2 == 1 : order(n, p) == p - 1; }

inline bool is_squarefree(u64 n)
{
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) {
            return false;
        }
    }
    return true;
}

inline bool is_squarefull(u64 n)
{
    for (u64 d = 2; d <= n; ++d) {
        if (n % d == 0) {
            if (n % (d * d) != 0) {
                return false;
            }
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    return true;
}

// n is a d-th power residue mod p for some divisor d > 1 of e?
inline bool is_e_free(u64 n, u64 e, u64 p)
{
    for (u64 d = 2; d <= e; ++d) {
        if (e % d != 0) {
            continue;
        }
        for (u64 y = 1; y < p; ++y) {
            u64 v = 1;
            for (u64 i = 0; i < d; ++i) {
                v = v * y % p;
            }
            if (v == n % p) {
                return false;
            }
        }
    }
    return true;
}

inline u64 least_squarefree_primroot(u64 p)
{
    for (u64 n = 1; n < p; ++n) {
        if (is_squarefree(n) && is_primroot(n, p)) {
            return n;
        }
    }
    return p == 2 ? 1 : 0;
}

// Square-free n <= x with n e-free mod p (e-free tested through orders:
// n is e-free iff gcd(e, (p-1)/ord(n)) == 1).
inline u64 count_efree_squarefree(u64 p, u64 e, u64 x)
{
    u64 c = 0;
    for (u64 n = 1; n <= x; ++n) {
        if (n % p == 0 || !is_squarefree(n)) {
            continue;
        }
        u64 a = e;
        u64 b = (p - 1) / order(n, p);
        while (b) {
            const u64 t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) {
            ++c;
        }
    }
    return c;
}

inline u64 count_squarefree_primroots(u64 p, u64 x) { return count_efree_squarefree(p, p - 1, x); }

inline u64 squarefree_count(u64 x)
{
    u64 c = 0;
    for (u64 n = 1; n <= x; ++n) {
        c += is_squarefree(n);
    }
    return c;
}

// Discrete logs to the least generator; n = g^k is e-free iff gcd(k, e) = 1.
struct LogTable {
    u64 p = 0;
    u64 g = 0;
    std::vector<u64> ind;

    explicit LogTable(u64 prime) : p(prime), ind(prime, 0)
    {
        g = 1;
        while (order(g, p) != p - 1) {
            ++g;
        }
        u64 v = 1;
        for (u64 k = 0; k + 1 < p; ++k) {
            ind[v] = k;
            v = v * g % p;
        }
    }

    bool efree(u64 n, u64 e) const
    {
        u64 a = ind[n % p];
        u64 b = e;
        while (b) {
            const u64 t = a % b;
            a = b;
            b = t;
        }
        return a == 1;
    }
};

inline u64 count_efree_squarefree(const LogTable& t, u64 e, u64 x)
{
    u64 c = 0;
    for (u64 n = 1; n <= x; ++n) {
        c += n % t.p != 0 && is_squarefree(n) && t.efree(n, e);
    }
    return c;
}

inline u64 powmod(u64 b, u64 e, u64 m)
{
    u128 r = 1;
    u128 x = b % m;
    while (e) {
        if (e & 1) {
            r = r * x % m;
        }
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<u64>(r);
}

// For large p: primitive root test from the trial-division factorization of p-1.
inline bool is_primroot_big(u64 n, u64 p)
{
    for (const auto& [q, e] : factor(p - 1)) {
        if (powmod(n, (p - 1) / q, p) == 1) {
            return false;
        }
    }
    return true;
}

inline u64 least_squarefree_primroot_big(u64 p)
{
    const auto f = factor(p - 1);
    for (u64 n = 1;; ++n) {
        if (!is_squarefree(n)) {
            continue;
        }
        bool ok = true;
        for (const auto& [q, e] : f) {
            ok = ok && powmod(n, (p - 1) / q, p) != 1;
        }
        if (ok) {
            return n;
        }
    }
}

// 4x-precision reference for G and G_s, round-to-nearest throughout.
using Ref = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<512, boost::multiprecision::digit_base_2>>;

inline Ref ref_G(const Ref& p, const Ref& alpha, unsigned omega_k, const Ref& Delta)
{
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    const Ref pi = boost::math::constants::pi<Ref>();
    const Ref main = pow(p, alpha / 2 - Ref(1) / 4);
    const Ref c = pi * pi / 6;
    const Ref two_pow = pow(Ref(2), Ref(omega_k + 1));
    return main - c * (Ref("0.104") / pow(p, Ref(1) / 4) + two_pow * Delta * sqrt(log(p)));
}

inline Ref ref_Delta(unsigned s, const Ref& delta) { return Ref(s - 1) / delta + 2; }

} // namespace oracle
