#include "sfroot/caseanalysis.hpp"
#include "sfroot/counting.hpp"
#include "sfroot/error.hpp"
#include "sfroot/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace sfroot::cases {

namespace {

constexpr u64 kBase = 223092870; // 2*3*5*...*23
constexpr unsigned kOmega = 13;
constexpr unsigned kSieving = 10;

struct Partial {
    u64 primes = 0;
    std::vector<Omega13Eliminated> eliminated;
    std::vector<Omega13Survivor> survivors;
};

// p-1 = m * base with omega(p-1) = 13 and p prime.
bool qualifies(u64 p, const std::vector<u64>& small)
{
    if (p < 2 || (p - 1) % kBase != 0 || !nt::is_prime(p)) {
        return false;
    }
    return nt::factor_with_primes(p - 1, small).omega() == kOmega;
}

void process(double alpha, u64 m_lo, u64 m_hi, const std::vector<u64>& small, Partial& out)
{
    for (u64 m = m_lo; m <= m_hi; ++m) {
        const u64 p = m * kBase + 1;
        if (!nt::is_prime(p)) {
            continue;
        }
        auto pm1 = nt::factor_with_primes(p - 1, small);
        if (pm1.omega() != kOmega) {
            continue;
        }
        ++out.primes;
        const nt::PrimeContext ctx(p, std::move(pm1));
        const auto cfg = bounds::make_sieve_config(ctx, kSieving);
        const auto ev = bounds::eval_Gs(bounds::Enclosure::exact(p), alpha, cfg.omega_k, cfg.delta, kSieving);
        if (ev.verdict) {
            out.eliminated.push_back({p, cfg.delta, ev.value});
        } else {
            const u64 g = counting::least_squarefree_primroot(ctx);
            out.survivors.push_back({p, cfg.delta, ev.value, g});
        }
    }
}

} // namespace

Omega13Record omega13_pipeline(double alpha, unsigned jobs)
{
    return omega13_pipeline(alpha, kLloydUpper, omega13_window_hi(alpha), jobs);
}

Omega13Record omega13_pipeline(double alpha, u64 window_lo, u64 window_hi, unsigned jobs)
{
    if (window_lo < 2 || window_lo > window_hi) {
        throw DomainError("omega13_pipeline: require 2 <= window_lo <= window_hi");
    }
    Omega13Record rec;
    rec.base = kBase;
    rec.window_lo = window_lo;
    rec.window_hi = window_hi;

    // p in [lo, hi]  <=>  m * base in [lo - 1, hi - 1].
    const u64 m_lo = (window_lo - 1 + kBase - 1) / kBase;
    const u64 m_hi = (window_hi - 1) / kBase;
    rec.candidate_count = m_hi >= m_lo ? m_hi - m_lo + 1 : 0;

    // Trial primes up to sqrt(m_hi) finish the factorization of m.
    const auto small = nt::primes_up_to(static_cast<u64>(std::sqrt(static_cast<double>(m_hi))) + 2);

    const u64 chunk = 1 << 16;
    const u64 nchunks = rec.candidate_count == 0 ? 0 : (rec.candidate_count + chunk - 1) / chunk;
    std::vector<Partial> parts(nchunks);
    std::atomic<u64> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (u64 i = next++; i < nchunks; i = next++) {
                const u64 a = m_lo + i * chunk;
                process(alpha, a, std::min(m_hi, a + chunk - 1), small, parts[i]);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1U, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < n; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (auto& part : parts) {
        rec.prime_count += part.primes;
        std::move(part.eliminated.begin(), part.eliminated.end(), std::back_inserter(rec.eliminated));
        std::move(part.survivors.begin(), part.survivors.end(), std::back_inserter(rec.survivors));
    }
    rec.survivor_count = rec.survivors.size();
    if (!rec.survivors.empty()) {
        rec.smallest_survivor = rec.survivors.front().p;
    }
    rec.endpoints_clear = !qualifies(window_lo, small) && !qualifies(window_hi, small);

    std::string bad;
    for (const auto& s : rec.survivors) {
        if (s.least_squarefree_root >= kSurvivorRootLimit) {
            bad += (bad.empty() ? "" : ", ") + std::to_string(s.p);
        }
    }
    if (!bad.empty()) {
        throw CertificationError("omega13_pipeline: survivors without a square-free primitive root below " +
                                 std::to_string(kSurvivorRootLimit) + ": " + bad);
    }
    return rec;
}

} // namespace sfroot::cases
