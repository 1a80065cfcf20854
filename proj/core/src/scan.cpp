#include "sfroot/scan.hpp"

#include "sfroot/counting.hpp"
#include "sfroot/error.hpp"
#include "sfroot/mpfr_real.hpp"
#include "sfroot/sieve.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>

namespace sfroot::scan {

using json = nlohmann::ordered_json;

std::string_view to_string(ScanKind k)
{
    switch (k) {
    case ScanKind::SquarefreeConjecture:
        return "squarefree-conjecture";
    case ScanKind::SquarefullDudek:
        return "squarefull-dudek";
    case ScanKind::TheoremDirect:
        return "theorem-direct";
    case ScanKind::LloydPrimeRoot:
        return "lloyd-prime-root";
    }
    return "unknown";
}

ScanKind scan_kind_from_string(std::string_view s)
{
    for (auto k : {ScanKind::SquarefreeConjecture, ScanKind::SquarefullDudek, ScanKind::TheoremDirect,
                   ScanKind::LloydPrimeRoot}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw DomainError("unknown scan kind '" + std::string(s) + "'");
}

u64 scan_ceiling()
{
    if (const char* env = std::getenv("SFROOT_SCAN_CEILING")) {
        try {
            return static_cast<u64>(std::stod(env));
        } catch (const std::exception&) {
            throw DomainError("SFROOT_SCAN_CEILING is not a number: " + std::string(env));
        }
    }
    return kDefaultScanCeiling;
}

bool below_power(u64 g, u64 p, double alpha)
{
    const double d = std::log(static_cast<double>(g)) - alpha * std::log(static_cast<double>(p));
    if (d < -1e-9) {
        return true;
    }
    if (d > 1e-9) {
        return false;
    }
    using bounds::Real;
    using bounds::Round;
    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
        const Real a = Real::from_double(alpha, prec);
        const Real lg_hi = bounds::log(Real::from_u64(g, Round::Up, prec), Round::Up);
        const Real rhs_lo = bounds::mul(a, bounds::log(Real::from_u64(p, Round::Down, prec), Round::Down), Round::Down);
        if (compare(lg_hi, rhs_lo) < 0) {
            return true;
        }
        const Real lg_lo = bounds::log(Real::from_u64(g, Round::Down, prec), Round::Down);
        const Real rhs_hi = bounds::mul(a, bounds::log(Real::from_u64(p, Round::Up, prec), Round::Up), Round::Up);
        if (compare(lg_lo, rhs_hi) >= 0) {
            return false;
        }
    }
    // Unresolved at 4096 bits: treat as not below.
    return false;
}

namespace {

struct ChunkResult {
    u64 primes = 0;
    std::vector<Violation> violations;
    std::vector<Violation> exempt;
    std::optional<u64> worst_p;
    std::optional<u64> worst_value;
    double worst_ratio = 0.0;
};

struct Shared {
    ScanKind kind;
    double alpha;
    std::vector<u64> base_primes;
    std::vector<std::uint8_t> squarefree;
    std::vector<u64> squarefull;
    std::vector<u64> small_primes;
};

bool sqrt_minus_two_fails(u64 root, u64 p)
{
    // root >= sqrt(p) - 2  <=>  (root + 2)^2 >= p
    const nt::u128 r = static_cast<nt::u128>(root) + 2;
    return r * r >= p;
}

void note_extreme(ChunkResult& out, u64 p, u64 value)
{
    const double ratio = static_cast<double>(value) / std::sqrt(static_cast<double>(p));
    if (!out.worst_p || ratio > out.worst_ratio) {
        out.worst_ratio = ratio;
        out.worst_p = p;
        out.worst_value = value;
    }
}

void check_prime(const Shared& sh, u64 p, ChunkResult& out)
{
    ++out.primes;
    const counting::SquarefreeLookup lookup{sh.squarefree};
    switch (sh.kind) {
    case ScanKind::SquarefreeConjecture: {
        const u64 g = (p == 2) ? 1 : counting::least_squarefree_primroot(
                                         nt::PrimeContext(p, nt::factor_with_primes(p - 1, sh.base_primes)), lookup);
        const bool fails = sqrt_minus_two_fails(g, p);
        if (p > kConjectureCutoff) {
            note_extreme(out, p, g);
            if (fails) {
                out.violations.push_back({p, g});
            }
        } else if (fails) {
            out.exempt.push_back({p, g});
        }
        break;
    }
    case ScanKind::TheoremDirect: {
        const u64 g = (p == 2) ? 1 : counting::least_squarefree_primroot(
                                         nt::PrimeContext(p, nt::factor_with_primes(p - 1, sh.base_primes)), lookup);
        note_extreme(out, p, g);
        if (!below_power(g, p, sh.alpha)) {
            out.violations.push_back({p, g});
        }
        break;
    }
    case ScanKind::SquarefullDudek: {
        if (p == 2) {
            // 1 is square-full and generates the trivial group.
            note_extreme(out, p, 1);
            break;
        }
        const nt::PrimeContext ctx(p, nt::factor_with_primes(p - 1, sh.base_primes));
        const auto r = counting::least_squarefull_primroot(ctx, sh.squarefull);
        if (r) {
            note_extreme(out, p, *r);
        } else {
            out.violations.push_back({p, std::nullopt});
        }
        break;
    }
    case ScanKind::LloydPrimeRoot: {
        if (p == 2) {
            out.exempt.push_back({p, std::nullopt});
            break;
        }
        const nt::PrimeContext ctx(p, nt::factor_with_primes(p - 1, sh.base_primes));
        const u64 q = counting::least_prime_primroot(ctx, sh.small_primes);
        const bool fails = sqrt_minus_two_fails(q, p);
        if (p > kLloydCutoff) {
            note_extreme(out, p, q);
            if (fails) {
                out.violations.push_back({p, q});
            }
        } else if (fails) {
            out.exempt.push_back({p, q});
        }
        break;
    }
    }
}

ChunkResult process_chunk(const Shared& sh, u64 lo, u64 hi)
{
    ChunkResult out;
    std::vector<std::uint8_t> is_p(hi - lo + 1, 1);
    for (u64 n = lo; n <= std::min<u64>(hi, 1); ++n) {
        is_p[n - lo] = 0;
    }
    for (u64 q : sh.base_primes) {
        if (q * q > hi) {
            break;
        }
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 m = start; m <= hi; m += q) {
            is_p[m - lo] = 0;
        }
    }
    for (u64 n = lo; n <= hi; ++n) {
        if (is_p[n - lo]) {
            check_prime(sh, n, out);
        }
    }
    return out;
}

json violations_to_json(const std::vector<Violation>& vs)
{
    json arr = json::array();
    for (const auto& v : vs) {
        arr.push_back(json::array({v.p, v.value ? json(*v.value) : json(nullptr)}));
    }
    return arr;
}

std::vector<Violation> violations_from_json(const json& arr)
{
    std::vector<Violation> out;
    for (const auto& e : arr) {
        Violation v{e.at(0).get<u64>(), std::nullopt};
        if (!e.at(1).is_null()) {
            v.value = e.at(1).get<u64>();
        }
        out.push_back(v);
    }
    return out;
}

json checkpoint_header(ScanKind kind, u64 from, u64 to, const ScanOptions& o)
{
    return json{{"checkpoint", 1}, {"kind", to_string(kind)}, {"from", from},
                {"to", to},        {"alpha", o.alpha},        {"chunk_size", o.chunk_size}};
}

json chunk_to_json(u64 index, const ChunkResult& r)
{
    json j{{"chunk", index}, {"primes", r.primes}, {"violations", violations_to_json(r.violations)},
           {"exempt", violations_to_json(r.exempt)}};
    j["worst_p"] = r.worst_p ? json(*r.worst_p) : json(nullptr);
    j["worst_value"] = r.worst_value ? json(*r.worst_value) : json(nullptr);
    j["worst_ratio"] = r.worst_ratio;
    return j;
}

ChunkResult chunk_from_json(const json& j)
{
    ChunkResult r;
    r.primes = j.at("primes").get<u64>();
    r.violations = violations_from_json(j.at("violations"));
    r.exempt = violations_from_json(j.at("exempt"));
    if (!j.at("worst_p").is_null()) {
        r.worst_p = j.at("worst_p").get<u64>();
        r.worst_value = j.at("worst_value").get<u64>();
    }
    r.worst_ratio = j.at("worst_ratio").get<double>();
    return r;
}

// Loads completed chunks from a checkpoint whose header matches; otherwise
// starts the file afresh.
void load_checkpoint(const std::string& path, const json& header, std::vector<std::optional<ChunkResult>>& results)
{
    std::ifstream in(path);
    if (in) {
        std::string line;
        if (std::getline(in, line)) {
            json h = json::parse(line, nullptr, false);
            if (!h.is_discarded() && h == header) {
                while (std::getline(in, line)) {
                    json j = json::parse(line, nullptr, false);
                    // A torn final line from an interrupted run is skipped.
                    if (j.is_discarded() || !j.contains("chunk")) {
                        continue;
                    }
                    const u64 idx = j.at("chunk").get<u64>();
                    if (idx < results.size()) {
                        results[idx] = chunk_from_json(j);
                    }
                }
                return;
            }
        }
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw ResourceError("cannot write checkpoint file " + path);
    }
    out << header.dump() << '\n';
}

} // namespace

ScanReport run_scan(ScanKind kind, u64 from, u64 to, const ScanOptions& options)
{
    if (from > to) {
        throw DomainError("run_scan: from must not exceed to");
    }
    const u64 ceiling = options.ceiling != 0 ? options.ceiling : scan_ceiling();
    if (to > ceiling) {
        throw ResourceError("run_scan: to = " + std::to_string(to) + " exceeds the scan ceiling " +
                            std::to_string(ceiling) +
                            " (set SFROOT_SCAN_CEILING to raise it; distributed scanning is out of scope)");
    }
    if (options.chunk_size == 0) {
        throw DomainError("run_scan: chunk_size must be positive");
    }
    const auto start_time = std::chrono::steady_clock::now();

    Shared sh{kind, options.alpha, {}, {}, {}, {}};
    u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(to))) + 1;
    sh.base_primes = nt::primes_up_to(std::max<u64>(root, 2));
    sh.squarefree = nt::squarefree_flags(0, std::min<u64>(to, u64{1} << 22) + 1);
    if (kind == ScanKind::SquarefullDudek) {
        sh.squarefull = nt::squarefull_ascending(std::max<u64>(to, 1));
    }
    if (kind == ScanKind::LloydPrimeRoot) {
        sh.small_primes = nt::primes_up_to(std::min<u64>(to, u64{1} << 20));
    }

    const u64 span = to - from + 1;
    const u64 nchunks = (span + options.chunk_size - 1) / options.chunk_size;
    std::vector<std::optional<ChunkResult>> results(nchunks);

    const json header = checkpoint_header(kind, from, to, options);
    const bool checkpointing = !options.checkpoint_path.empty();
    if (checkpointing) {
        load_checkpoint(options.checkpoint_path, header, results);
    }

    std::mutex ckpt_mutex;
    std::atomic<u64> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (u64 i = next++; i < nchunks; i = next++) {
                if (results[i]) {
                    continue;
                }
                const u64 lo = from + i * options.chunk_size;
                const u64 hi = std::min(to, lo + options.chunk_size - 1);
                ChunkResult r = process_chunk(sh, lo, hi);
                if (checkpointing) {
                    const std::lock_guard lock(ckpt_mutex);
                    std::ofstream out(options.checkpoint_path, std::ios::app);
                    out << chunk_to_json(i, r).dump() << '\n';
                }
                results[i] = std::move(r);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ScanReport report;
    report.kind = kind;
    report.from = from;
    report.to = to;
    report.alpha = kind == ScanKind::TheoremDirect ? options.alpha : 0.0;
    report.chunks = nchunks;
    for (const auto& r : results) {
        report.primes_scanned += r->primes;
        report.violations.insert(report.violations.end(), r->violations.begin(), r->violations.end());
        report.exempt_failures.insert(report.exempt_failures.end(), r->exempt.begin(), r->exempt.end());
        if (r->worst_p && (!report.worst_p || r->worst_ratio > report.worst_ratio)) {
            report.worst_ratio = r->worst_ratio;
            report.worst_p = r->worst_p;
            report.worst_value = r->worst_value;
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

} // namespace sfroot::scan
