#include "sfroot/caseanalysis.hpp"
#include "sfroot/counting.hpp"
#include "sfroot/error.hpp"
#include "sfroot/scan.hpp"
#include "sfroot/sieve.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace sfroot::cases {

using bounds::Enclosure;
using bounds::Real;
using bounds::Round;

namespace {

// Windows wider than this are not enumerated.
constexpr u64 kEnumerationCap = 10'000'000'000'000'000ULL;

bool is_closed(CaseStatus s) { return s == CaseStatus::ClosedByBound || s == CaseStatus::ClosedByLloyd; }

// True when some s (0 = plain G) certifies the bound at the floor and beyond.
std::optional<unsigned> s_closing_at(double alpha, unsigned omega, const BigInt& floor)
{
    const Enclosure enc = Enclosure::exact(floor);
    if (!bounds::increasing_from(enc, alpha)) {
        return std::nullopt;
    }
    if (bounds::eval_G(enc, alpha, omega).verdict) {
        return 0U;
    }
    for (unsigned s = 1; s <= omega; ++s) {
        Rational delta;
        try {
            delta = bounds::worst_case_delta(omega, s);
        } catch (const DomainError&) {
            break;
        }
        if (bounds::eval_Gs(enc, alpha, omega - s, delta, s).verdict) {
            return s;
        }
    }
    return std::nullopt;
}

// Certificate with the least threshold over every admissible s.
CaseCertificate best_threshold(double alpha, unsigned omega, const CaseOptions& copt)
{
    std::optional<CaseCertificate> best;
    for (unsigned s = 0; s <= omega; ++s) {
        CaseCertificate c;
        try {
            c = evaluate_case(alpha, omega, s, copt);
        } catch (const DomainError&) {
            break;
        }
        if (c.threshold.empty() || !c.monotone_beyond) {
            continue;
        }
        if (!best || compare(Real::from_string(c.threshold, Round::Up),
                             Real::from_string(best->threshold, Round::Up)) < 0) {
            best = std::move(c);
        }
    }
    if (!best) {
        return evaluate_case(alpha, omega, default_s_rule(omega), copt);
    }
    return *best;
}

CaseCertificate certify_omega(double alpha, unsigned omega, const CaseOptions& copt)
{
    const unsigned rule = default_s_rule(omega);
    CaseCertificate cert = evaluate_case(alpha, omega, rule, copt);
    if (is_closed(cert.status) || omega == 13) {
        return cert;
    }
    if (const auto s = s_closing_at(alpha, omega, cert.floor)) {
        cert = evaluate_case(alpha, omega, *s, copt);
        if (is_closed(cert.status)) {
            cert.notes += " (s chosen by search; default rule gives s = " + std::to_string(rule) + ")";
            return cert;
        }
    }
    cert = best_threshold(alpha, omega, copt);
    cert.notes += " (least threshold over s)";
    return cert;
}

} // namespace

ProofReport full_proof(double alpha, const ProofOptions& options)
{
    if (!(alpha > alpha_floor() && alpha <= 1.0)) {
        throw DomainError("full_proof: alpha must lie in (log 2 / log 3, 1] = (" + std::to_string(alpha_floor()) +
                          ", 1]");
    }
    if (options.direct_scan_limit < kLloydLower) {
        throw DomainError("full_proof: the direct scan must reach " + std::to_string(kLloydLower));
    }
    if (options.omega_max < 30) {
        throw DomainError("full_proof: omega_max must be >= 30");
    }
    ProofReport rep;
    rep.alpha = alpha;
    rep.options = options;

    scan::ScanOptions sopt;
    sopt.jobs = options.jobs;
    sopt.alpha = alpha;
    sopt.ceiling = std::max<u64>(options.direct_scan_limit, scan::scan_ceiling());
    const auto direct = scan::run_scan(scan::ScanKind::TheoremDirect, 2, options.direct_scan_limit, sopt);
    rep.direct.limit = options.direct_scan_limit;
    rep.direct.primes_checked = direct.primes_scanned;
    for (const auto& v : direct.violations) {
        rep.direct.violations.push_back(v.p);
        rep.failures.push_back("direct scan: g_sf(" + std::to_string(v.p) + ") >= p^alpha");
    }

    const auto lloyd = scan::run_scan(scan::ScanKind::LloydPrimeRoot, 2, options.direct_scan_limit, sopt);
    rep.lloyd.trusted = options.trust_lloyd;
    rep.lloyd.verified_from = kLloydLower + 1;
    rep.lloyd.verified_to = options.direct_scan_limit;
    for (const auto& v : lloyd.violations) {
        rep.lloyd.violations.push_back(v.p);
        rep.failures.push_back("prime primitive root table contradicted at p = " + std::to_string(v.p));
    }
    rep.lloyd.primes_checked = lloyd.primes_scanned;

    CaseOptions copt;
    copt.trust_lloyd = options.trust_lloyd;
    copt.direct_scan_limit = options.direct_scan_limit;

    std::map<unsigned, CaseCertificate> by_omega;
    try {
        for (auto& c : verify_large_omega(alpha, 30, options.omega_max)) {
            by_omega.emplace(c.omega, std::move(c));
        }
    } catch (const CertificationError&) {
        // Some omega >= 30 needs sieving; handled per omega below.
    }
    for (unsigned w = 1; w <= options.omega_max; ++w) {
        if (!by_omega.count(w)) {
            by_omega.emplace(w, certify_omega(alpha, w, copt));
        }
    }

    auto& c13 = by_omega.at(13);
    if (c13.status == CaseStatus::RequiresEnumeration) {
        try {
            const u64 hi = omega13_window_hi(alpha);
            if (hi > kEnumerationCap) {
                c13.notes += "; window too wide to enumerate";
            } else {
                rep.ladder = forced_divisor_ladder(alpha);
                rep.omega13 = omega13_pipeline(alpha, kLloydUpper, hi, options.jobs);
                if (!rep.omega13->endpoints_clear) {
                    rep.failures.push_back("omega = 13: a window endpoint is itself a qualifying prime");
                }
                c13.notes += "; window [" + rep.ladder->window_lo + ", " + rep.ladder->window_hi + "] enumerated, " +
                             std::to_string(rep.omega13->survivor_count) + " survivors with g_sf < " +
                             std::to_string(kSurvivorRootLimit);
            }
        } catch (const CertificationError& e) {
            rep.failures.push_back(std::string("omega = 13: ") + e.what());
        } catch (const ResourceError& e) {
            c13.notes += std::string("; ") + e.what();
        }
    }

    std::optional<Real> p0;
    for (auto& [w, c] : by_omega) {
        const bool enumerated = w == 13 && rep.omega13.has_value();
        if (is_closed(c.status) || enumerated) {
            continue;
        }
        if (c.threshold.empty()) {
            rep.failures.push_back("omega = " + std::to_string(w) + ": no threshold found (" + c.notes + ")");
            continue;
        }
        const Real t = Real::from_string(c.threshold, Round::Up);
        if (!p0 || compare(t, *p0) > 0) {
            p0 = t;
        }
    }
    if (p0) {
        rep.residual_p0 = p0->to_scientific(3, Round::Up);
    }
    for (auto& [w, c] : by_omega) {
        rep.cases.push_back(std::move(c));
    }

    rep.tail = verify_omega_tail(alpha, options.omega_max);
    if (!rep.tail.holds()) {
        rep.failures.push_back("omega > " + std::to_string(options.omega_max) + ": tail induction fails");
    }
    return rep;
}

std::vector<std::string> reverify(const ProofReport& report, mpfr_prec_t precision)
{
    std::vector<std::string> bad;
    const double alpha = report.alpha;
    auto check_at = [&](const std::string& where, const Enclosure& p, unsigned omega, unsigned s,
                        const std::optional<Rational>& delta) {
        const bool ok = s == 0 ? bounds::eval_G(p, alpha, omega).verdict
                               : bounds::eval_Gs(p, alpha, omega - s, *delta, s).verdict;
        if (!ok || !bounds::increasing_from(p, alpha)) {
            bad.push_back(where + ": verdict false at " + p.text());
        }
    };

    for (const auto& c : report.cases) {
        if (!is_closed(c.status)) {
            continue;
        }
        const std::string where = "omega = " + std::to_string(c.omega);
        if (c.s > 0 && (!c.delta_min || *c.delta_min != bounds::worst_case_delta(c.omega, c.s, c.excluded))) {
            bad.push_back(where + ": recorded delta differs from the recomputed worst case");
            continue;
        }
        const Enclosure t = Enclosure::from_decimal(c.threshold, precision);
        check_at(where, t, c.omega, c.s, c.delta_min);
        const BigInt external = report.options.trust_lloyd ? BigInt(kLloydUpper) : BigInt(report.options.direct_scan_limit);
        const BigInt& limit = c.status == CaseStatus::ClosedByBound ? c.primorial_floor : external;
        if (compare(t.lo(), limit) > 0) {
            bad.push_back(where + ": threshold " + c.threshold + " exceeds " + limit.str());
        }
    }

    if (report.ladder) {
        for (const auto& st : report.ladder->steps) {
            const std::string where = "ladder q = " + std::to_string(st.q);
            if (st.method == LadderMethod::Size) {
                if (BigInt(st.witness) <= BigInt(report.omega13 ? report.omega13->window_hi : 0)) {
                    bad.push_back(where + ": size witness does not exceed the window");
                }
            } else {
                const Enclosure t = Enclosure::from_decimal(st.witness, precision);
                if (!bounds::eval_Gs(t, alpha, 13 - st.s, *st.delta, st.s).verdict ||
                    !bounds::increasing_from(t, alpha)) {
                    bad.push_back(where + ": verdict false at " + st.witness);
                }
                if (compare(t.lo(), BigInt(kLloydUpper)) > 0) {
                    bad.push_back(where + ": threshold above the window start");
                }
            }
        }
    }

    if (report.omega13) {
        for (const auto& e : report.omega13->eliminated) {
            const auto ev = bounds::eval_Gs(Enclosure::exact(e.p, precision), alpha, 3, e.delta, 10);
            if (!ev.verdict) {
                bad.push_back("omega = 13: elimination of " + std::to_string(e.p) + " does not re-verify");
            }
        }
        for (const auto& s : report.omega13->survivors) {
            const nt::PrimeContext ctx(s.p);
            const u64 g = counting::least_squarefree_primroot(ctx);
            if (g != s.least_squarefree_root || g >= kSurvivorRootLimit) {
                bad.push_back("omega = 13: survivor " + std::to_string(s.p) + " root does not re-verify");
            }
        }
    }

    if (report.tail.holds()) {
        const auto again = verify_omega_tail(alpha, report.tail.omega_max);
        if (!again.holds()) {
            bad.push_back("tail induction does not re-verify");
        }
    }
    return bad;
}

std::vector<std::string> audit_coverage(const ProofReport& report)
{
    std::vector<std::string> gaps;
    if (report.direct.limit < kLloydLower) {
        gaps.push_back("direct scan stops below " + std::to_string(kLloydLower));
    }
    if (!report.direct.violations.empty()) {
        gaps.push_back("direct scan has violations");
    }
    // p = 2 has omega(p-1) = 0 and lies in the direct scan.
    std::map<unsigned, const CaseCertificate*> seen;
    for (const auto& c : report.cases) {
        if (!seen.emplace(c.omega, &c).second) {
            gaps.push_back("omega = " + std::to_string(c.omega) + " certified twice");
        }
    }
    const std::optional<Real> p0 =
        report.residual_p0 ? std::optional<Real>(Real::from_string(*report.residual_p0, Round::Down)) : std::nullopt;
    for (unsigned w = 1; w <= report.tail.omega_max; ++w) {
        const auto it = seen.find(w);
        if (it == seen.end()) {
            gaps.push_back("omega = " + std::to_string(w) + " has no certificate");
            continue;
        }
        const CaseCertificate& c = *it->second;
        if (is_closed(c.status)) {
            continue;
        }
        if (w == 13 && report.ladder && report.ladder->closed() && report.omega13) {
            const Real t = Real::from_string(c.threshold, Round::Up);
            if (compare(t, BigInt(report.omega13->window_hi)) > 0) {
                gaps.push_back("omega = 13: threshold beyond the enumerated window");
            }
            continue;
        }
        if (!p0 || c.threshold.empty() || compare(Real::from_string(c.threshold, Round::Up), *p0) > 0) {
            gaps.push_back("omega = " + std::to_string(w) + " is neither closed nor below the residual p0");
        }
    }
    if (!report.tail.holds()) {
        gaps.push_back("omega > " + std::to_string(report.tail.omega_max) + " not covered");
    }
    return gaps;
}

} // namespace sfroot::cases
