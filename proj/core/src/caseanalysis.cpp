#include "sfroot/caseanalysis.hpp"

#include "sfroot/error.hpp"
#include "sfroot/sieve.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sfroot::cases {

using bounds::Enclosure;
using bounds::Real;
using bounds::Round;

double alpha_floor() { return std::log(2.0) / std::log(3.0); }

std::string_view to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::ClosedByBound:
        return "closed-by-bound";
    case CaseStatus::ClosedByLloyd:
        return "closed-by-lloyd";
    case CaseStatus::RequiresEnumeration:
        return "requires-enumeration";
    case CaseStatus::Open:
        return "open";
    }
    return "open";
}

CaseStatus case_status_from_string(std::string_view s)
{
    for (auto k : {CaseStatus::ClosedByBound, CaseStatus::ClosedByLloyd, CaseStatus::RequiresEnumeration,
                   CaseStatus::Open}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw DomainError("unknown case status '" + std::string(s) + "'");
}

std::string_view to_string(LadderMethod m) { return m == LadderMethod::Size ? "size" : "bound"; }

unsigned default_s_rule(unsigned omega)
{
    if (omega >= 14 && omega <= 29) {
        return omega - 3;
    }
    if (omega >= 8 && omega <= 12) {
        return omega - 2;
    }
    if (omega == 13) {
        return 10;
    }
    return 0;
}

namespace {

std::string big_text(const BigInt& v) { return v.str(); }

} // namespace

CaseCertificate evaluate_case(double alpha, unsigned omega, unsigned s, const CaseOptions& options,
                              const std::vector<u64>& excluded)
{
    if (omega == 0) {
        throw DomainError("evaluate_case: omega must be >= 1");
    }
    CaseCertificate cert;
    cert.omega = omega;
    cert.s = s;
    cert.excluded = excluded;
    if (s > 0) {
        cert.delta_min = bounds::worst_case_delta(omega, s, excluded);
    }
    cert.primorial_floor = nt::primorial(omega) + 1;
    const BigInt external_hi = options.trust_lloyd ? BigInt(kLloydUpper) : BigInt(options.direct_scan_limit);
    cert.floor = cert.primorial_floor > external_hi ? cert.primorial_floor : external_hi;

    bounds::ThresholdOptions topt;
    topt.ceiling = options.threshold_ceiling;
    bounds::ThresholdResult t;
    try {
        t = bounds::threshold_p(alpha, omega, s, excluded, topt);
    } catch (const CertificationError& e) {
        cert.status = CaseStatus::Open;
        cert.notes = e.what();
        return cert;
    }
    cert.threshold = t.p_star_text;
    cert.stable = t.stable;
    cert.monotone_beyond = t.monotone_beyond;

    const Real p_star = Real::from_string(cert.threshold, Round::Up);
    std::string how = s == 0 ? "plain G" : "G_s with s = " + std::to_string(s);
    if (!t.monotone_beyond) {
        cert.status = CaseStatus::Open;
        cert.notes = how + ": verdict at threshold not certified monotone";
    } else if (compare(p_star, cert.primorial_floor) <= 0) {
        cert.status = CaseStatus::ClosedByBound;
        cert.notes = how + " holds from " + cert.threshold + ", below primorial(" + std::to_string(omega) + ")+1";
    } else if (compare(p_star, external_hi) <= 0) {
        cert.status = CaseStatus::ClosedByLloyd;
        cert.notes = how + " holds from " + cert.threshold + "; smaller p lie in the " +
                     (options.trust_lloyd ? "prime primitive root table" : "direct scan") + " range";
    } else {
        cert.status = CaseStatus::RequiresEnumeration;
        cert.notes = how + " holds from " + cert.threshold + "; [" + big_text(cert.floor) + ", " + cert.threshold +
                     "] is not covered";
    }
    return cert;
}

CaseCertificate run_case(double alpha, unsigned omega, unsigned s)
{
    if (omega < 8 || omega > 29) {
        throw DomainError("run_case: omega must lie in [8, 29]");
    }
    return evaluate_case(alpha, omega, s);
}

std::vector<CaseCertificate> verify_large_omega(double alpha, unsigned omega_min, unsigned omega_max)
{
    if (omega_min < 2 || omega_min > omega_max) {
        throw DomainError("verify_large_omega: require 2 <= omega_min <= omega_max");
    }
    std::vector<CaseCertificate> out;
    std::string offenders;
    for (unsigned w = omega_min; w <= omega_max; ++w) {
        CaseCertificate cert;
        cert.omega = w;
        const BigInt prim = nt::primorial(w);
        cert.primorial_floor = prim + 1;
        cert.floor = cert.primorial_floor;
        const Enclosure at_floor = Enclosure::exact(cert.primorial_floor);
        bool ok = bounds::eval_G(at_floor, alpha, w).verdict;
        BigInt scaled = prim;
        for (int j = 1; j <= 5 && ok; ++j) {
            scaled *= 10;
            ok = bounds::eval_G(Enclosure::exact(scaled), alpha, w).verdict;
        }
        cert.stable = ok;
        cert.monotone_beyond = bounds::increasing_from(at_floor, alpha);
        if (ok && cert.monotone_beyond) {
            cert.status = CaseStatus::ClosedByBound;
            cert.threshold = cert.primorial_floor.str();
            cert.notes = "G > 0 at primorial+1 and at 10^j primorial (j = 1..5); log p >= 1/(alpha - 1/2) "
                         "there, so G increases from the floor on";
        } else {
            cert.status = CaseStatus::Open;
            cert.notes = "plain G not positive at primorial+1";
            offenders += (offenders.empty() ? "" : ", ") + std::to_string(w);
        }
        out.push_back(std::move(cert));
    }
    if (!offenders.empty()) {
        throw CertificationError("verify_large_omega: plain G fails at the primorial floor for omega = " + offenders);
    }
    return out;
}

TailCertificate verify_omega_tail(double alpha, unsigned omega_max)
{
    TailCertificate out;
    out.omega_max = omega_max;
    const auto primes = nt::first_primes(omega_max + 1);
    out.next_prime = primes.back();
    const BigInt floor = nt::primorial(omega_max) + 1;
    const Enclosure enc = Enclosure::exact(floor);
    out.base_verdict = bounds::eval_G(enc, alpha, omega_max).verdict && bounds::increasing_from(enc, alpha);

    // Passing from omega to omega+1 multiplies the primorial floor by q >= q0
    // (q0/1.0001 absorbs the +1) and the character term by 2 sqrt(log P'/log P).
    const mpfr_prec_t prec = bounds::kWorkingPrecision;
    const Real a = bounds::sub(bounds::mul_2si(Real::from_double(alpha, prec), -1, Round::Down),
                               Real::from_string("0.25", Round::Up, prec), Round::Down);
    const Real q0_lo = bounds::div(Real::from_u64(out.next_prime, Round::Down, prec),
                                   Real::from_string("1.0001", Round::Up, prec), Round::Down);
    const Real lhs = bounds::pow(q0_lo, a, Round::Down);
    const Real log_floor = bounds::log(enc.lo(), Round::Down);
    const Real ratio = bounds::div(bounds::log(Real::from_u64(out.next_prime, Round::Up, prec), Round::Up),
                                   log_floor, Round::Up);
    const Real rhs = bounds::mul_2si(
        bounds::sqrt(bounds::add(Real::from_u64(1, Round::Up, prec), ratio, Round::Up), Round::Up), 1, Round::Up);
    // q^a / sqrt(1 + log q / L) increases in q once a > 1/(2L).
    const Real need_a = bounds::div(Real::from_u64(1, Round::Up, prec), bounds::mul_2si(log_floor, 1, Round::Down),
                                    Round::Up);
    out.step_holds = compare(lhs, rhs) >= 0 && compare(a, need_a) > 0;
    out.notes = "base: G > 0 at primorial(" + std::to_string(omega_max) + ")+1; step: (q0/1.0001)^(alpha/2-1/4) >= " +
                "2 sqrt(1 + log q0 / log(primorial+1)) with q0 = " + std::to_string(out.next_prime);
    return out;
}

bool LadderResult::closed() const
{
    for (const auto& s : steps) {
        if (!s.closed) {
            return false;
        }
    }
    return !steps.empty();
}

namespace {

// Rounds a positive value up to `digits` significant figures.
u64 round_up_sig(const Real& v, int digits)
{
    const BigInt n = v.to_int(Round::Up);
    BigInt scale = 1;
    while (n / scale >= BigInt(static_cast<u64>(std::pow(10, digits)))) {
        scale *= 10;
    }
    BigInt r = (n + scale - 1) / scale * scale;
    if (r > BigInt(std::numeric_limits<u64>::max())) {
        throw ResourceError("round_up_sig: value exceeds 64 bits");
    }
    return r.convert_to<u64>();
}

} // namespace

u64 omega13_window_hi(double alpha)
{
    bounds::ThresholdOptions topt;
    const auto t = bounds::threshold_p(alpha, 13, 10, {}, topt);
    return round_up_sig(t.p_star, 3);
}

LadderResult forced_divisor_ladder(double alpha)
{
    LadderResult out;
    const u64 lo = kLloydUpper;
    const u64 hi = omega13_window_hi(alpha);
    out.window_lo = Real::from_u64(lo, Round::Down).to_scientific(3, Round::Down);
    out.window_hi = Real::from_u64(hi, Round::Up).to_scientific(3, Round::Up);
    const Real lo_r = Real::from_u64(lo, Round::Down);

    for (u64 q : {3, 5, 7, 11, 13, 17, 19, 23}) {
        LadderStep step;
        step.q = q;
        // Smallest p-1 with 13 distinct prime factors, none equal to q.
        BigInt least = 1;
        unsigned taken = 0;
        for (u64 r : nt::first_primes(15)) {
            if (r != q && taken < 13) {
                least *= r;
                ++taken;
            }
        }
        if (least > BigInt(hi)) {
            step.method = LadderMethod::Size;
            step.witness = least.str();
            step.closed = true;
        } else {
            step.method = LadderMethod::Bound;
            for (unsigned s : {10U, 11U}) {
                step.s = s;
                step.delta = bounds::worst_case_delta(13, s, {q});
                const auto t = bounds::threshold_p(alpha, 13, s, {q});
                step.witness = t.p_star_text;
                if (t.monotone_beyond && compare(t.p_star, lo_r) <= 0) {
                    step.closed = true;
                    break;
                }
            }
        }
        out.steps.push_back(step);
        if (!step.closed) {
            throw CertificationError("forced_divisor_ladder: cannot show " + std::to_string(q) +
                                     " | p-1 (best threshold " + step.witness + " > " + out.window_lo + ")");
        }
    }
    return out;
}

} // namespace sfroot::cases
