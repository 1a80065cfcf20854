#include "sfroot/bounds.hpp"

#include "sfroot/error.hpp"
#include "sfroot/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace sfroot::bounds {

namespace {

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Real pi_squared_over_six(Round r, mpfr_prec_t prec)
{
    const Real pi_r = pi(r, prec);
    return div(mul(pi_r, pi_r, r), Real::from_u64(6, r, prec), r);
}

// 0.104 is not a binary fraction; round it in the requested direction.
Real cipu_constant(Round r, mpfr_prec_t prec) { return Real::from_string("0.104", r, prec); }

Real delta_upper(const Rational& delta, unsigned s, mpfr_prec_t prec)
{
    if (delta <= 0) {
        throw DomainError("Delta: delta must be positive");
    }
    if (s == 0) {
        throw DomainError("Delta: s must be >= 1");
    }
    const Real delta_lo = Real::from_rational(delta, Round::Down, prec);
    const Real ratio = div(Real::from_u64(s - 1, Round::Up, prec), delta_lo, Round::Up);
    return add(ratio, Real::from_u64(2, Round::Up, prec), Round::Up);
}

void require_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in (0, 1]");
    }
}

void require_p(const Enclosure& p)
{
    if (compare(p.lo(), Real::from_u64(1, Round::Down, p.lo().precision())) <= 0) {
        throw DomainError("p must exceed 1");
    }
}

// Lower bounds on x^(1/2) p^(-1/4) with x = p^alpha, and on x itself.
struct MainTerm {
    Real main;
    Real x;
};

MainTerm main_term_at_alpha(const Enclosure& p, double alpha)
{
    const mpfr_prec_t prec = p.lo().precision();
    const Real a = Real::from_double(alpha, prec);
    const Real half_a = mul_2si(a, -1, Round::Down);
    const Real expo = sub(half_a, Real::from_string("0.25", Round::Down, prec), Round::Down);
    const Real& base = expo.sign() >= 0 ? p.lo() : p.hi();
    return {pow(base, expo, Round::Down), pow(p.lo(), a, Round::Down)};
}

BoundEvaluation finish(const Enclosure& p, double alpha, const Real& x_lo, unsigned omega_k,
                       std::optional<unsigned> s, std::optional<Rational> delta, const Real& Delta_up,
                       const Real& value)
{
    BoundEvaluation out;
    out.p = p.text();
    out.alpha = alpha;
    out.x = x_lo.to_double(Round::Down);
    out.omega_k = omega_k;
    out.s = s;
    out.delta = std::move(delta);
    if (s) {
        out.Delta = Delta_up.to_double(Round::Up);
    }
    out.value = value.to_double(Round::Down);
    out.verdict = value.sign() > 0;
    out.precision = value.precision();
    return out;
}

} // namespace

std::string_view to_string(Rounding r)
{
    switch (r) {
    case Rounding::ConservativeDown:
        return "conservative-down";
    }
    return "unknown";
}

Enclosure Enclosure::exact(const BigInt& v, mpfr_prec_t prec)
{
    return Enclosure(Real::from_int(v, Round::Down, prec), Real::from_int(v, Round::Up, prec), v.str());
}

Enclosure Enclosure::exact(u64 v, mpfr_prec_t prec)
{
    return Enclosure(Real::from_u64(v, Round::Down, prec), Real::from_u64(v, Round::Up, prec), std::to_string(v));
}

Enclosure Enclosure::from_double(double v, mpfr_prec_t prec)
{
    Real r = Real::from_double(v, prec);
    return Enclosure(r, r, format_double(v));
}

Enclosure Enclosure::from_decimal(std::string_view text, mpfr_prec_t prec)
{
    return Enclosure(Real::from_string(text, Round::Down, prec), Real::from_string(text, Round::Up, prec),
                     std::string(text));
}

Enclosure Enclosure::from_real(const Real& v)
{
    return Enclosure(v, v, v.to_scientific(20, Round::Nearest));
}

// Evaluated at floor(x): the bound is only valid at integers (it fails at x = 380.9).
Real cipu_lower(const Real& x_arg, Round r)
{
    const mpfr_prec_t prec = x_arg.precision();
    const Real x = floor(x_arg);
    // 6/pi^2 as 1 / (pi^2/6).
    const Real density = div(Real::from_u64(1, r, prec), pi_squared_over_six(opposite(r), prec), r);
    const Real main = mul(density, x, r);
    const Real corr = mul(cipu_constant(opposite(r), prec), sqrt(x, opposite(r)), opposite(r));
    return sub(main, corr, r);
}

double cipu_lower(double x)
{
    if (!(x >= 1.0) || !std::isfinite(x)) {
        throw DomainError("cipu_lower: requires x >= 1");
    }
    return cipu_lower(Real::from_double(x), Round::Down).to_double(Round::Down);
}

Real g_lower(const Enclosure& p, const Real& main_lower, unsigned omega_k, const Real& Delta_upper)
{
    const mpfr_prec_t prec = p.lo().precision();
    const Real c = pi_squared_over_six(Round::Up, prec);
    const Real t1 = div(cipu_constant(Round::Up, prec), root4(p.lo(), Round::Down), Round::Up);
    const Real sqrt_log = sqrt(log(p.hi(), Round::Up), Round::Up);
    const Real t2 = mul(mul_2si(Delta_upper, static_cast<long>(omega_k) + 1, Round::Up), sqrt_log, Round::Up);
    const Real subtracted = mul(c, add(t1, t2, Round::Up), Round::Up);
    return sub(main_lower, subtracted, Round::Down);
}

BoundEvaluation eval_G(const Enclosure& p, double alpha, unsigned omega)
{
    require_alpha(alpha);
    require_p(p);
    const auto [main, x] = main_term_at_alpha(p, alpha);
    const Real one = Real::from_u64(1, Round::Up, p.lo().precision());
    return finish(p, alpha, x, omega, std::nullopt, std::nullopt, one, g_lower(p, main, omega, one));
}

BoundEvaluation eval_G(double p, double alpha, unsigned omega)
{
    return eval_G(Enclosure::from_double(p), alpha, omega);
}

BoundEvaluation eval_Gs(const Enclosure& p, double alpha, unsigned omega_k, const Rational& delta, unsigned s)
{
    require_alpha(alpha);
    require_p(p);
    const Real Delta = delta_upper(delta, s, p.lo().precision());
    const auto [main, x] = main_term_at_alpha(p, alpha);
    return finish(p, alpha, x, omega_k, s, delta, Delta, g_lower(p, main, omega_k, Delta));
}

BoundEvaluation eval_Gs(double p, double alpha, unsigned omega_k, const Rational& delta, unsigned s)
{
    return eval_Gs(Enclosure::from_double(p), alpha, omega_k, delta, s);
}

BoundEvaluation eval_Gs_at(const Enclosure& p, const Enclosure& x, unsigned omega_k, const Rational& delta, unsigned s)
{
    require_p(p);
    if (x.lo().sign() <= 0) {
        throw DomainError("eval_Gs_at: x must be positive");
    }
    const Real Delta = delta_upper(delta, s, p.lo().precision());
    const Real main = div(sqrt(x.lo(), Round::Down), root4(p.hi(), Round::Up), Round::Down);
    return finish(p, 0.0, x.lo(), omega_k, s, delta, Delta, g_lower(p, main, omega_k, Delta));
}

WorstCaseProfile worst_case_profile(unsigned omega, unsigned s, const std::vector<u64>& excluded)
{
    if (s < 1 || s > omega) {
        throw DomainError("worst_case_delta: require 1 <= s <= omega");
    }
    std::vector<u64> admissible;
    std::size_t want = omega + excluded.size();
    while (admissible.size() < omega) {
        admissible.clear();
        for (u64 q : nt::first_primes(want)) {
            if (std::find(excluded.begin(), excluded.end(), q) == excluded.end()) {
                admissible.push_back(q);
            }
        }
        want *= 2;
    }
    admissible.resize(omega);
    WorstCaseProfile out;
    const std::size_t core = omega - s;
    out.core_primes.assign(admissible.begin(), admissible.begin() + static_cast<std::ptrdiff_t>(core));
    out.sieving_primes.assign(admissible.begin() + static_cast<std::ptrdiff_t>(core), admissible.end());
    Rational delta = 1;
    for (u64 q : out.sieving_primes) {
        delta -= Rational(1, q);
    }
    if (delta <= 0) {
        throw DomainError("worst_case_delta: delta <= 0 for omega = " + std::to_string(omega) +
                          ", s = " + std::to_string(s) + "; reduce s");
    }
    out.delta = delta;
    return out;
}

Rational worst_case_delta(unsigned omega, unsigned s, const std::vector<u64>& excluded)
{
    return worst_case_profile(omega, s, excluded).delta;
}

SieveConfig make_sieve_config(const nt::PrimeContext& ctx, unsigned s)
{
    const unsigned omega = ctx.omega();
    if (s < 1 || s > omega) {
        throw DomainError("make_sieve_config: require 1 <= s <= omega(p-1)");
    }
    const auto primes = ctx.pm1().primes();
    SieveConfig out;
    out.p = ctx.p();
    out.s = s;
    out.omega_k = omega - s;
    out.core_primes.assign(primes.begin(), primes.begin() + out.omega_k);
    out.sieving_primes.assign(primes.begin() + out.omega_k, primes.end());
    for (u64 q : out.core_primes) {
        out.core_k *= q;
    }
    Rational delta = 1;
    for (u64 q : out.sieving_primes) {
        delta -= Rational(1, q);
    }
    if (delta <= 0) {
        throw DomainError("make_sieve_config: delta <= 0 for p = " + std::to_string(ctx.p()) +
                          ", s = " + std::to_string(s));
    }
    out.delta = delta;
    out.Delta = delta_upper(delta, s, kWorkingPrecision).to_double(Round::Up);
    return out;
}

AuxBounds aux_bounds(const SieveConfig& config, double p_arg, double x_arg)
{
    if (config.sieving_primes.empty()) {
        throw DomainError("aux_bounds: configuration has no sieving primes");
    }
    if (!(x_arg >= 1.0) || !(x_arg < p_arg)) {
        throw DomainError("aux_bounds: require 1 <= x < p");
    }
    const mpfr_prec_t prec = kWorkingPrecision;
    const Real p = Real::from_double(p_arg, prec);
    const Real x = Real::from_double(x_arg, prec);

    Rational density = 1;
    for (u64 q : config.core_primes) {
        density *= Rational(q - 1, q);
    }
    const long shift = static_cast<long>(config.omega_k) + 1;

    // Core lower bound: (phi(k)/k) { (6/pi^2) x - 0.104 sqrt x - 2^(w(k)+1) x^(1/2) p^(1/4) (log p)^(1/2) }.
    const Real char_up = mul_2si(
        mul(mul(sqrt(x, Round::Up), root4(p, Round::Up), Round::Up), sqrt(log(p, Round::Up), Round::Up), Round::Up),
        shift, Round::Up);
    const Real brace = sub(cipu_lower(x, Round::Down), char_up, Round::Down);
    const Real dens_for_brace = Real::from_rational(density, brace.sign() >= 0 ? Round::Down : Round::Up, prec);
    const Real core_lower = mul(dens_for_brace, brace, Round::Down);

    // Sieving upper bound with the factor (1 - 1/p_i) taken at the largest sieving prime.
    const u64 pmax = *std::max_element(config.sieving_primes.begin(), config.sieving_primes.end());
    const Real factor = Real::from_rational(density * Rational(pmax - 1, pmax), Round::Up, prec);
    const Real sieving_upper = mul(factor, char_up, Round::Up);

    return {core_lower.to_double(Round::Down), sieving_upper.to_double(Round::Up)};
}

bool increasing_from(const Enclosure& p, double alpha)
{
    if (!(alpha > 0.5)) {
        return false;
    }
    const mpfr_prec_t prec = p.lo().precision();
    const Real gap = sub(Real::from_double(alpha, prec), Real::from_string("0.5", Round::Down, prec), Round::Down);
    const Real need = div(Real::from_u64(1, Round::Up, prec), gap, Round::Up);
    return compare(log(p.lo(), Round::Down), need) >= 0;
}

ThresholdResult threshold_p(double alpha, unsigned omega, unsigned s, const std::vector<u64>& excluded,
                            const ThresholdOptions& options)
{
    require_alpha(alpha);
    const mpfr_prec_t prec = options.precision;
    ThresholdResult out;
    out.alpha = alpha;
    out.omega = omega;
    out.s = s;
    out.excluded = excluded;

    Real Delta = Real::from_u64(1, Round::Up, prec);
    if (s == 0) {
        out.omega_k = omega;
    } else {
        const auto profile = worst_case_profile(omega, s, excluded);
        out.delta = profile.delta;
        out.omega_k = omega - s;
        Delta = delta_upper(profile.delta, s, prec);
    }

    auto verdict = [&](const Real& p) {
        const Enclosure enc = Enclosure::from_real(p);
        const auto main = main_term_at_alpha(enc, alpha).main;
        return g_lower(enc, main, out.omega_k, Delta).sign() > 0;
    };

    const Real ceiling = Real::from_string(options.ceiling, Round::Up, prec);
    const Real two = Real::from_u64(2, Round::Nearest, prec);
    Real lo = Real::from_u64(1'000'000, Round::Nearest, prec);
    Real hi = lo;
    if (verdict(lo)) {
        const Real floor_p = Real::from_u64(2, Round::Nearest, prec);
        do {
            hi = lo;
            lo = div(lo, two, Round::Nearest);
        } while (compare(lo, floor_p) > 0 && verdict(lo));
        if (compare(lo, floor_p) <= 0) {
            lo = floor_p;
        }
    } else {
        // Square rather than double so huge thresholds are reached in few steps;
        // the geometric bisection below narrows the bracket either way.
        do {
            lo = hi;
            if (compare(lo, ceiling) >= 0) {
                throw CertificationError("threshold_p: no sign change below " + options.ceiling + " (alpha = " +
                                         std::to_string(alpha) + ", omega = " + std::to_string(omega) +
                                         ", s = " + std::to_string(s) + ")");
            }
            hi = mul(hi, hi, Round::Nearest);
            if (compare(hi, ceiling) > 0) {
                hi = ceiling;
            }
        } while (!verdict(hi));
    }

    const Real one_plus_tol = add(Real::from_u64(1, Round::Nearest, prec),
                                  Real::from_double(options.relative_tolerance, prec), Round::Nearest);
    while (compare(div(hi, lo, Round::Nearest), one_plus_tol) > 0) {
        const Real mid = sqrt(mul(lo, hi, Round::Nearest), Round::Nearest);
        if (verdict(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    out.p_star = hi;
    out.p_star_text = hi.to_scientific(10, Round::Up);
    out.stable = verdict(mul(hi, two, Round::Nearest)) &&
                 verdict(mul(hi, Real::from_u64(10, Round::Nearest, prec), Round::Nearest));
    out.monotone_beyond = verdict(hi) && increasing_from(Enclosure::from_real(hi), alpha);
    return out;
}

} // namespace sfroot::bounds
