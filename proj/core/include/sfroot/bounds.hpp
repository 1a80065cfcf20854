#pragma once

// Explicit analytic inequalities evaluated with directed rounding.
//
// All lower bounds are produced by rounding every positive contribution down
// and every subtracted contribution up, so a positive result certifies the
// exact inequality. log is the natural logarithm throughout.

#include "sfroot/mpfr_real.hpp"
#include "sfroot/ntcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfroot::bounds {

using nt::u64;

// Encloses a modulus-like argument p (or a cutoff x) as [lo, hi].
class Enclosure {
public:
    static Enclosure exact(const BigInt& v, mpfr_prec_t prec = kWorkingPrecision);
    static Enclosure exact(u64 v, mpfr_prec_t prec = kWorkingPrecision);
    static Enclosure from_double(double v, mpfr_prec_t prec = kWorkingPrecision);
    static Enclosure from_decimal(std::string_view text, mpfr_prec_t prec = kWorkingPrecision);
    static Enclosure from_real(const Real& v);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    // Human-readable form of the argument as given.
    const std::string& text() const { return text_; }
    double approx() const { return lo_.to_double(Round::Nearest); }

private:
    Enclosure(Real lo, Real hi, std::string text) : lo_(std::move(lo)), hi_(std::move(hi)), text_(std::move(text)) {}

    Real lo_;
    Real hi_;
    std::string text_;
};

enum class Rounding { ConservativeDown };

std::string_view to_string(Rounding r);

struct BoundEvaluation {
    std::string p;
    double alpha = 0.0;
    // Lower bound on x (p^alpha, or the supplied cutoff).
    double x = 0.0;
    unsigned omega_k = 0;
    std::optional<unsigned> s;
    std::optional<Rational> delta;
    // Upper bound on Delta = (s-1)/delta + 2.
    std::optional<double> Delta;
    // Certified lower bound on G or G_s, rounded down to double.
    double value = 0.0;
    Rounding rounding = Rounding::ConservativeDown;
    bool verdict = false;
    mpfr_prec_t precision = kWorkingPrecision;
};

// (6/pi^2) x - 0.104 sqrt(x), rounded down. Throws DomainError if x < 1.
double cipu_lower(double x);
Real cipu_lower(const Real& x, Round r = Round::Down);

// G(p^alpha) = x^(1/2) p^(-1/4) - (pi^2/6)(0.104/p^(1/4) + 2^(omega+1) (log p)^(1/2)).
BoundEvaluation eval_G(const Enclosure& p, double alpha, unsigned omega);
BoundEvaluation eval_G(double p, double alpha, unsigned omega);

// G_s(p^alpha) with Delta = (s-1)/delta + 2 multiplying the character term.
// Throws DomainError if delta <= 0 or s == 0.
BoundEvaluation eval_Gs(const Enclosure& p, double alpha, unsigned omega_k, const Rational& delta, unsigned s);
BoundEvaluation eval_Gs(double p, double alpha, unsigned omega_k, const Rational& delta, unsigned s);

// G_s evaluated at an explicit cutoff x instead of p^alpha (alpha is reported as 0).
BoundEvaluation eval_Gs_at(const Enclosure& p, const Enclosure& x, unsigned omega_k, const Rational& delta, unsigned s);

// Certified lower bound as a Real, for callers that compare against huge
// arguments. Delta_upper of 1 with s unset gives plain G.
Real g_lower(const Enclosure& p, const Real& main_lower, unsigned omega_k, const Real& Delta_upper);

struct WorstCaseProfile {
    std::vector<u64> core_primes;
    std::vector<u64> sieving_primes;
    Rational delta;
};

// The least delta over primes p with omega(p-1) = omega whose core absorbs the
// omega-s smallest prime divisors: the s sieving primes are the smallest
// admissible primes after the omega-s smallest ones (excluded primes skipped).
// Throws DomainError when the resulting delta <= 0.
WorstCaseProfile worst_case_profile(unsigned omega, unsigned s, const std::vector<u64>& excluded = {});
Rational worst_case_delta(unsigned omega, unsigned s, const std::vector<u64>& excluded = {});

struct SieveConfig {
    u64 p = 0;
    u64 core_k = 1;
    std::vector<u64> core_primes;
    std::vector<u64> sieving_primes;
    unsigned s = 0;
    unsigned omega_k = 0;
    Rational delta;
    // Delta = (s-1)/delta + 2 rounded up.
    double Delta = 0.0;
};

// Core = product of the omega-s smallest primes of p-1, sieving primes the s
// largest, delta exact. Throws DomainError for s outside [1, omega] or delta <= 0.
SieveConfig make_sieve_config(const nt::PrimeContext& ctx, unsigned s);

struct AuxBounds {
    // Lower bound on N_k(p, x), rounded down.
    double core_lower;
    // Upper bound on |N_{k p_i}(p, x) - (1 - 1/p_i) N_k(p, x)|, uniform in i, rounded up.
    double sieving_upper;
};

AuxBounds aux_bounds(const SieveConfig& config, double p, double x);

struct ThresholdOptions {
    // Search fails with CertificationError if the verdict is still false here.
    std::string ceiling = "1e60";
    double relative_tolerance = 1e-6;
    mpfr_prec_t precision = kWorkingPrecision;
};

struct ThresholdResult {
    double alpha = 0.0;
    unsigned omega = 0;
    // 0 means plain G.
    unsigned s = 0;
    std::vector<u64> excluded;
    unsigned omega_k = 0;
    std::optional<Rational> delta;
    // Least p (up to relative_tolerance) with a true verdict; the verdict is
    // certified at this exact value.
    Real p_star;
    std::string p_star_text;
    // Verdict re-checked at 2 p* and 10 p*.
    bool stable = false;
    // log p* >= 1/(alpha - 1/2), which with a true verdict at p* makes the
    // bound increasing, hence true, for all p >= p*.
    bool monotone_beyond = false;

    double approx() const { return p_star.to_double(Round::Up); }
};

// Least p* such that the G (s = 0) or G_s verdict holds for all p >= p*.
ThresholdResult threshold_p(double alpha, unsigned omega, unsigned s, const std::vector<u64>& excluded = {},
                            const ThresholdOptions& options = {});

// Sound form of the monotonicity test used by threshold_p: true when
// log(p) >= 1/(alpha - 1/2) and alpha > 1/2.
bool increasing_from(const Enclosure& p, double alpha);

} // namespace sfroot::bounds
