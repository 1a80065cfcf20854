#pragma once

// Thin RAII wrapper over mpfr_t. Every arithmetic helper takes an explicit
// rounding direction; nothing here rounds implicitly except `Nearest`.

#include <boost/multiprecision/gmp.hpp>

#include <mpfr.h>

#include <string>
#include <string_view>

namespace sfroot::bounds {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class Round { Down, Up, Nearest };

inline constexpr mpfr_prec_t kWorkingPrecision = 128;

inline mpfr_rnd_t to_mpfr(Round r)
{
    switch (r) {
    case Round::Down:
        return MPFR_RNDD;
    case Round::Up:
        return MPFR_RNDU;
    case Round::Nearest:
        break;
    }
    return MPFR_RNDN;
}

inline Round opposite(Round r)
{
    return r == Round::Down ? Round::Up : (r == Round::Up ? Round::Down : Round::Nearest);
}

class Real {
public:
    explicit Real(mpfr_prec_t prec = kWorkingPrecision);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_double(double v, mpfr_prec_t prec = kWorkingPrecision);
    static Real from_int(const BigInt& v, Round r, mpfr_prec_t prec = kWorkingPrecision);
    static Real from_u64(unsigned long long v, Round r, mpfr_prec_t prec = kWorkingPrecision);
    static Real from_rational(const Rational& v, Round r, mpfr_prec_t prec = kWorkingPrecision);
    // Accepts decimal or scientific notation, e.g. "3.34e15".
    static Real from_string(std::string_view text, Round r, mpfr_prec_t prec = kWorkingPrecision);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double(Round r) const { return mpfr_get_d(v_, to_mpfr(r)); }
    // Scientific notation with `digits` significant digits, rounded in direction r.
    std::string to_scientific(int digits, Round r) const;
    // Integer part rounded in direction r.
    BigInt to_int(Round r) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }

    friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend int compare(const Real& a, const BigInt& b) { return mpfr_cmp_z(a.v_, b.backend().data()); }

private:
    mpfr_t v_;
};

Real add(const Real& a, const Real& b, Round r);
Real sub(const Real& a, const Real& b, Round r);
Real mul(const Real& a, const Real& b, Round r);
Real div(const Real& a, const Real& b, Round r);
Real pow(const Real& base, const Real& exponent, Round r);
Real sqrt(const Real& a, Round r);
Real floor(const Real& a);
Real root4(const Real& a, Round r);
Real log(const Real& a, Round r);
Real exp(const Real& a, Round r);
Real mul_2si(const Real& a, long k, Round r);
Real pi(Round r, mpfr_prec_t prec = kWorkingPrecision);

} // namespace sfroot::bounds
