#include "sfroot/mpfr_real.hpp"

#include "sfroot/error.hpp"

#include <cstdlib>
#include <memory>

namespace sfroot::bounds {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    if (this != &other) {
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_double(double v, mpfr_prec_t prec)
{
    Real out(prec < 53 ? 53 : prec);
    mpfr_set_d(out.v_, v, MPFR_RNDN);
    return out;
}

Real Real::from_int(const BigInt& v, Round r, mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_set_z(out.v_, v.backend().data(), to_mpfr(r));
    return out;
}

Real Real::from_u64(unsigned long long v, Round r, mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_set_uj(out.v_, v, to_mpfr(r));
    return out;
}

Real Real::from_rational(const Rational& v, Round r, mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_set_q(out.v_, v.backend().data(), to_mpfr(r));
    return out;
}

Real Real::from_string(std::string_view text, Round r, mpfr_prec_t prec)
{
    Real out(prec);
    const std::string s(text);
    char* end = nullptr;
    mpfr_strtofr(out.v_, s.c_str(), &end, 10, to_mpfr(r));
    if (s.empty() || end == nullptr || *end != '\0') {
        throw DomainError("Real::from_string: cannot parse '" + s + "'");
    }
    return out;
}

std::string Real::to_scientific(int digits, Round r) const
{
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> mant(mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, to_mpfr(r)),
                                                mpfr_free_str);
    if (!mant) {
        return "nan";
    }
    std::string m(mant.get());
    if (m == "@NaN@") {
        return "nan";
    }
    if (m.find('@') != std::string::npos) {
        return m[0] == '-' ? "-inf" : "inf";
    }
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    if (mpfr_zero_p(v_)) {
        return sign + "0";
    }
    // mantissa 0.d1d2... * 10^exp10  ->  d1.d2... * 10^(exp10-1)
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) {
        out += "." + m.substr(1);
    }
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

BigInt Real::to_int(Round r) const
{
    BigInt out;
    mpfr_get_z(out.backend().data(), v_, to_mpfr(r));
    return out;
}

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return a.precision() > b.precision() ? a.precision() : b.precision(); }

} // namespace

Real add(const Real& a, const Real& b, Round r)
{
    Real out(wider(a, b));
    mpfr_add(out.get(), a.get(), b.get(), to_mpfr(r));
    return out;
}

Real sub(const Real& a, const Real& b, Round r)
{
    Real out(wider(a, b));
    mpfr_sub(out.get(), a.get(), b.get(), to_mpfr(r));
    return out;
}

Real mul(const Real& a, const Real& b, Round r)
{
    Real out(wider(a, b));
    mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(r));
    return out;
}

Real div(const Real& a, const Real& b, Round r)
{
    Real out(wider(a, b));
    mpfr_div(out.get(), a.get(), b.get(), to_mpfr(r));
    return out;
}

Real pow(const Real& base, const Real& exponent, Round r)
{
    Real out(wider(base, exponent));
    mpfr_pow(out.get(), base.get(), exponent.get(), to_mpfr(r));
    return out;
}

Real sqrt(const Real& a, Round r)
{
    Real out(a.precision());
    mpfr_sqrt(out.get(), a.get(), to_mpfr(r));
    return out;
}

Real floor(const Real& a)
{
    Real out(a.precision());
    mpfr_floor(out.get(), a.get());
    return out;
}

Real root4(const Real& a, Round r)
{
    Real out(a.precision());
    mpfr_rootn_ui(out.get(), a.get(), 4, to_mpfr(r));
    return out;
}

Real log(const Real& a, Round r)
{
    Real out(a.precision());
    mpfr_log(out.get(), a.get(), to_mpfr(r));
    return out;
}

Real exp(const Real& a, Round r)
{
    Real out(a.precision());
    mpfr_exp(out.get(), a.get(), to_mpfr(r));
    return out;
}

Real mul_2si(const Real& a, long k, Round r)
{
    Real out(a.precision());
    mpfr_mul_2si(out.get(), a.get(), k, to_mpfr(r));
    return out;
}

Real pi(Round r, mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_const_pi(out.get(), to_mpfr(r));
    return out;
}

} // namespace sfroot::bounds
