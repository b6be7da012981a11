#include "akg/real.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace akg {

namespace {
thread_local long g_precision = 128;

long max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

long working_precision() { return g_precision; }

void set_working_precision(long bits) {
    if (bits < MPFR_PREC_MIN || bits > 1L << 20) throw std::invalid_argument("precision out of range");
    g_precision = bits;
}

PrecisionScope::PrecisionScope(long bits) : saved_(g_precision) { set_working_precision(bits); }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Real::Real(NoInit, long prec) { mpfr_init2(v_, prec); }

Real::Real() {
    mpfr_init2(v_, g_precision);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(long bits) {
    Real r(NoInit{}, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
}

Real Real::parse(const std::string& s) {
    Real r(NoInit{}, g_precision);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.v_))
        throw std::invalid_argument("bad real literal: " + s);
    return r;
}

Real Real::pi() {
    Real r(NoInit{}, g_precision);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

mpq_class Real::to_mpq() const {
    if (!is_finite()) throw std::domain_error("non-finite real");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class q(m);
    if (e > 0) {
        mpz_class s = 1;
        mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        q *= s;
    } else if (e < 0) {
        mpz_class s = 1;
        mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
        q /= s;
    }
    q.canonicalize();
    return q;
}

std::string Real::str(int digits) const {
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real Real::operator-() const {
    Real r(NoInit{}, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(Real::NoInit{}, max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(Real::NoInit{}, max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(Real::NoInit{}, max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(Real::NoInit{}, max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real exp(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real sin(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real cos(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real acosh(const Real& a) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_acosh(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(Real::NoInit{}, max_prec(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& a, long e) {
    Real r(Real::NoInit{}, a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& a, long e) {
    Real r(Real::NoInit{}, a.precision());
    if (e >= 0)
        mpfr_mul_2ui(r.v_, a.v_, static_cast<unsigned long>(e), MPFR_RNDN);
    else
        mpfr_div_2ui(r.v_, a.v_, static_cast<unsigned long>(-e), MPFR_RNDN);
    return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }

std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(); }

mpq_class sqrt_upper(const mpq_class& q, long bits) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_upper of negative");
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(t, t, MPFR_RNDU);
    Real r = Real::with_precision(bits);
    mpfr_set(r.raw(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r.to_mpq();
}

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

std::string Complex::str(int digits) const {
    std::string s = re.str(digits);
    if (im.sign() >= 0) s += "+";
    return s + im.str(digits) + "i";
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.norm2();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }

Real abs(const Complex& z) {
    Real r = Real::with_precision(std::max(z.re.precision(), z.im.precision()));
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Complex sqrt(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) return z;
    Real m = abs(z);
    Real two(2L);
    Real a = sqrt((m + abs(z.re)) / two);
    Real b = abs(z.im) / (two * a);
    if (z.re.sign() >= 0) return {a, z.im.sign() < 0 ? -b : b};
    return {b, z.im.sign() < 0 ? -a : a};
}

Complex exp_i(const Real& theta) { return {cos(theta), sin(theta)}; }

Complex pow(const Complex& z, long e) {
    if (e < 0) return Complex(1L) / pow(z, -e);
    Complex r(1L), b = z;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

}  // namespace akg
