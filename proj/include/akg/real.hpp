// Arbitrary precision real and complex numbers on top of MPFR.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace akg {

// Precision (bits) used for values created without an explicit precision.
// Thread local, so worker threads can run at their own precision.
long working_precision();
void set_working_precision(long bits);

class PrecisionScope {
public:
    explicit PrecisionScope(long bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    long saved_;
};

// Binary operations produce a result at the larger operand precision.
class Real {
public:
    Real();
    Real(long v);
    Real(int v) : Real(static_cast<long>(v)) {}
    Real(double v);
    explicit Real(const mpz_class& v);
    explicit Real(const mpq_class& v);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real with_precision(long bits);
    static Real parse(const std::string& s);
    static Real pi();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // exact value of the binary float
    mpq_class to_mpq() const;
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    std::string str(int digits = 20) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

private:
    struct NoInit {};
    Real(NoInit, long prec);
    mpfr_t v_;

    friend Real operator+(const Real&, const Real&);
    friend Real operator-(const Real&, const Real&);
    friend Real operator*(const Real&, const Real&);
    friend Real operator/(const Real&, const Real&);
    friend Real sqrt(const Real&);
    friend Real abs(const Real&);
    friend Real exp(const Real&);
    friend Real log(const Real&);
    friend Real sin(const Real&);
    friend Real cos(const Real&);
    friend Real acosh(const Real&);
    friend Real atan2(const Real&, const Real&);
    friend Real pow(const Real&, long);
    friend Real ldexp(const Real&, long);
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real sqrt(const Real& a);
Real abs(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real acosh(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& a, long e);
Real ldexp(const Real& a, long e);

int cmp(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }

std::ostream& operator<<(std::ostream& os, const Real& r);

// Smallest dyadic rational >= sqrt(q); used where an upper bound must be certified.
mpq_class sqrt_upper(const mpq_class& q, long bits);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0L) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r), im(0L) {}
    Complex(double r, double i) : re(r), im(i) {}

    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return {-re, -im}; }
    std::string str(int digits = 12) const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Real abs(const Complex& z);
Complex sqrt(const Complex& z);  // principal branch
Complex exp_i(const Real& theta);
Complex pow(const Complex& z, long e);

}  // namespace akg
