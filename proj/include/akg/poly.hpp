// Dense univariate and bivariate polynomials with exact coefficients.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "akg/real.hpp"

namespace akg {

class RatPoly;

// Integer polynomial, coefficients ascending by degree. The zero polynomial
// has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, int deg);
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const;
    const mpz_class& lc() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    mpz_class content() const;  // nonnegative gcd of coefficients
    IntPoly primitive() const;  // divided by content, positive leading coefficient
    IntPoly derivative() const;
    IntPoly compose(const IntPoly& inner) const;
    IntPoly reversed_sign_arg() const;  // p(-z)

    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;
    Complex eval(const Complex& z) const;
    Real eval(const Real& x) const;

    RatPoly to_rat() const;
    std::string str(const char* var = "z") const;
    std::vector<long> to_longs() const;  // throws if a coefficient does not fit

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const mpz_class& s, const IntPoly& a);
IntPoly pow(const IntPoly& a, int e);

// Pseudo-division: lc(b)^(deg a - deg b + 1) a = q b + r.
void pseudo_divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
// Exact division; throws std::domain_error if b does not divide a over Z.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);
IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive lc

// Rational polynomial.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::vector<mpq_class> coeffs);
    static RatPoly constant(const mpq_class& c);
    static RatPoly monomial(const mpq_class& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    const mpq_class& lc() const;

    RatPoly monic() const;
    RatPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    Complex eval(const Complex& z) const;
    // returns (integer polynomial, positive denominator) with this = poly / den
    std::pair<IntPoly, mpz_class> split_denominator() const;
    std::string str(const char* var = "z") const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const mpq_class& s, const RatPoly& a);
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly rem(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic
// s a + t b = g, g monic gcd
RatPoly ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

// Squarefree decomposition p = c * prod_k s_k^k, s_k primitive squarefree,
// pairwise coprime; entries with s_k = 1 are omitted.
struct SquarefreeFactor {
    IntPoly factor;
    int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

// Bivariate integer polynomial in (z, b): coeff(i, j) multiplies z^i b^j.
class BivarIntPoly {
public:
    BivarIntPoly() = default;
    // rows indexed by z-degree, each row ascending in b
    BivarIntPoly(std::vector<std::vector<mpz_class>> rows);
    static BivarIntPoly from_univariate(const IntPoly& p);

    int degree_z() const { return static_cast<int>(rows_.size()) - 1; }
    int degree_b() const;
    bool is_zero() const { return rows_.empty(); }
    const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }
    mpz_class coeff(int i, int j) const;
    bool is_b_free() const { return degree_b() <= 0; }

    // coefficient of z^i as a polynomial in b
    IntPoly z_coeff(int i) const;
    // p(z, b0) for rational/real/complex b0
    RatPoly at_b(const mpq_class& b) const;
    std::vector<Complex> at_b(const Complex& b) const;
    // p(z, z) and p(c, b) as univariate polynomials
    IntPoly diagonal() const;
    IntPoly at_z(const mpz_class& z) const;
    Complex eval(const Complex& z, const Complex& b) const;
    IntPoly to_univariate() const;  // requires b-free
    std::string str() const;

    bool operator==(const BivarIntPoly& o) const { return rows_ == o.rows_; }

private:
    void trim();
    std::vector<std::vector<mpz_class>> rows_;
};

BivarIntPoly operator*(const BivarIntPoly& a, const BivarIntPoly& b);
BivarIntPoly operator+(const BivarIntPoly& a, const BivarIntPoly& b);

}  // namespace akg
