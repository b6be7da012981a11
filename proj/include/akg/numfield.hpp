// Number fields Q[z]/(f) for monic irreducible f, and their elements.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "akg/poly.hpp"
#include "akg/roots.hpp"

namespace akg {

class NumberField;
using Field = std::shared_ptr<const NumberField>;

class NumberField {
public:
    // Checks that f is monic and irreducible.
    static Field make(const IntPoly& f, long precision_bits = 128);

    const IntPoly& poly() const { return f_; }
    int degree() const { return f_.degree(); }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    // real embeddings ascending, then non-real by (re, im)
    const std::vector<RootBox>& embeddings() const { return boxes_; }
    // isolating interval of the k-th real embedding (a fresh copy)
    RealRoot real_root(int k) const;
    long precision() const { return bits_; }

private:
    NumberField() = default;
    IntPoly f_;
    int r1_ = 0, r2_ = 0;
    long bits_ = 128;
    std::vector<RootBox> boxes_;
    std::vector<RealRoot> reals_;
};

class FieldElem {
public:
    FieldElem(Field K, RatPoly rep);
    static FieldElem gen(const Field& K);
    static FieldElem constant(const Field& K, const mpq_class& c);

    const Field& field() const { return K_; }
    const RatPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;
    bool operator==(const FieldElem& o) const { return rep_ == o.rep_; }

    // matrix of multiplication by this element on the power basis;
    // column j holds the coordinates of x * theta^j
    std::vector<std::vector<mpq_class>> mult_matrix() const;
    // determinant of the multiplication matrix (product over all embeddings)
    mpq_class norm() const;
    mpq_class trace() const;
    // characteristic polynomial of the multiplication map, monic
    RatPoly charpoly() const;
    RatPoly minpoly() const;
    bool is_integral() const;

    // numeric value under embedding k (index into field()->embeddings())
    Complex embed(size_t k, long bits = 128) const;
    // certified sign under the k-th real embedding
    int real_sign(int k) const;

    std::string str() const { return rep_.str("t"); }

private:
    Field K_;
    RatPoly rep_;
};

FieldElem operator+(const FieldElem& a, const mpq_class& c);
FieldElem operator*(const mpq_class& c, const FieldElem& a);

// Dedekind criterion: true iff Z[theta] is maximal at the prime q.
bool dedekind_p_maximal(const IntPoly& f, long q);

struct FieldDiscriminant {
    mpz_class disc;                      // discriminant of the maximal order
    mpz_class index;                     // [O_K : Z[theta]]
    std::vector<long> index_primes;      // primes dividing the index
    std::vector<long> round2_primes;     // primes where Dedekind alone was not enough
};

// Field discriminant via Dedekind's criterion with a Round 2 enlargement at
// primes where Z[theta] is not maximal. f monic irreducible.
FieldDiscriminant field_discriminant(const IntPoly& f);

// Basis of the l-maximal overorder of Z[theta] as elements of Q[z]/(f).
std::vector<RatPoly> local_maximal_basis(const IntPoly& f, long l);

// An integral generator of K whose index [O_K : Z[theta]] is prime to l,
// searched over small combinations of an l-maximal basis. Empty when l is a
// common index divisor (or the search bound is too small).
struct LocalGenerator {
    FieldElem theta;
    IntPoly minpoly;
};
std::optional<LocalGenerator> generator_prime_to(const Field& K, long l);

// Prime factorization of a nonzero integer by trial division.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n);

// Prime ideals above l read from the factorization of f mod l. Valid only
// when l does not divide the index.
struct PrimeIdeal {
    long l;
    int e;         // ramification index
    int f;         // residue degree
    std::vector<int64_t> g;  // monic irreducible factor of f mod l, ascending
    mpz_class norm() const;
};
std::vector<PrimeIdeal> primes_above(const IntPoly& f, long l);

// gcd in K[X] of two polynomials with coefficients in K (ascending), monic.
std::vector<FieldElem> poly_gcd_over(const Field& K, std::vector<FieldElem> a, std::vector<FieldElem> b);

}  // namespace akg
