// Sturm sequences, real root isolation and certified complex root boxes.
#pragma once

#include <stdexcept>
#include <vector>

#include "akg/poly.hpp"

namespace akg {

struct EndpointRootError : std::domain_error {
    mpq_class point;
    explicit EndpointRootError(const mpq_class& x)
        : std::domain_error("interval endpoint is a root"), point(x) {}
};

class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& squarefree);
    int variations(const mpq_class& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
    // roots in the open interval (lo, hi); endpoints must not be roots
    int count(const mpq_class& lo, const mpq_class& hi) const;
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }
    const IntPoly& poly() const { return seq_.front(); }

private:
    std::vector<IntPoly> seq_;
};

// Exact real root count of p on (lo, hi). p must be squarefree.
int sturm_count(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);

// The unique root of a squarefree integer polynomial in [lo, hi]. Either
// lo == hi (an exact rational root) or lo < hi with p(lo) p(hi) < 0.
class RealRoot {
public:
    RealRoot(IntPoly p, mpq_class lo, mpq_class hi);
    const IntPoly& poly() const { return p_; }
    const mpq_class& lo() const { return lo_; }
    const mpq_class& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    mpq_class width() const { return hi_ - lo_; }
    mpq_class midpoint() const { return (lo_ + hi_) / 2; }
    void bisect();
    void refine_to(const mpq_class& width);
    Real value(long bits) const;
    // sign of the root's position relative to x: -1 root < x, 0 equal, +1 root > x
    int compare(const mpq_class& x);

private:
    IntPoly p_;
    mpq_class lo_, hi_;
    int sign_lo_ = 0;
};

// Isolating intervals for all real roots of a squarefree polynomial, ascending.
std::vector<RealRoot> real_roots(const IntPoly& squarefree);

// Orders two real algebraic numbers, refining both; returns 0 only when
// they are provably equal (common factor vanishing in both intervals).
int compare_roots(RealRoot& a, RealRoot& b);

struct RootBox {
    Complex center;
    Real radius;
    int multiplicity = 1;
    bool is_real = false;
    mpq_class lo, hi;  // isolating interval when is_real
    IntPoly factor;    // squarefree factor of p with its root(s) in this box

    RealRoot real_root() const { return RealRoot(factor, lo, hi); }

    bool contains(const Complex& z, const Real& slack) const;
};

// Certified isolation of every root of p. Boxes are ordered: real roots
// ascending, then non-real roots by (re, im).
std::vector<RootBox> isolate_roots(const IntPoly& p, long precision_bits = 128);

// Box nearest to an approximate value; throws if no box is within `tol`
// or if a second box is within twice the distance of the nearest one.
size_t match_root(const std::vector<RootBox>& boxes, const Complex& approx, double tol = 5e-3);

// Numerical roots by Aberth-Ehrlich iteration, coefficients ascending.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, long bits);

// Inclusion radius n |p(z_i)| / |lc prod (z_i - z_j)| for each approximation,
// evaluated at working precision (not certified).
std::vector<Real> inclusion_radii(const std::vector<Complex>& coeffs, const std::vector<Complex>& z);

}  // namespace akg
