// Parameter triples (gamma, beta, -4) for groups generated by an elliptic f of
// order n and an element g of order 2.
#pragma once

#include <vector>

#include "akg/poly.hpp"
#include "akg/roots.hpp"

namespace akg {

// Minimal polynomial of beta = -4 sin^2(pi/n) over Q, 3 <= n <= 7.
IntPoly beta_minpoly(int n);
// -4 sin^2(k pi / n)
Real beta_value(int n, long bits = 128, int k = 1);

struct BetaConjugate {
    int k;          // beta_k = -4 sin^2(k pi/n), gcd(k, n) = 1, 1 <= k <= n/2
    Real value;
    RealRoot root;  // isolating interval as a root of beta_minpoly(n)
    bool rational;
};

// Ordered by k, so beta_1 = beta is first and the values decrease.
std::vector<BetaConjugate> galois_conjugates_beta(int n, long bits = 128);

struct SymmetryOrbit {
    Complex canonical;
    std::vector<Complex> orbit;  // distinct members of {g, b - g, conj g, b - conj g}
};

// The representative with Re >= beta/2 and Im >= 0; ties go to the
// lexicographically largest (Re, Im).
SymmetryOrbit normalize_symmetry(const Complex& gamma, const Real& beta);

struct GroupParams {
    int n = 0;
    BivarIntPoly p;           // p(z, b); b-free for n = 3, 4, 6
    IntPoly resultant;        // Res_b(m, p), or p itself when b-free
    IntPoly q;                // minimal polynomial of gamma over Q
    std::vector<RootBox> q_boxes;
    size_t gamma_index = 0;
    Real beta;
    long bits = 128;

    const RootBox& gamma_box() const { return q_boxes[gamma_index]; }
    const Complex& gamma() const { return gamma_box().center; }
    bool gamma_real() const { return gamma_box().is_real; }
};

// Selects the root of p(z, beta) nearest to `approx`; rejects ambiguous or
// unmatched approximations and the excluded values gamma = 0, beta.
GroupParams make_params(int n, const BivarIntPoly& p, const Complex& approx, long bits = 128);

}  // namespace akg
