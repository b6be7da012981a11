// Dedekind zeta values at 2 and the co-volume formulas for the minimal
// arithmetic groups over cubic and quartic fields with one complex place.
#pragma once

#include <vector>

#include "akg/poly.hpp"
#include "akg/real.hpp"

namespace akg {

struct ZetaEstimate {
    Real value;       // Euler product over primes <= prime_bound
    long prime_bound = 0;
    Real tail_bound;  // zeta_K(2) lies in [value, value + tail_bound]
    std::vector<long> index_primes;      // split pattern read from another generator
    std::vector<long> bracketed_primes;  // pattern unknown, factor bracketed
};

// f monic irreducible defining K.
ZetaEstimate zeta2(const IntPoly& f, long prime_bound, long bits = 128);

// |d|^{3/2} zeta / (2^7 pi^6)
Real quartic_covolume(const mpz_class& d, const Real& zeta2);
// |d|^{3/2} zeta (NP - 1) / (2^6 pi^4)
Real cubic_covolume(const mpz_class& d, const Real& zeta2, long NP);

}  // namespace akg
