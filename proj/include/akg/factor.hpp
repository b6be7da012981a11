// Irreducibility decisions for small-degree integer polynomials.
#pragma once

#include <vector>

#include "akg/poly.hpp"

namespace akg {

struct MinimalityResult {
    bool irreducible = false;
    // irreducible factors with repetition, sorted by (degree, coefficients);
    // a single entry equal to the input when irreducible
    std::vector<IntPoly> factors;
    long witness_prime = 0;  // prime q with p irreducible mod q, 0 if none
};

// Requires p monic with 1 <= deg p <= 8.
MinimalityResult minimality_check(const IntPoly& p);

// Irreducible factor of p vanishing at the root nearest `approx`.
IntPoly minimal_factor_at(const IntPoly& p, const Complex& approx);

}  // namespace akg
