// Resultants and discriminants via the subresultant PRS.
#pragma once

#include "akg/poly.hpp"

namespace akg {

mpz_class resultant(const IntPoly& a, const IntPoly& b);

// (-1)^(n(n-1)/2) Res(p, p') / lc(p)
mpz_class discriminant(const IntPoly& p);

// prod_i p(z, b_i) over the roots b_i of the monic polynomial m.
IntPoly resultant_in_beta(const IntPoly& m, const BivarIntPoly& p);

}  // namespace akg
