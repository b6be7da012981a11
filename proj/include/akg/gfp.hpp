// Polynomials over prime fields GF(l) with l < 2^31, and Hensel lifting.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "akg/poly.hpp"

namespace akg {

// Ascending coefficients in [0, l), trimmed. Empty = zero polynomial.
using GfPoly = std::vector<int64_t>;

class GF {
public:
    explicit GF(int64_t l);
    int64_t l() const { return l_; }

    int64_t red(int64_t a) const;
    int64_t inv(int64_t a) const;
    int64_t mul(int64_t a, int64_t b) const { return (a * b) % l_; }

    GfPoly from(const IntPoly& p) const;
    IntPoly lift(const GfPoly& p) const;  // coefficients in [0, l)

    static int deg(const GfPoly& a) { return static_cast<int>(a.size()) - 1; }
    GfPoly add(const GfPoly& a, const GfPoly& b) const;
    GfPoly sub(const GfPoly& a, const GfPoly& b) const;
    GfPoly mul(const GfPoly& a, const GfPoly& b) const;
    GfPoly scale(const GfPoly& a, int64_t s) const;
    void divmod(const GfPoly& a, const GfPoly& b, GfPoly& q, GfPoly& r) const;
    GfPoly rem(const GfPoly& a, const GfPoly& b) const;
    GfPoly monic(const GfPoly& a) const;
    GfPoly gcd(const GfPoly& a, const GfPoly& b) const;  // monic
    // s a + t b = gcd(a, b), monic
    GfPoly ext_gcd(const GfPoly& a, const GfPoly& b, GfPoly& s, GfPoly& t) const;
    GfPoly derivative(const GfPoly& a) const;
    GfPoly powmod(const GfPoly& base, const mpz_class& e, const GfPoly& mod) const;
    int64_t eval(const GfPoly& a, int64_t x) const;

private:
    static void trim(GfPoly& a);
    int64_t l_;
};

struct GfFactor {
    GfPoly factor;  // monic irreducible
    int multiplicity;
};

// Complete factorization of a nonzero polynomial over GF(l) into monic
// irreducibles, sorted by (degree, coefficients). Deterministic.
std::vector<GfFactor> gf_factor(const GF& F, const GfPoly& f);

// (degree, multiplicity) of the irreducible factors of p mod q, sorted.
// Throws std::invalid_argument if q divides the leading coefficient.
std::vector<std::pair<int, int>> factor_degrees_mod_p(const IntPoly& p, long q);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);

// Lift f = g h mod l (f monic, g and h monic and coprime mod l) to a
// factorization modulo l^k. Returns (G, H) monic with coefficients in [0, l^k).
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const GfPoly& g, const GfPoly& h, long l, int k);

}  // namespace akg
