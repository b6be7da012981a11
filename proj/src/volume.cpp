#include "akg/volume.hpp"

#include <stdexcept>

#include "akg/gfp.hpp"
#include "akg/numfield.hpp"
#include "akg/resultant.hpp"

namespace akg {

namespace {

// prod over distinct irreducible factors of (1 - q^(-2 deg))^(-1)
Real euler_factor(const std::vector<std::pair<int, int>>& degs, long q) {
    Real r(1L);
    Real qq(q);
    for (const auto& [d, m] : degs) {
        (void)m;
        r = r / (Real(1L) - Real(1L) / pow(qq, 2L * d));
    }
    return r;
}

}  // namespace

ZetaEstimate zeta2(const IntPoly& f, long prime_bound, long bits) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("zeta2 needs a monic polynomial");
    if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
    PrecisionScope ps(bits);
    mpz_class disc = discriminant(f);
    Field K = f.degree() > 1 ? NumberField::make(f, bits) : nullptr;
    ZetaEstimate z;
    z.prime_bound = prime_bound;
    Real value(1L);
    Real extra(1L);  // product of bracket widths (upper / lower)
    for (long q : primes_up_to(prime_bound)) {
        bool bad = K && mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(q)) && !dedekind_p_maximal(f, q);
        if (!bad) {
            value *= euler_factor(factor_degrees_mod_p(f, q), q);
            continue;
        }
        if (auto g = generator_prime_to(K, q)) {
            z.index_primes.push_back(q);
            value *= euler_factor(factor_degrees_mod_p(g->minpoly, q), q);
            continue;
        }
        // between inert and totally split
        z.bracketed_primes.push_back(q);
        int n = f.degree();
        Real lo = euler_factor({{n, 1}}, q);
        Real hi = pow(euler_factor({{1, 1}}, q), n);
        value *= lo;
        extra *= hi / lo;
    }
    Real n(static_cast<long>(f.degree()));
    Real B(prime_bound);
    Real tail = exp(n * (Real(1L) / B) / (Real(1L) - Real(1L) / (B * B))) - Real(1L);
    z.value = value;
    // value * extra * (1 + tail) bounds the true value from above
    z.tail_bound = value * (extra * (Real(1L) + tail) - Real(1L));
    return z;
}

Real quartic_covolume(const mpz_class& d, const Real& zeta2) {
    if (d >= 0) throw std::invalid_argument("quartic_covolume needs d < 0");
    Real ad{mpz_class(abs(d))};
    return ad * sqrt(ad) * zeta2 / (Real(128L) * pow(Real::pi(), 6));
}

Real cubic_covolume(const mpz_class& d, const Real& zeta2, long NP) {
    if (d >= 0) throw std::invalid_argument("cubic_covolume needs d < 0");
    if (NP < 2) throw std::invalid_argument("cubic_covolume needs NP >= 2");
    Real ad{mpz_class(abs(d))};
    return ad * sqrt(ad) * zeta2 * Real(NP - 1) / (Real(64L) * pow(Real::pi(), 4));
}

}  // namespace akg
