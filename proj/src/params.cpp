#include "akg/params.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "akg/factor.hpp"
#include "akg/resultant.hpp"

namespace akg {

IntPoly beta_minpoly(int n) {
    switch (n) {
        case 3: return IntPoly{3, 1};
        case 4: return IntPoly{2, 1};
        case 5: return IntPoly{5, 5, 1};
        case 6: return IntPoly{1, 1};
        case 7: return IntPoly{7, 14, 7, 1};
        default: throw std::invalid_argument("elliptic order must be in 3..7, got " + std::to_string(n));
    }
}

Real beta_value(int n, long bits, int k) {
    PrecisionScope ps(bits);
    Real s = sin(Real::pi() * Real(static_cast<long>(k)) / Real(static_cast<long>(n)));
    return Real(-4L) * s * s;
}

std::vector<BetaConjugate> galois_conjugates_beta(int n, long bits) {
    IntPoly m = beta_minpoly(n);
    auto roots = real_roots(m);
    std::vector<BetaConjugate> out;
    for (int k = 1; 2 * k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        Real v = beta_value(n, bits, k);
        mpq_class x = v.to_mpq();
        int hit = -1;
        for (size_t r = 0; r < roots.size(); ++r) {
            auto rr = roots[r];
            rr.refine_to(mpq_class(1, 1000000));
            if (rr.lo() - mpq_class(1, 1000000) <= x && x <= rr.hi() + mpq_class(1, 1000000)) hit = static_cast<int>(r);
        }
        if (hit < 0) throw std::logic_error("beta conjugate not found among roots of its minimal polynomial");
        out.push_back({k, v, roots[static_cast<size_t>(hit)], m.degree() == 1});
    }
    if (static_cast<int>(out.size()) != m.degree()) throw std::logic_error("beta conjugate count mismatch");
    return out;
}

SymmetryOrbit normalize_symmetry(const Complex& gamma, const Real& beta) {
    std::vector<Complex> cand{gamma, Complex(beta) - gamma, gamma.conj(), Complex(beta) - gamma.conj()};
    long prec = std::max(gamma.re.precision(), beta.precision());
    Real eps = ldexp(Real(1L), -(prec - 16)) * (Real(1L) + abs(gamma));
    auto same = [&](const Real& a, const Real& b) { return abs(a - b) <= eps; };
    SymmetryOrbit res;
    for (const auto& c : cand) {
        bool dup = false;
        for (const auto& o : res.orbit) dup = dup || (same(o.re, c.re) && same(o.im, c.im));
        if (!dup) res.orbit.push_back(c);
    }
    res.canonical = res.orbit.front();
    for (const auto& c : res.orbit) {
        const auto& b = res.canonical;
        if (same(c.re, b.re) ? (!same(c.im, b.im) && c.im > b.im) : c.re > b.re) res.canonical = c;
    }
    return res;
}

GroupParams make_params(int n, const BivarIntPoly& p, const Complex& approx, long bits) {
    GroupParams g;
    g.n = n;
    g.p = p;
    g.bits = bits;
    g.beta = beta_value(n, bits + 32);
    IntPoly m = beta_minpoly(n);
    if (p.is_b_free()) {
        g.resultant = p.to_univariate();
    } else {
        g.resultant = resultant_in_beta(m, p);
    }
    if (!g.resultant.is_monic()) throw std::invalid_argument("p must be monic in z");
    g.q = minimal_factor_at(g.resultant, approx);
    g.q_boxes = isolate_roots(g.q, bits);
    g.gamma_index = match_root(g.q_boxes, approx);
    const RootBox& b = g.gamma_box();
    PrecisionScope ps(bits);
    // gamma must be a root of the designated specialization p(z, beta_1)
    Real resid = abs(p.eval(b.center, Complex(g.beta)));
    Real other(1L);
    for (const auto& c : galois_conjugates_beta(n, bits))
        if (c.k != 1) {
            Real r = abs(p.eval(b.center, Complex(c.value)));
            if (r < other) other = r;
        }
    if (resid > Real(1e-20) && !(resid < other)) throw std::invalid_argument("gamma is not a root of p(z, beta) for the designated beta");
    if (g.q == IntPoly{0, 1}) throw std::invalid_argument("gamma = 0 gives an elementary group");
    if (abs(b.center - Complex(g.beta)) <= b.radius + ldexp(Real(1L), -(bits / 2)))
        throw std::invalid_argument("gamma = beta gives an elementary group");
    return g;
}

}  // namespace akg
