#include "akg/factor.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

#include "akg/gfp.hpp"
#include "akg/resultant.hpp"
#include "akg/roots.hpp"

namespace akg {

namespace {

using DegreeSet = std::bitset<16>;

DegreeSet subset_sums(const std::vector<std::pair<int, int>>& degs) {
    DegreeSet s;
    s.set(0);
    for (const auto& [d, m] : degs)
        for (int k = 0; k < m; ++k) s |= (s << static_cast<size_t>(d));
    return s;
}

// Candidate factor from a set of root approximations, if its coefficients
// round to integers.
bool round_product(const std::vector<Complex>& roots, IntPoly& out) {
    PrecisionScope ps(256);
    std::vector<Complex> c{Complex(1L)};
    for (const auto& r : roots) {
        std::vector<Complex> nc(c.size() + 1, Complex(0L));
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= c[i] * r;
        }
        c = std::move(nc);
    }
    std::vector<mpz_class> z;
    for (const auto& a : c) {
        if (abs(a.im).to_double() > 1e-8) return false;
        double v = a.re.to_double();
        mpq_class q = a.re.to_mpq();
        mpz_class n;
        mpz_class num = q.get_num() * 2 + q.get_den();
        mpz_class den = q.get_den() * 2;
        mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (std::abs(v - n.get_d()) > 1e-8 * (1 + std::abs(v))) return false;
        z.push_back(n);
    }
    out = IntPoly(std::move(z));
    return true;
}

void factor_squarefree(const IntPoly& s, std::vector<IntPoly>& out, long& witness) {
    int d = s.degree();
    if (d <= 1) {
        out.push_back(s);
        return;
    }
    mpz_class disc = discriminant(s);
    DegreeSet allowed;
    allowed.set();
    for (long q : primes_up_to(100)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(q))) continue;
        if (mpz_divisible_ui_p(s.lc().get_mpz_t(), static_cast<unsigned long>(q))) continue;
        auto degs = factor_degrees_mod_p(s, q);
        if (degs.size() == 1 && degs[0].second == 1) {
            if (witness == 0) witness = q;
            out.push_back(s);
            return;
        }
        allowed &= subset_sums(degs);
    }
    bool any = false;
    for (int k = 1; k <= d / 2; ++k) any = any || allowed.test(static_cast<size_t>(k));
    if (!any) {
        out.push_back(s);
        return;
    }
    // group roots into real singletons and conjugate pairs
    auto boxes = isolate_roots(s, 192);
    std::vector<std::vector<Complex>> units;
    for (const auto& b : boxes) {
        if (b.is_real)
            units.push_back({b.center});
        else if (b.center.im.sign() > 0)
            units.push_back({b.center, b.center.conj()});
    }
    size_t nu = units.size();
    if (nu > 16) throw std::logic_error("too many roots for subset search");
    std::vector<std::pair<int, unsigned>> masks;
    for (unsigned mask = 1; mask + 1 < (1u << nu); ++mask) {
        int k = 0;
        for (size_t i = 0; i < nu; ++i)
            if (mask & (1u << i)) k += static_cast<int>(units[i].size());
        if (2 * k <= d && allowed.test(static_cast<size_t>(k))) masks.emplace_back(k, mask);
    }
    std::sort(masks.begin(), masks.end());
    for (const auto& [k, mask] : masks) {
        std::vector<Complex> rs;
        for (size_t i = 0; i < nu; ++i)
            if (mask & (1u << i)) rs.insert(rs.end(), units[i].begin(), units[i].end());
        IntPoly g;
        if (!round_product(rs, g) || !divides(g, s)) continue;
        factor_squarefree(g, out, witness);
        factor_squarefree(divexact(s, g), out, witness);
        return;
    }
    out.push_back(s);
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace

MinimalityResult minimality_check(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("minimality_check needs degree >= 1");
    if (p.degree() > 8) throw std::invalid_argument("minimality_check supports degree <= 8");
    if (!p.is_monic()) throw std::invalid_argument("minimality_check needs a monic polynomial");
    MinimalityResult res;
    for (const auto& part : squarefree_decomposition(p)) {
        std::vector<IntPoly> irr;
        factor_squarefree(part.factor, irr, res.witness_prime);
        for (int m = 0; m < part.multiplicity; ++m)
            for (const auto& f : irr) res.factors.push_back(f.primitive());
    }
    std::sort(res.factors.begin(), res.factors.end(), poly_less);
    res.irreducible = res.factors.size() == 1;
    if (!res.irreducible) res.witness_prime = 0;
    return res;
}

IntPoly minimal_factor_at(const IntPoly& p, const Complex& approx) {
    auto mc = minimality_check(p);
    IntPoly best;
    double bestd = 1e300;
    for (const auto& f : mc.factors) {
        for (const auto& b : isolate_roots(f, 128)) {
            double dd = abs(b.center - approx).to_double();
            if (dd < bestd) {
                bestd = dd;
                best = f;
            }
        }
    }
    return best;
}

}  // namespace akg
