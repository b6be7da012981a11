#include "akg/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace akg {

namespace {

// Coefficient ring adapters. The PRS needs +, -, *, exact division and a
// zero test; Z and Z[z] both qualify.
mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return divexact(a, b); }
bool is_zero(const mpz_class& a) { return a == 0; }
bool is_zero(const IntPoly& a) { return a.is_zero(); }
mpz_class one(const mpz_class&) { return 1; }
IntPoly one(const IntPoly&) { return IntPoly::constant(1); }

template <class R>
using Poly = std::vector<R>;  // ascending, trimmed

template <class R>
void trim(Poly<R>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
int deg(const Poly<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
R power(const R& a, int e) {
    R r = one(a);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
    int db = deg(b);
    Poly<R> r = a;
    const R& l = b.back();
    int e = deg(a) - db + 1;
    for (int k = deg(a); k >= db; --k) {
        R t = r[static_cast<size_t>(k)];
        for (auto& c : r) c = c * l;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(k - db + j)] = r[static_cast<size_t>(k - db + j)] - t * b[static_cast<size_t>(j)];
        --e;
    }
    if (e > 0) {
        R s = power(l, e);
        for (auto& c : r) c = c * s;
    }
    trim(r);
    return r;
}

// Subresultant algorithm for Res(A, B), without content removal.
template <class R>
R subresultant(Poly<R> a, Poly<R> b, const R& unit) {
    R zero = unit - unit;
    if (a.empty() || b.empty()) return zero;
    bool negate = false;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = true;
    }
    if (deg(b) == 0) {
        R r = power(b[0], deg(a));
        return negate ? zero - r : r;
    }
    R g = unit, h = unit;
    while (true) {
        int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = !negate;
        Poly<R> r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return zero;
        R div = g * power(h, delta);
        for (auto& c : r) c = exact_div(c, div);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact_div(power(g, delta), power(h, delta - 1));
        }
        if (deg(b) == 0) {
            int da = deg(a);
            R res = exact_div(power(b[0], da), power(h, da - 1));
            return negate ? zero - res : res;
        }
    }
}

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    return subresultant<mpz_class>(a.coeffs(), b.coeffs(), mpz_class(1));
}

mpz_class discriminant(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (p.degree() == 1) return 1;
    mpz_class r = resultant(p, p.derivative());
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
    long n = p.degree();
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

IntPoly resultant_in_beta(const IntPoly& m, const BivarIntPoly& p) {
    if (m.degree() < 1 || !m.is_monic()) throw std::invalid_argument("resultant_in_beta needs monic m of degree >= 1");
    Poly<IntPoly> mb;
    for (const auto& c : m.coeffs()) mb.push_back(IntPoly::constant(c));
    // p as a polynomial in b with coefficients in Z[z]
    Poly<IntPoly> pb(static_cast<size_t>(std::max(p.degree_b(), 0)) + 1);
    for (int i = 0; i <= p.degree_z(); ++i)
        for (int j = 0; j <= p.degree_b(); ++j) {
            mpz_class c = p.coeff(i, j);
            if (c != 0) pb[static_cast<size_t>(j)] += IntPoly::monomial(c, i);
        }
    trim(pb);
    return subresultant<IntPoly>(mb, pb, IntPoly::constant(1));
}

}  // namespace akg
