#include "akg/gfp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace akg {

GF::GF(int64_t l) : l_(l) {
    if (l < 2 || l >= (int64_t(1) << 31)) throw std::invalid_argument("GF modulus out of range");
}

int64_t GF::red(int64_t a) const {
    a %= l_;
    return a < 0 ? a + l_ : a;
}

int64_t GF::inv(int64_t a) const {
    int64_t t = 0, nt = 1, r = l_, nr = red(a);
    if (nr == 0) throw std::domain_error("inverse of zero in GF(l)");
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return red(t);
}

void GF::trim(GfPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

GfPoly GF::from(const IntPoly& p) const {
    GfPoly r;
    mpz_class m = l_;
    for (const auto& c : p.coeffs()) {
        mpz_class t;
        mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        r.push_back(t.get_si());
    }
    trim(r);
    return r;
}

IntPoly GF::lift(const GfPoly& p) const {
    std::vector<mpz_class> c;
    for (auto a : p) c.emplace_back(static_cast<long>(a));
    return IntPoly(std::move(c));
}

GfPoly GF::add(const GfPoly& a, const GfPoly& b) const {
    GfPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % l_;
    trim(r);
    return r;
}

GfPoly GF::sub(const GfPoly& a, const GfPoly& b) const {
    GfPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = red(r[i] - b[i]);
    trim(r);
    return r;
}

GfPoly GF::mul(const GfPoly& a, const GfPoly& b) const {
    if (a.empty() || b.empty()) return {};
    GfPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % l_;
    }
    trim(r);
    return r;
}

GfPoly GF::scale(const GfPoly& a, int64_t s) const {
    GfPoly r;
    for (auto c : a) r.push_back(mul(c, red(s)));
    trim(r);
    return r;
}

void GF::divmod(const GfPoly& a, const GfPoly& b, GfPoly& q, GfPoly& r) const {
    if (b.empty()) throw std::domain_error("division by zero polynomial in GF(l)");
    r = a;
    q.clear();
    int db = deg(b);
    if (deg(a) < db) return;
    q.assign(static_cast<size_t>(deg(a) - db + 1), 0);
    int64_t li = inv(b.back());
    for (int k = deg(r); k >= db; --k) {
        int64_t c = mul(r[static_cast<size_t>(k)], li);
        q[static_cast<size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(k - db + j);
            r[idx] = red(r[idx] - c * b[static_cast<size_t>(j)]);
        }
    }
    trim(r);
    trim(q);
}

GfPoly GF::rem(const GfPoly& a, const GfPoly& b) const {
    GfPoly q, r;
    divmod(a, b, q, r);
    return r;
}

GfPoly GF::monic(const GfPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
}

GfPoly GF::gcd(const GfPoly& a, const GfPoly& b) const {
    GfPoly x = a, y = b;
    while (!y.empty()) {
        GfPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

GfPoly GF::ext_gcd(const GfPoly& a, const GfPoly& b, GfPoly& s, GfPoly& t) const {
    GfPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        GfPoly q, r;
        divmod(r0, r1, q, r);
        GfPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = s0;
        t = t0;
        return r0;
    }
    int64_t li = inv(r0.back());
    s = scale(s0, li);
    t = scale(t0, li);
    return scale(r0, li);
}

GfPoly GF::derivative(const GfPoly& a) const {
    GfPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], red(static_cast<int64_t>(i))));
    trim(r);
    return r;
}

GfPoly GF::powmod(const GfPoly& base, const mpz_class& e, const GfPoly& mod) const {
    GfPoly result{1};
    result = rem(result, mod);
    GfPoly b = rem(base, mod);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), mod);
    }
    return result;
}

int64_t GF::eval(const GfPoly& a, int64_t x) const {
    int64_t r = 0;
    x = red(x);
    for (size_t i = a.size(); i-- > 0;) r = (mul(r, x) + a[i]) % l_;
    return r;
}

namespace {

// Squarefree factorization of a monic polynomial over GF(l).
std::vector<GfFactor> gf_squarefree(const GF& F, const GfPoly& f) {
    std::vector<GfFactor> out;
    if (GF::deg(f) < 1) return out;
    GfPoly d = F.derivative(f);
    if (d.empty()) {
        // f is an l-th power: f(x) = g(x^l)
        GfPoly g;
        for (size_t i = 0; i < f.size(); i += static_cast<size_t>(F.l())) g.push_back(f[i]);
        for (auto& part : gf_squarefree(F, g)) {
            part.multiplicity *= static_cast<int>(F.l());
            out.push_back(std::move(part));
        }
        return out;
    }
    GfPoly c = F.gcd(f, d);
    GfPoly w, r;
    F.divmod(f, c, w, r);
    int i = 1;
    while (GF::deg(w) > 0) {
        GfPoly y = F.gcd(w, c);
        GfPoly z;
        F.divmod(w, y, z, r);
        if (GF::deg(z) > 0) out.push_back({F.monic(z), i});
        ++i;
        w = y;
        GfPoly c2;
        F.divmod(c, y, c2, r);
        c = c2;
    }
    if (GF::deg(c) > 0) {
        // remaining c is an l-th power
        GfPoly g;
        for (size_t k = 0; k < c.size(); k += static_cast<size_t>(F.l())) g.push_back(c[k]);
        for (auto& part : gf_squarefree(F, g)) {
            part.multiplicity *= static_cast<int>(F.l());
            out.push_back(std::move(part));
        }
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<GfPoly, int>> gf_ddf(const GF& F, GfPoly f) {
    std::vector<std::pair<GfPoly, int>> out;
    GfPoly x{0, 1};
    GfPoly h = F.rem(x, f);
    mpz_class l = F.l();
    for (int d = 1; 2 * d <= GF::deg(f); ++d) {
        h = F.powmod(h, l, f);
        GfPoly g = F.gcd(F.sub(h, x), f);
        if (GF::deg(g) > 0) {
            out.emplace_back(g, d);
            GfPoly q, r;
            F.divmod(f, g, q, r);
            f = q;
            h = F.rem(h, f);
        }
    }
    if (GF::deg(f) > 0) out.emplace_back(F.monic(f), GF::deg(f));
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) into irreducibles of degree d.
void gf_edf(const GF& F, const GfPoly& f, int d, std::mt19937_64& rng, std::vector<GfPoly>& out) {
    int n = GF::deg(f);
    if (n == d) {
        out.push_back(F.monic(f));
        return;
    }
    std::uniform_int_distribution<int64_t> coef(0, F.l() - 1);
    mpz_class ld;
    mpz_ui_pow_ui(ld.get_mpz_t(), static_cast<unsigned long>(F.l()), static_cast<unsigned long>(d));
    while (true) {
        GfPoly a;
        for (int i = 0; i < n; ++i) a.push_back(coef(rng));
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (GF::deg(a) < 1) continue;
        GfPoly g = F.gcd(a, f);
        if (GF::deg(g) > 0 && GF::deg(g) < n) {
            GfPoly q, r;
            F.divmod(f, g, q, r);
            gf_edf(F, g, d, rng, out);
            gf_edf(F, q, d, rng, out);
            return;
        }
        GfPoly b;
        if (F.l() == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            GfPoly t = F.rem(a, f);
            b = t;
            for (int i = 1; i < d; ++i) {
                t = F.rem(F.mul(t, t), f);
                b = F.add(b, t);
            }
        } else {
            b = F.sub(F.powmod(a, (ld - 1) / 2, f), GfPoly{1});
        }
        g = F.gcd(b, f);
        if (GF::deg(g) > 0 && GF::deg(g) < n) {
            GfPoly q, r;
            F.divmod(f, g, q, r);
            gf_edf(F, g, d, rng, out);
            gf_edf(F, q, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<GfFactor> gf_factor(const GF& F, const GfPoly& f) {
    if (f.empty()) throw std::invalid_argument("factorization of zero polynomial");
    std::vector<GfFactor> out;
    std::mt19937_64 rng(0x5eed + static_cast<uint64_t>(F.l()));
    for (const auto& sq : gf_squarefree(F, F.monic(f))) {
        for (const auto& [g, d] : gf_ddf(F, sq.factor)) {
            std::vector<GfPoly> parts;
            gf_edf(F, g, d, rng, parts);
            for (auto& p : parts) out.push_back({std::move(p), sq.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const GfFactor& a, const GfFactor& b) {
        if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
        if (a.factor != b.factor)
            return std::lexicographical_compare(a.factor.rbegin(), a.factor.rend(), b.factor.rbegin(), b.factor.rend());
        return a.multiplicity < b.multiplicity;
    });
    // merge equal factors coming from different squarefree parts
    std::vector<GfFactor> merged;
    for (auto& x : out) {
        if (!merged.empty() && merged.back().factor == x.factor)
            merged.back().multiplicity += x.multiplicity;
        else
            merged.push_back(std::move(x));
    }
    return merged;
}

std::vector<std::pair<int, int>> factor_degrees_mod_p(const IntPoly& p, long q) {
    if (!is_prime(q)) throw std::invalid_argument("modulus is not prime");
    if (p.degree() < 0 || mpz_divisible_ui_p(p.lc().get_mpz_t(), static_cast<unsigned long>(q)))
        throw std::invalid_argument("leading coefficient divisible by the prime");
    GF F(q);
    std::vector<std::pair<int, int>> out;
    for (const auto& f : gf_factor(F, F.from(p))) out.emplace_back(GF::deg(f.factor), f.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (comp[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) comp[static_cast<size_t>(j)] = true;
    }
    return out;
}

namespace {

IntPoly mod_coeffs(const IntPoly& p, const mpz_class& m) {
    std::vector<mpz_class> c;
    for (const auto& a : p.coeffs()) {
        mpz_class t;
        mpz_fdiv_r(t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        c.push_back(t);
    }
    return IntPoly(std::move(c));
}

}  // namespace

std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const GfPoly& g, const GfPoly& h, long l, int k) {
    GF F(l);
    if (!f.is_monic()) throw std::invalid_argument("hensel_lift needs monic f");
    if (F.mul(g, h) != F.from(f)) throw std::invalid_argument("hensel_lift: g h != f mod l");
    GfPoly s, t;
    GfPoly one = F.ext_gcd(g, h, s, t);
    if (one != GfPoly{1}) throw std::invalid_argument("hensel_lift: factors not coprime mod l");
    IntPoly G = F.lift(g), H = F.lift(h);
    mpz_class lj = l;  // current modulus l^j
    mpz_class ll = l;
    for (int j = 1; j < k; ++j) {
        // e = (f - G H) / l^j mod l
        IntPoly diff = f - G * H;
        std::vector<mpz_class> ec;
        for (const auto& c : diff.coeffs()) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lj.get_mpz_t());
            ec.push_back(q);
        }
        GfPoly e = F.from(IntPoly(std::move(ec)));
        // a H + b G = e mod l with deg a < deg g
        GfPoly a = F.rem(F.mul(t, e), g);
        GfPoly b, r;
        F.divmod(F.sub(e, F.mul(a, h)), g, b, r);
        if (!r.empty()) throw std::logic_error("hensel_lift: inexact correction");
        G += lj * F.lift(a);
        H += lj * F.lift(b);
        lj *= ll;
        G = mod_coeffs(G, lj);
        H = mod_coeffs(H, lj);
    }
    return {G, H};
}

}  // namespace akg
