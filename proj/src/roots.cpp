#include "akg/roots.hpp"

#include <algorithm>
#include <cmath>

namespace akg {

namespace {

int sgn_q(const mpq_class& x) { return sgn(x); }

IntPoly positive_primitive(const RatPoly& r) {
    auto [p, d] = r.split_denominator();
    mpz_class c = p.content();
    if (c == 0) return p;
    std::vector<mpz_class> v = p.coeffs();
    for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

mpz_class cauchy_bound(const IntPoly& p) {
    // 1 + max |a_i / a_n|, rounded up
    mpq_class m = 0;
    mpq_class l = abs(p.lc());
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class t = mpq_class(abs(p.coeff(i))) / l;
        if (t > m) m = t;
    }
    mpz_class b;
    mpz_cdiv_q(b.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
    return b + 1;
}

// complex rational number for exact certification
struct CQ {
    mpq_class re, im;
};

CQ mul(const CQ& a, const CQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
mpq_class norm2(const CQ& a) { return a.re * a.re + a.im * a.im; }

CQ eval_exact(const IntPoly& p, const CQ& z) {
    CQ r{0, 0};
    for (int i = p.degree(); i >= 0; --i) {
        r = mul(r, z);
        r.re += p.coeff(i);
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& p) {
    if (p.degree() < 0) throw std::invalid_argument("Sturm sequence of zero polynomial");
    seq_.push_back(p);
    if (p.degree() == 0) return;
    seq_.push_back(p.derivative());
    while (true) {
        RatPoly r = rem(seq_[seq_.size() - 2].to_rat(), seq_.back().to_rat());
        if (r.is_zero()) break;
        seq_.push_back(positive_primitive(-r));
    }
    if (seq_.back().degree() > 0) throw std::invalid_argument("Sturm sequence needs a squarefree polynomial");
}

int SturmSequence::variations(const mpq_class& x) const {
    int v = 0, last = 0;
    for (const auto& s : seq_) {
        int g = sgn_q(s.eval(x));
        if (g == 0) continue;
        if (last != 0 && g != last) ++v;
        last = g;
    }
    return v;
}

int SturmSequence::variations_at_pos_inf() const {
    int v = 0, last = 0;
    for (const auto& s : seq_) {
        int g = sgn(s.lc());
        if (last != 0 && g != last) ++v;
        last = g;
    }
    return v;
}

int SturmSequence::variations_at_neg_inf() const {
    int v = 0, last = 0;
    for (const auto& s : seq_) {
        int g = sgn(s.lc()) * (s.degree() % 2 == 0 ? 1 : -1);
        if (last != 0 && g != last) ++v;
        last = g;
    }
    return v;
}

int SturmSequence::count(const mpq_class& lo, const mpq_class& hi) const {
    if (poly().eval(lo) == 0) throw EndpointRootError(lo);
    if (poly().eval(hi) == 0) throw EndpointRootError(hi);
    if (lo >= hi) return 0;
    return variations(lo) - variations(hi);
}

int sturm_count(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
    return SturmSequence(p).count(lo, hi);
}

// ---------------------------------------------------------------- RealRoot

RealRoot::RealRoot(IntPoly p, mpq_class lo, mpq_class hi) : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ != hi_) {
        sign_lo_ = sgn(p_.eval(lo_));
        if (sign_lo_ == 0 || sign_lo_ * sgn(p_.eval(hi_)) >= 0)
            throw std::invalid_argument("RealRoot interval does not bracket a simple root");
    } else if (p_.eval(lo_) != 0) {
        throw std::invalid_argument("RealRoot exact point is not a root");
    }
}

void RealRoot::bisect() {
    if (is_exact()) return;
    mpq_class m = midpoint();
    int s = sgn(p_.eval(m));
    if (s == 0) {
        lo_ = hi_ = m;
    } else if (s == sign_lo_) {
        lo_ = m;
    } else {
        hi_ = m;
    }
}

void RealRoot::refine_to(const mpq_class& width) {
    while (!is_exact() && hi_ - lo_ > width) bisect();
}

Real RealRoot::value(long bits) const {
    PrecisionScope ps(bits);
    if (is_exact()) return Real(lo_);
    RealRoot tmp = *this;
    mpq_class w = 1;
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits + 4));
    w /= den;
    tmp.refine_to(w * (abs(tmp.lo_) + abs(tmp.hi_) + 1));
    return Real(tmp.midpoint());
}

int RealRoot::compare(const mpq_class& x) {
    while (true) {
        if (is_exact()) return sgn(lo_ - x);
        if (x <= lo_) {
            if (x == lo_) return 1;  // lo is not a root, root lies strictly above
            return 1;
        }
        if (x >= hi_) return -1;
        int s = sgn(p_.eval(x));
        if (s == 0) return 0;
        if (s == sign_lo_)
            lo_ = x;
        else
            hi_ = x;
    }
}

std::vector<RealRoot> real_roots(const IntPoly& p) {
    std::vector<RealRoot> out;
    if (p.degree() < 1) return out;
    SturmSequence ss(p);
    mpq_class b(cauchy_bound(p));
    struct Work {
        mpq_class lo, hi;
        int n;
    };
    std::vector<Work> stack{{-b, b, ss.count(-b, b)}};
    std::vector<std::pair<mpq_class, mpq_class>> found;
    while (!stack.empty()) {
        Work w = stack.back();
        stack.pop_back();
        if (w.n == 0) continue;
        if (w.n == 1 && sgn(p.eval(w.lo)) * sgn(p.eval(w.hi)) < 0) {
            found.emplace_back(w.lo, w.hi);
            continue;
        }
        mpq_class m = (w.lo + w.hi) / 2;
        if (p.eval(m) == 0) {
            found.emplace_back(m, m);
            // split around the exact root with non-root endpoints
            mpq_class d = (w.hi - w.lo) / 4;
            mpq_class a = m - d, c = m + d;
            for (int k = 0; p.eval(a) == 0 || p.eval(c) == 0 || ss.count(a, c) != 1; ++k) {
                d /= 3;
                a = m - d;
                c = m + d;
                if (k > 200) throw std::runtime_error("root separation failed");
            }
            stack.push_back({w.lo, a, ss.count(w.lo, a)});
            stack.push_back({c, w.hi, ss.count(c, w.hi)});
            continue;
        }
        stack.push_back({w.lo, m, ss.count(w.lo, m)});
        stack.push_back({m, w.hi, ss.count(m, w.hi)});
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [lo, hi] : found) out.emplace_back(p, lo, hi);
    return out;
}

int compare_roots(RealRoot& a, RealRoot& b) {
    for (int iter = 0; iter < 64; ++iter) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        if (a.is_exact() && b.is_exact()) return sgn(a.lo() - b.lo());
        a.bisect();
        b.bisect();
    }
    IntPoly g = gcd(a.poly(), b.poly());
    if (g.degree() >= 1) {
        auto groots = real_roots(g);
        auto locate = [&](RealRoot& r) -> int {
            for (int iter = 0; iter < 4096; ++iter) {
                int hit = -1, hits = 0;
                for (size_t k = 0; k < groots.size(); ++k)
                    if (!(groots[k].hi() < r.lo() || r.hi() < groots[k].lo())) {
                        hit = static_cast<int>(k);
                        ++hits;
                    }
                if (hits == 0) return -1;
                if (hits == 1) {
                    // r is a root of g iff g changes sign on r's interval or vanishes at it
                    if (r.is_exact()) return g.eval(r.lo()) == 0 ? hit : -1;
                    int s1 = sgn(g.eval(r.lo())), s2 = sgn(g.eval(r.hi()));
                    if (s1 * s2 < 0) return hit;
                    if (s1 == 0 || s2 == 0) {
                        r.bisect();
                        continue;
                    }
                    return -1;
                }
                r.bisect();
                for (auto& gr : groots) gr.bisect();
            }
            return -1;
        };
        int ia = locate(a), ib = locate(b);
        if (ia >= 0 && ia == ib) return 0;
    }
    while (true) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        a.bisect();
        b.bisect();
    }
}

// ---------------------------------------------------------------- complex roots

bool RootBox::contains(const Complex& z, const Real& slack) const {
    return abs(z - center) <= radius + slack;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, long bits) {
    PrecisionScope ps(bits);
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    Complex lc = coeffs.back();
    if (n == 1) return {-(coeffs[0] / lc)};
    std::vector<Complex> dc(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) dc[static_cast<size_t>(i - 1)] = coeffs[static_cast<size_t>(i)] * Real(static_cast<long>(i));
    auto horner = [](const std::vector<Complex>& c, const Complex& z) {
        Complex r(0L);
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * z + c[static_cast<size_t>(i)];
        return r;
    };
    // starting points on a circle around the centroid
    Complex centroid = -(coeffs[static_cast<size_t>(n - 1)] / (lc * Real(static_cast<long>(n))));
    double rad = 0;
    for (int i = 0; i < n; ++i) {
        double a = abs(coeffs[static_cast<size_t>(i)] / lc).to_double();
        if (a > 0) rad = std::max(rad, std::pow(a, 1.0 / (n - i)));
    }
    rad = std::max(rad, 1e-3);
    std::vector<Complex> z(static_cast<size_t>(n));
    Real twopi = Real::pi() * Real(2L);
    for (int k = 0; k < n; ++k) {
        Real ang = twopi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) + Real(0.4);
        z[static_cast<size_t>(k)] = centroid + exp_i(ang) * Real(rad);
    }
    Real tol = ldexp(Real(1L), -(bits - 8));
    for (int iter = 0; iter < 4000; ++iter) {
        Real maxstep(0L);
        for (int i = 0; i < n; ++i) {
            Complex& zi = z[static_cast<size_t>(i)];
            Complex pv = horner(coeffs, zi);
            if (pv.re.is_zero() && pv.im.is_zero()) continue;
            Complex ratio = pv / horner(dc, zi);
            Complex s(0L);
            for (int j = 0; j < n; ++j)
                if (j != i) s += Complex(1L) / (zi - z[static_cast<size_t>(j)]);
            Complex step = ratio / (Complex(1L) - ratio * s);
            zi -= step;
            Real sz = abs(step) / (abs(zi) + Real(1L));
            if (sz > maxstep) maxstep = sz;
        }
        if (maxstep < tol) break;
    }
    return z;
}

std::vector<Real> inclusion_radii(const std::vector<Complex>& coeffs, const std::vector<Complex>& z) {
    size_t n = z.size();
    std::vector<Real> out;
    for (size_t i = 0; i < n; ++i) {
        Complex pv(0L);
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) pv = pv * z[i] + coeffs[static_cast<size_t>(k)];
        Complex d = coeffs.back();
        for (size_t j = 0; j < n; ++j)
            if (j != i) d = d * (z[i] - z[j]);
        out.push_back(Real(static_cast<long>(n)) * abs(pv) / abs(d));
    }
    return out;
}

namespace {

// Certified boxes for a squarefree polynomial. Returns false when the
// approximations are not good enough at this precision.
bool isolate_squarefree(const IntPoly& s, long bits, long work_bits, int mult, std::vector<RootBox>& out) {
    int d = s.degree();
    std::vector<RealRoot> reals = real_roots(s);
    mpq_class width = 1;
    {
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        width /= den;
    }
    for (auto& r : reals) r.refine_to(width);
    int nreal = static_cast<int>(reals.size());
    int npairs = (d - nreal) / 2;

    std::vector<CQ> centers;
    for (auto& r : reals) centers.push_back({r.midpoint(), 0});
    std::vector<Complex> upper;
    if (npairs > 0) {
        std::vector<Complex> c;
        {
            PrecisionScope ps(work_bits);
            for (const auto& a : s.coeffs()) c.emplace_back(Real(a));
        }
        std::vector<Complex> z = aberth_roots(c, work_bits);
        std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) { return a.im > b.im; });
        for (int k = 0; k < npairs; ++k) {
            if (z[static_cast<size_t>(k)].im.sign() <= 0) return false;
            upper.push_back(z[static_cast<size_t>(k)]);
        }
        for (const auto& u : upper) centers.push_back({u.re.to_mpq(), u.im.to_mpq()});
        for (const auto& u : upper) centers.push_back({u.re.to_mpq(), -u.im.to_mpq()});
    }
    if (static_cast<int>(centers.size()) != d) return false;

    // radii r_i = d |s(z_i)| / |lc prod (z_i - z_j)|, bounded above exactly
    std::vector<mpq_class> R(centers.size());
    for (size_t i = 0; i < centers.size(); ++i) {
        CQ den{s.lc(), 0};
        for (size_t j = 0; j < centers.size(); ++j)
            if (j != i) den = mul(den, {centers[i].re - centers[j].re, centers[i].im - centers[j].im});
        mpq_class dn = norm2(den);
        if (dn == 0) return false;
        mpq_class r2 = mpq_class(d * d) * norm2(eval_exact(s, centers[i])) / dn;
        R[i] = sqrt_upper(r2, 64);
    }
    for (size_t i = 0; i < centers.size(); ++i)
        for (size_t j = i + 1; j < centers.size(); ++j) {
            mpq_class dre = centers[i].re - centers[j].re, dim = centers[i].im - centers[j].im;
            mpq_class sr = R[i] + R[j];
            if (dre * dre + dim * dim <= sr * sr) return false;
        }
    mpq_class maxrad = 1;
    {
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits / 2));
        maxrad /= den;
    }
    std::vector<RootBox> boxes;
    PrecisionScope ps(work_bits);
    for (size_t i = 0; i < reals.size(); ++i) {
        RootBox b;
        b.center = Complex(Real(reals[i].midpoint()));
        b.radius = Real(reals[i].width() / 2);
        b.multiplicity = mult;
        b.is_real = true;
        b.lo = reals[i].lo();
        b.hi = reals[i].hi();
        b.factor = s;
        boxes.push_back(std::move(b));
    }
    for (size_t i = reals.size(); i < centers.size(); ++i) {
        mpq_class im = abs(centers[i].im);
        if (im <= R[i] || R[i] > maxrad) return false;
        RootBox b;
        b.center = Complex(Real(centers[i].re), Real(centers[i].im));
        b.radius = Real(R[i]);
        b.multiplicity = mult;
        b.factor = s;
        boxes.push_back(std::move(b));
    }
    for (auto& b : boxes) out.push_back(std::move(b));
    return true;
}

}  // namespace

std::vector<RootBox> isolate_roots(const IntPoly& p, long precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots of zero polynomial");
    std::vector<RootBox> all;
    if (p.degree() == 0) return all;
    auto parts = squarefree_decomposition(p);
    for (long work = precision_bits + 32;; work *= 2) {
        if (work > 1L << 16) throw std::runtime_error("root certification did not converge");
        all.clear();
        bool ok = true;
        for (const auto& part : parts) {
            if (!isolate_squarefree(part.factor, precision_bits, work, part.multiplicity, all)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // boxes of different squarefree factors must not overlap
        for (size_t i = 0; i < all.size() && ok; ++i)
            for (size_t j = i + 1; j < all.size() && ok; ++j)
                if (abs(all[i].center - all[j].center) <= all[i].radius + all[j].radius) ok = false;
        if (ok) break;
    }
    std::stable_sort(all.begin(), all.end(), [](const RootBox& a, const RootBox& b) {
        if (a.is_real != b.is_real) return a.is_real;
        if (a.is_real) return a.lo < b.lo;
        int c = cmp(a.center.re, b.center.re);
        if (c != 0) return c < 0;
        return a.center.im < b.center.im;
    });
    return all;
}

size_t match_root(const std::vector<RootBox>& boxes, const Complex& approx, double tol) {
    if (boxes.empty()) throw std::invalid_argument("no roots to match");
    std::vector<std::pair<double, size_t>> d;
    for (size_t i = 0; i < boxes.size(); ++i) d.emplace_back(abs(boxes[i].center - approx).to_double(), i);
    std::sort(d.begin(), d.end());
    if (d[0].first > tol) throw std::invalid_argument("approximation matches no root: " + approx.str(8));
    if (d.size() > 1 && d[1].first <= 2 * d[0].first + 1e-12)
        throw std::invalid_argument("approximation is ambiguous between roots: " + approx.str(8));
    return d[0].second;
}

}  // namespace akg
