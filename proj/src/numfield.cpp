#include "akg/numfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "akg/factor.hpp"
#include "akg/gfp.hpp"
#include "akg/resultant.hpp"

namespace akg {

using QMat = std::vector<std::vector<mpq_class>>;
using ZMat = std::vector<std::vector<mpz_class>>;

// ---------------------------------------------------------------- field

Field NumberField::make(const IntPoly& f, long precision_bits) {
    if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("number field needs a monic polynomial");
    if (!minimality_check(f).irreducible) throw std::invalid_argument("defining polynomial is reducible: " + f.str());
    std::shared_ptr<NumberField> K(new NumberField());
    K->f_ = f;
    K->bits_ = precision_bits;
    K->boxes_ = isolate_roots(f, precision_bits);
    K->reals_ = real_roots(f);
    K->r1_ = static_cast<int>(K->reals_.size());
    K->r2_ = (f.degree() - K->r1_) / 2;
    return K;
}

RealRoot NumberField::real_root(int k) const {
    if (k < 0 || k >= r1_) throw std::out_of_range("real embedding index");
    return reals_[static_cast<size_t>(k)];
}

// ---------------------------------------------------------------- elements

FieldElem::FieldElem(Field K, RatPoly rep) : K_(std::move(K)), rep_(rem(rep, K_->poly().to_rat())) {}

FieldElem FieldElem::gen(const Field& K) {
    return FieldElem(K, RatPoly::monomial(1, 1));
}

FieldElem FieldElem::constant(const Field& K, const mpq_class& c) {
    return FieldElem(K, RatPoly::constant(c));
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return FieldElem(K_, rep_ + o.rep_); }
FieldElem FieldElem::operator-(const FieldElem& o) const { return FieldElem(K_, rep_ - o.rep_); }
FieldElem FieldElem::operator*(const FieldElem& o) const { return FieldElem(K_, rep_ * o.rep_); }
FieldElem FieldElem::operator-() const { return FieldElem(K_, -rep_); }
FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    RatPoly s, t;
    ext_gcd(rep_, K_->poly().to_rat(), s, t);
    return FieldElem(K_, s);
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r = constant(K_, 1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElem operator+(const FieldElem& a, const mpq_class& c) { return a + FieldElem::constant(a.field(), c); }
FieldElem operator*(const mpq_class& c, const FieldElem& a) { return FieldElem(a.field(), c * a.rep()); }

std::vector<std::vector<mpq_class>> FieldElem::mult_matrix() const {
    int n = K_->degree();
    QMat m(static_cast<size_t>(n), std::vector<mpq_class>(static_cast<size_t>(n)));
    FieldElem col = *this;
    FieldElem t = gen(K_);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.rep_.coeff(i);
        col = col * t;
    }
    return m;
}

namespace {

mpq_class det(QMat a) {
    size_t n = a.size();
    mpq_class d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

QMat inverse(QMat a) {
    size_t n = a.size();
    QMat inv(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        mpq_class piv = a[c][c];
        for (size_t k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace

mpq_class FieldElem::norm() const { return det(mult_matrix()); }

mpq_class FieldElem::trace() const {
    auto m = mult_matrix();
    mpq_class t = 0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

RatPoly FieldElem::charpoly() const {
    int n = K_->degree();
    std::vector<mpq_class> p(static_cast<size_t>(n) + 1), e(static_cast<size_t>(n) + 1);
    FieldElem xk = *this;
    for (int k = 1; k <= n; ++k) {
        p[static_cast<size_t>(k)] = xk.trace();
        xk = xk * *this;
    }
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpq_class s = 0;
        for (int i = 1; i <= k; ++i) {
            mpq_class term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
            s += (i % 2 == 1) ? term : mpq_class(-term);
        }
        e[static_cast<size_t>(k)] = s / k;
    }
    std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(n - k)] = (k % 2 == 0) ? e[static_cast<size_t>(k)] : mpq_class(-e[static_cast<size_t>(k)]);
    return RatPoly(std::move(c));
}

RatPoly FieldElem::minpoly() const {
    RatPoly c = charpoly();
    RatPoly g = gcd(c, c.derivative());
    RatPoly q, r;
    divmod(c, g, q, r);
    return q.monic();
}

bool FieldElem::is_integral() const {
    RatPoly c = charpoly();
    for (const auto& a : c.coeffs())
        if (a.get_den() != 1) return false;
    return true;
}

Complex FieldElem::embed(size_t k, long bits) const {
    PrecisionScope ps(bits);
    const auto& boxes = K_->embeddings();
    if (k >= boxes.size()) throw std::out_of_range("embedding index");
    return rep_.eval(boxes[k].center);
}

int FieldElem::real_sign(int k) const {
    if (is_zero()) return 0;
    RealRoot r = K_->real_root(k);
    for (int iter = 0; iter < 4000; ++iter) {
        if (r.is_exact()) return sgn(rep_.eval(r.lo()));
        // rational interval Horner
        mpq_class lo = 0, hi = 0;
        for (int i = rep_.degree(); i >= 0; --i) {
            mpq_class a = lo * r.lo(), b = lo * r.hi(), c = hi * r.lo(), d = hi * r.hi();
            lo = std::min({a, b, c, d}) + rep_.coeff(i);
            hi = std::max({a, b, c, d}) + rep_.coeff(i);
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        r.bisect();
    }
    throw std::runtime_error("real embedding sign not separable");
}

// ---------------------------------------------------------------- Dedekind

namespace {

IntPoly exact_quotient_by(const IntPoly& p, long q) {
    std::vector<mpz_class> c;
    for (const auto& a : p.coeffs()) {
        if (!mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(q))) throw std::logic_error("not divisible");
        mpz_class t;
        mpz_divexact_ui(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(q));
        c.push_back(t);
    }
    return IntPoly(std::move(c));
}

}  // namespace

bool dedekind_p_maximal(const IntPoly& f, long q) {
    GF F(q);
    auto fac = gf_factor(F, F.from(f));
    GfPoly g{1}, h{1};
    for (const auto& x : fac) {
        g = F.mul(g, x.factor);
        for (int k = 1; k < x.multiplicity; ++k) h = F.mul(h, x.factor);
    }
    IntPoly G = F.lift(g), H = F.lift(h);
    GfPoly r = F.from(exact_quotient_by(f - G * H, q));
    GfPoly t = F.gcd(F.gcd(r, g), h);
    return GF::deg(t) == 0;
}

// ---------------------------------------------------------------- Round 2

namespace {

// Hermite basis of the lattice spanned by integer rows (full rank n).
ZMat hnf(ZMat rows, size_t n) {
    size_t m = rows.size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        // gcd-combine column c into row r
        for (size_t i = r + 1; i < m; ++i) {
            if (rows[i][c] == 0) continue;
            if (rows[r][c] == 0) {
                std::swap(rows[r], rows[i]);
                continue;
            }
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][c].get_mpz_t(), rows[i][c].get_mpz_t());
            mpz_class a = rows[r][c] / g, b = rows[i][c] / g;
            std::vector<mpz_class> nr(n), ni(n);
            for (size_t k = 0; k < n; ++k) {
                nr[k] = s * rows[r][k] + t * rows[i][k];
                ni[k] = a * rows[i][k] - b * rows[r][k];
            }
            rows[r] = std::move(nr);
            rows[i] = std::move(ni);
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            for (size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
        }
        ++r;
    }
    if (r != n) throw std::logic_error("lattice is not of full rank");
    rows.resize(n);
    return rows;
}

// Row vectors x over GF(l) with x M = 0.
std::vector<std::vector<int64_t>> left_kernel_mod(const std::vector<std::vector<int64_t>>& M, long l) {
    GF F(l);
    size_t rcount = M.size();
    size_t ccount = M.empty() ? 0 : M[0].size();
    // transpose: solve M^T x = 0
    std::vector<std::vector<int64_t>> A(ccount, std::vector<int64_t>(rcount));
    for (size_t i = 0; i < rcount; ++i)
        for (size_t j = 0; j < ccount; ++j) A[j][i] = F.red(M[i][j]);
    std::vector<int> pivcol;
    size_t row = 0;
    for (size_t c = 0; c < rcount && row < ccount; ++c) {
        size_t p = row;
        while (p < ccount && A[p][c] == 0) ++p;
        if (p == ccount) continue;
        std::swap(A[p], A[row]);
        int64_t iv = F.inv(A[row][c]);
        for (auto& x : A[row]) x = F.mul(x, iv);
        for (size_t r2 = 0; r2 < ccount; ++r2) {
            if (r2 == row || A[r2][c] == 0) continue;
            int64_t f = A[r2][c];
            for (size_t k = 0; k < rcount; ++k) A[r2][k] = F.red(A[r2][k] - F.mul(f, A[row][k]));
        }
        pivcol.push_back(static_cast<int>(c));
        ++row;
    }
    std::vector<std::vector<int64_t>> out;
    std::vector<bool> is_piv(rcount, false);
    for (int c : pivcol) is_piv[static_cast<size_t>(c)] = true;
    for (size_t free = 0; free < rcount; ++free) {
        if (is_piv[free]) continue;
        std::vector<int64_t> v(rcount, 0);
        v[free] = 1;
        for (size_t k = 0; k < pivcol.size(); ++k) v[static_cast<size_t>(pivcol[k])] = F.red(-A[k][free]);
        out.push_back(std::move(v));
    }
    return out;
}

struct Order {
    const IntPoly* f;
    QMat B;  // rows: basis elements in power-basis coordinates
    QMat Binv;
    std::vector<std::vector<std::vector<mpz_class>>> T;  // T[i][j] = coords of w_i w_j

    RatPoly elem(size_t i) const { return RatPoly(B[i]); }

    std::vector<mpz_class> to_order(const RatPoly& x) const {
        size_t n = B.size();
        std::vector<mpz_class> out(n);
        for (size_t j = 0; j < n; ++j) {
            mpq_class s = 0;
            for (size_t i = 0; i < n; ++i) s += x.coeff(static_cast<int>(i)) * Binv[i][j];
            if (s.get_den() != 1) throw std::logic_error("element not in order");
            out[j] = s.get_num();
        }
        return out;
    }

    void build() {
        size_t n = B.size();
        Binv = inverse(B);
        T.assign(n, std::vector<std::vector<mpz_class>>(n));
        RatPoly fr = f->to_rat();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                T[i][j] = to_order(rem(elem(i) * elem(j), fr));
                T[j][i] = T[i][j];
            }
    }

    std::vector<int64_t> mul_mod(const std::vector<int64_t>& x, const std::vector<int64_t>& y, const GF& F) const {
        size_t n = B.size();
        std::vector<int64_t> out(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                int64_t c = F.mul(x[i], y[j]);
                for (size_t k = 0; k < n; ++k) {
                    mpz_class t;
                    mpz_fdiv_r_ui(t.get_mpz_t(), T[i][j][k].get_mpz_t(), static_cast<unsigned long>(F.l()));
                    out[k] = (out[k] + F.mul(c, t.get_si())) % F.l();
                }
            }
        }
        return out;
    }
};

// l-maximal overorder of Z[theta]; returns its basis in power-basis coordinates.
QMat round2(const IntPoly& f, long l) {
    size_t n = static_cast<size_t>(f.degree());
    GF F(l);
    Order O{&f, QMat(n, std::vector<mpq_class>(n, 0)), {}, {}};
    for (size_t i = 0; i < n; ++i) O.B[i][i] = 1;
    mpz_class q = 1;  // l^j >= n
    while (q < static_cast<long>(n)) q *= l;
    for (int round = 0; round < 64; ++round) {
        O.build();
        // radical of O/lO: kernel of the Frobenius power x -> x^q
        std::vector<int64_t> one(n, 0);
        {
            std::vector<mpz_class> c = O.to_order(RatPoly::constant(1));
            for (size_t k = 0; k < n; ++k) {
                mpz_class t;
                mpz_fdiv_r_ui(t.get_mpz_t(), c[k].get_mpz_t(), static_cast<unsigned long>(l));
                one[k] = t.get_si();
            }
        }
        std::vector<std::vector<int64_t>> frob;
        for (size_t i = 0; i < n; ++i) {
            std::vector<int64_t> b(n, 0), r = one;
            b[i] = 1;
            size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
            for (size_t bi = bits; bi-- > 0;) {
                r = O.mul_mod(r, r, F);
                if (mpz_tstbit(q.get_mpz_t(), bi)) r = O.mul_mod(r, b, F);
            }
            frob.push_back(r);
        }
        auto rad = left_kernel_mod(frob, l);
        ZMat gens;
        for (size_t i = 0; i < n; ++i) {
            std::vector<mpz_class> v(n, 0);
            v[i] = l;
            gens.push_back(v);
        }
        for (const auto& v : rad) {
            std::vector<mpz_class> w;
            for (auto x : v) w.emplace_back(static_cast<long>(x));
            gens.push_back(w);
        }
        ZMat I = hnf(gens, n);
        // I basis inverse to express products in I-coordinates
        QMat Iq(n, std::vector<mpq_class>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) Iq[i][j] = I[i][j];
        QMat Iinv = inverse(Iq);
        // x -> (alpha_k -> x alpha_k) in End(I / l I)
        std::vector<std::vector<int64_t>> M(n, std::vector<int64_t>(n * n));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                std::vector<mpz_class> prod(n, 0);
                for (size_t m = 0; m < n; ++m)
                    if (I[k][m] != 0)
                        for (size_t c = 0; c < n; ++c) prod[c] += I[k][m] * O.T[i][m][c];
                for (size_t c = 0; c < n; ++c) {
                    mpq_class s = 0;
                    for (size_t m = 0; m < n; ++m) s += prod[m] * Iinv[m][c];
                    if (s.get_den() != 1) throw std::logic_error("radical is not an ideal");
                    mpz_class t;
                    mpz_fdiv_r_ui(t.get_mpz_t(), s.get_num_mpz_t(), static_cast<unsigned long>(l));
                    M[i][k * n + c] = t.get_si();
                }
            }
        auto U = left_kernel_mod(M, l);
        ZMat ugens;
        for (size_t i = 0; i < n; ++i) {
            std::vector<mpz_class> v(n, 0);
            v[i] = l;
            ugens.push_back(v);
        }
        for (const auto& v : U) {
            std::vector<mpz_class> w;
            for (auto x : v) w.emplace_back(static_cast<long>(x));
            ugens.push_back(w);
        }
        ZMat H = hnf(ugens, n);
        mpz_class dH = 1;
        for (size_t i = 0; i < n; ++i) dH *= H[i][i];
        mpz_class ln;
        mpz_ui_pow_ui(ln.get_mpz_t(), static_cast<unsigned long>(l), n);
        if (dH == ln) return O.B;
        QMat nb(n, std::vector<mpq_class>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                mpq_class s = 0;
                for (size_t k = 0; k < n; ++k) s += mpq_class(H[i][k]) / l * O.B[k][j];
                nb[i][j] = s;
            }
        O.B = std::move(nb);
    }
    throw std::runtime_error("round 2 did not terminate");
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
    if (n == 0) throw std::invalid_argument("factor_integer(0)");
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> out;
    auto take = [&](const mpz_class& d) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    };
    take(2);
    mpz_class d = 3;
    const mpz_class limit = 10000000;
    while (d * d <= n && d < limit) {
        take(d);
        d += 2;
    }
    if (n > 1) {
        if (d * d > n || mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
            out.emplace_back(n, 1);
        } else if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
            out.emplace_back(s, 2);
        } else {
            throw std::runtime_error("integer too large to factor by trial division");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldDiscriminant field_discriminant(const IntPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("field_discriminant needs a monic polynomial");
    FieldDiscriminant res;
    mpz_class d = discriminant(f);
    res.index = 1;
    for (const auto& [p, e] : factor_integer(d)) {
        if (e < 2) continue;
        if (!p.fits_slong_p() || p > 2147483647) throw std::runtime_error("prime too large for GF(l)");
        long l = p.get_si();
        if (dedekind_p_maximal(f, l)) continue;
        res.index_primes.push_back(l);
        res.round2_primes.push_back(l);
        QMat B = round2(f, l);
        mpq_class det_b = abs(det(B));
        mpq_class idx = 1 / det_b;
        if (idx.get_den() != 1) throw std::logic_error("non-integral index");
        res.index *= idx.get_num();
    }
    res.disc = d / (res.index * res.index);
    return res;
}

std::vector<RatPoly> local_maximal_basis(const IntPoly& f, long l) {
    std::vector<RatPoly> out;
    for (const auto& row : round2(f, l)) out.emplace_back(row);
    return out;
}

std::optional<LocalGenerator> generator_prime_to(const Field& K, long l) {
    const IntPoly& f = K->poly();
    int vK = 0;
    for (mpz_class d = field_discriminant(f).disc; mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(l)); d /= l) ++vK;
    auto basis = local_maximal_basis(f, l);
    size_t n = basis.size();
    std::vector<FieldElem> w;
    for (const auto& r : basis) w.emplace_back(K, r);
    // coefficient vectors in {-2..2}^n by increasing max norm
    std::vector<std::vector<int>> cands;
    size_t total = 1;
    for (size_t i = 0; i < n; ++i) total *= 5;
    for (size_t idx = 0; idx < total; ++idx) {
        std::vector<int> c(n);
        size_t t = idx;
        for (size_t i = 0; i < n; ++i) {
            c[i] = static_cast<int>(t % 5) - 2;
            t /= 5;
        }
        cands.push_back(c);
    }
    std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
        int mx = 0, my = 0;
        for (int v : x) mx = std::max(mx, std::abs(v));
        for (int v : y) my = std::max(my, std::abs(v));
        return mx < my;
    });
    for (const auto& c : cands) {
        FieldElem theta = FieldElem::constant(K, 0);
        for (size_t i = 0; i < n; ++i) theta = theta + mpq_class(c[i]) * w[i];
        RatPoly h = theta.charpoly();
        auto [hi, den] = h.split_denominator();
        if (den != 1 || theta.minpoly().degree() != static_cast<int>(n)) continue;
        int v = 0;
        for (mpz_class d = discriminant(hi); d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(l)); d /= l) ++v;
        if (v == vK) return LocalGenerator{theta, hi};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- primes

mpz_class PrimeIdeal::norm() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(f));
    return r;
}

std::vector<PrimeIdeal> primes_above(const IntPoly& f, long l) {
    GF F(l);
    std::vector<PrimeIdeal> out;
    for (const auto& x : gf_factor(F, F.from(f))) out.push_back({l, x.multiplicity, GF::deg(x.factor), x.factor});
    return out;
}

// ---------------------------------------------------------------- K[X]

std::vector<FieldElem> poly_gcd_over(const Field& K, std::vector<FieldElem> a, std::vector<FieldElem> b) {
    auto trim = [](std::vector<FieldElem>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            FieldElem c = a.back() / b.back();
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    if (a.empty()) return a;
    FieldElem li = a.back().inverse();
    for (auto& c : a) c = c * li;
    (void)K;
    return a;
}

}  // namespace akg
