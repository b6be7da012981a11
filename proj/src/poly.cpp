#include "akg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace akg {

namespace {

template <class T>
void append_term(std::ostringstream& os, const T& c, int deg, const char* var, bool first) {
    T a = abs(c);
    bool neg = sgn(c) < 0;
    if (neg)
        os << (first ? "-" : "-");
    else if (!first)
        os << "+";
    if (deg == 0 || a != 1) os << a;
    if (deg >= 1) os << var;
    if (deg >= 2) os << "^" << deg;
}

template <class T>
std::string poly_str(const std::vector<T>& c, const char* var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (sgn(c[i]) == 0) continue;
        append_term(os, c[i], i, var, first);
        first = false;
    }
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int deg) {
    std::vector<mpz_class> v(static_cast<size_t>(deg) + 1);
    v[static_cast<size_t>(deg)] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& a : c_) g = gcd(g, a);
    return g;
}

IntPoly IntPoly::primitive() const {
    if (c_.empty()) return *this;
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly r;
    for (int i = degree(); i >= 0; --i) r = r * inner + IntPoly::constant(c_[static_cast<size_t>(i)]);
    return r;
}

IntPoly IntPoly::reversed_sign_arg() const {
    std::vector<mpz_class> v = c_;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPoly(std::move(v));
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[static_cast<size_t>(i)];
    return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[static_cast<size_t>(i)];
    return r;
}

Complex IntPoly::eval(const Complex& z) const {
    long prec = std::max(z.re.precision(), z.im.precision());
    PrecisionScope ps(prec);
    Complex r(0L);
    for (int i = degree(); i >= 0; --i) r = r * z + Complex(Real(c_[static_cast<size_t>(i)]));
    return r;
}

Real IntPoly::eval(const Real& x) const {
    PrecisionScope ps(x.precision());
    Real r(0L);
    for (int i = degree(); i >= 0; --i) r = r * x + Real(c_[static_cast<size_t>(i)]);
    return r;
}

RatPoly IntPoly::to_rat() const {
    std::vector<mpq_class> v(c_.begin(), c_.end());
    return RatPoly(std::move(v));
}

std::string IntPoly::str(const char* var) const { return poly_str(c_, var); }

std::vector<long> IntPoly::to_longs() const {
    std::vector<long> v;
    for (const auto& a : c_) {
        if (!a.fits_slong_p()) throw std::overflow_error("coefficient exceeds machine range");
        v.push_back(a.get_si());
    }
    return v;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v = c_;
    for (auto& a : v) a = -a;
    return IntPoly(std::move(v));
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) { return IntPoly::constant(s) * a; }

IntPoly pow(const IntPoly& a, int e) {
    IntPoly r = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

void pseudo_divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::domain_error("pseudo division by zero");
    int db = b.degree();
    if (a.degree() < db) {
        q = {};
        r = a;
        return;
    }
    int e = a.degree() - db + 1;
    std::vector<mpz_class> rr = a.coeffs();
    std::vector<mpz_class> qq(static_cast<size_t>(a.degree() - db) + 1);
    const mpz_class& l = b.lc();
    for (int k = a.degree(); k >= db; --k) {
        mpz_class t = rr[static_cast<size_t>(k)];
        for (auto& c : qq) c *= l;
        qq[static_cast<size_t>(k - db)] += t;
        for (auto& c : rr) c *= l;
        for (int j = 0; j <= db; ++j) rr[static_cast<size_t>(k - db + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
        --e;
    }
    // remaining factor so that lc^(deg a - deg b + 1) a = q b + r
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : qq) c *= s;
    for (auto& c : rr) c *= s;
    q = IntPoly(std::move(qq));
    r = IntPoly(std::move(rr));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly q, r;
    pseudo_divmod(a, b, q, r);
    return r;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rr = a.coeffs();
    std::vector<mpz_class> qq(static_cast<size_t>(a.degree() - b.degree()) + 1);
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        mpz_class t;
        if (!mpz_divisible_p(rr[static_cast<size_t>(k)].get_mpz_t(), b.lc().get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_divexact(t.get_mpz_t(), rr[static_cast<size_t>(k)].get_mpz_t(), b.lc().get_mpz_t());
        qq[static_cast<size_t>(k - db)] = t;
        for (int j = 0; j <= db; ++j) rr[static_cast<size_t>(k - db + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
    }
    for (const auto& c : rr)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(qq));
}

bool divides(const IntPoly& b, const IntPoly& a) {
    try {
        divexact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly g = gcd(a.to_rat(), b.to_rat());
    return g.split_denominator().first.primitive();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& a : c_) a.canonicalize();
    trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

RatPoly RatPoly::monomial(const mpq_class& c, int deg) {
    std::vector<mpq_class> v(static_cast<size_t>(deg) + 1);
    v[static_cast<size_t>(deg)] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RatPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<size_t>(i)];
}

const mpq_class& RatPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return *this;
    mpq_class l = c_.back();
    std::vector<mpq_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / l;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(v));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[static_cast<size_t>(i)];
    return r;
}

Complex RatPoly::eval(const Complex& z) const {
    PrecisionScope ps(std::max(z.re.precision(), z.im.precision()));
    Complex r(0L);
    for (int i = degree(); i >= 0; --i) r = r * z + Complex(Real(c_[static_cast<size_t>(i)]));
    return r;
}

std::pair<IntPoly, mpz_class> RatPoly::split_denominator() const {
    mpz_class d = 1;
    for (const auto& a : c_) d = lcm(d, a.get_den());
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpq_class t = c_[i] * d;
        v[i] = t.get_num();
    }
    return {IntPoly(std::move(v)), d};
}

std::string RatPoly::str(const char* var) const { return poly_str(c_, var); }

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly RatPoly::operator-() const {
    std::vector<mpq_class> v = c_;
    for (auto& a : v) a = -a;
    return RatPoly(std::move(v));
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const mpq_class& s, const RatPoly& a) { return RatPoly::constant(s) * a; }

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    int db = b.degree();
    if (a.degree() < db) {
        q = {};
        r = a;
        return;
    }
    std::vector<mpq_class> rr = a.coeffs();
    std::vector<mpq_class> qq(static_cast<size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        mpq_class t = rr[static_cast<size_t>(k)] / b.lc();
        qq[static_cast<size_t>(k - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) rr[static_cast<size_t>(k - db + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
    }
    rr.resize(static_cast<size_t>(db));
    q = RatPoly(std::move(qq));
    r = RatPoly(std::move(rr));
}

RatPoly rem(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    divmod(a, b, q, r);
    return r;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RatPoly ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        RatPoly q, r;
        divmod(r0, r1, q, r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = {};
        t = {};
        return r0;
    }
    mpq_class l = r0.lc();
    s = (1 / l) * s0;
    t = (1 / l) * t0;
    return r0.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
    if (p.degree() < 1) return {};
    RatPoly f = p.to_rat().monic();
    RatPoly fp = f.derivative();
    RatPoly b = gcd(f, fp);
    RatPoly q, r;
    RatPoly c, d;
    divmod(f, b, c, r);
    divmod(fp, b, d, r);
    d = d - c.derivative();
    std::vector<SquarefreeFactor> out;
    int i = 1;
    while (c.degree() > 0) {
        RatPoly a = gcd(c, d);
        RatPoly c2, d2;
        divmod(c, a, c2, r);
        divmod(d, a, d2, r);
        if (a.degree() > 0) out.push_back({a.split_denominator().first.primitive(), i});
        c = c2;
        d = d2 - c.derivative();
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly r = IntPoly::constant(1);
    for (const auto& f : squarefree_decomposition(p)) r = r * f.factor;
    return r.primitive();
}

// ---------------------------------------------------------------- BivarIntPoly

BivarIntPoly::BivarIntPoly(std::vector<std::vector<mpz_class>> rows) : rows_(std::move(rows)) { trim(); }

BivarIntPoly BivarIntPoly::from_univariate(const IntPoly& p) {
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& c : p.coeffs()) rows.push_back({c});
    return BivarIntPoly(std::move(rows));
}

void BivarIntPoly::trim() {
    for (auto& row : rows_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int BivarIntPoly::degree_b() const {
    int d = -1;
    for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

mpz_class BivarIntPoly::coeff(int i, int j) const {
    if (i < 0 || i > degree_z()) return 0;
    const auto& row = rows_[static_cast<size_t>(i)];
    if (j < 0 || j >= static_cast<int>(row.size())) return 0;
    return row[static_cast<size_t>(j)];
}

IntPoly BivarIntPoly::z_coeff(int i) const {
    if (i < 0 || i > degree_z()) return {};
    return IntPoly(rows_[static_cast<size_t>(i)]);
}

RatPoly BivarIntPoly::at_b(const mpq_class& b) const {
    std::vector<mpq_class> v;
    for (size_t i = 0; i < rows_.size(); ++i) v.push_back(IntPoly(rows_[i]).eval(b));
    return RatPoly(std::move(v));
}

std::vector<Complex> BivarIntPoly::at_b(const Complex& b) const {
    std::vector<Complex> v;
    for (size_t i = 0; i < rows_.size(); ++i) v.push_back(IntPoly(rows_[i]).eval(b));
    return v;
}

IntPoly BivarIntPoly::diagonal() const {
    IntPoly r;
    for (int i = 0; i <= degree_z(); ++i) r += z_coeff(i) * IntPoly::monomial(1, i);
    return r;
}

IntPoly BivarIntPoly::at_z(const mpz_class& z) const {
    IntPoly r;
    mpz_class zp = 1;
    for (int i = 0; i <= degree_z(); ++i) {
        r += zp * z_coeff(i);
        zp *= z;
    }
    return r;
}

Complex BivarIntPoly::eval(const Complex& z, const Complex& b) const {
    PrecisionScope ps(std::max(z.re.precision(), b.re.precision()));
    Complex r(0L);
    for (int i = degree_z(); i >= 0; --i) r = r * z + z_coeff(i).eval(b);
    return r;
}

IntPoly BivarIntPoly::to_univariate() const {
    if (!is_b_free()) throw std::domain_error("polynomial depends on b");
    std::vector<mpz_class> v;
    for (const auto& row : rows_) v.push_back(row.empty() ? mpz_class(0) : row[0]);
    return IntPoly(std::move(v));
}

std::string BivarIntPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree_z(); i >= 0; --i) {
        IntPoly c = z_coeff(i);
        if (c.is_zero()) continue;
        bool single = c.coeffs().size() == 1 || (std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                               [](const mpz_class& a) { return a != 0; }) == 1);
        std::string cs = c.str("b");
        if (i == 0) {
            if (!first && cs[0] != '-') os << "+";
            os << cs;
        } else if (single) {
            if (cs == "1")
                cs = "";
            else if (cs == "-1")
                cs = "-";
            if (!first && (cs.empty() || cs[0] != '-')) os << "+";
            os << cs << "z";
            if (i > 1) os << "^" << i;
        } else {
            if (!first) os << "+";
            os << "(" << cs << ")z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

BivarIntPoly operator*(const BivarIntPoly& a, const BivarIntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::vector<mpz_class>> rows(static_cast<size_t>(a.degree_z() + b.degree_z()) + 1);
    for (int i = 0; i <= a.degree_z(); ++i)
        for (int k = 0; k <= b.degree_z(); ++k) {
            IntPoly prod = a.z_coeff(i) * b.z_coeff(k);
            auto& row = rows[static_cast<size_t>(i + k)];
            if (row.size() < prod.coeffs().size()) row.resize(prod.coeffs().size());
            for (size_t j = 0; j < prod.coeffs().size(); ++j) row[j] += prod.coeffs()[j];
        }
    return BivarIntPoly(std::move(rows));
}

BivarIntPoly operator+(const BivarIntPoly& a, const BivarIntPoly& b) {
    std::vector<std::vector<mpz_class>> rows(static_cast<size_t>(std::max(a.degree_z(), b.degree_z()) + 1));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        IntPoly s = a.z_coeff(i) + b.z_coeff(i);
        rows[static_cast<size_t>(i)] = s.coeffs();
    }
    return BivarIntPoly(std::move(rows));
}

}  // namespace akg
