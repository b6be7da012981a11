#include "akg/quatalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "akg/gfp.hpp"
#include "akg/resultant.hpp"

namespace akg {

HilbertSymbol invariant_symbol(const FieldElem& gamma, const FieldElem& beta, bool eq81) {
    if (gamma.is_zero() || gamma == beta) throw std::invalid_argument("gamma in {0, beta} is excluded");
    FieldElem b4 = beta + mpq_class(4);
    if (beta.is_zero() || b4.is_zero()) throw std::invalid_argument("beta in {0, -4} is excluded");
    if (eq81) {
        FieldElem b2 = beta + mpq_class(2);
        FieldElem s = -beta;  // 4 sin^2(pi/n)
        return {b2 * b2 + mpq_class(-4), gamma * (gamma + s)};
    }
    return {beta * b4, gamma * (gamma - beta)};
}

std::vector<int> real_ramification(const HilbertSymbol& s) {
    std::vector<int> out;
    for (int k = 0; k < s.field()->r1(); ++k)
        if (s.a.real_sign(k) < 0 && s.b.real_sign(k) < 0) out.push_back(k);
    return out;
}

FieldElem order_disc_element(int n, const FieldElem& gamma, const FieldElem& beta) {
    FieldElem x = gamma;
    switch (n) {
        case 3: x = gamma * (gamma + mpq_class(3)); break;
        case 4: x = mpq_class(2) * gamma * (gamma + mpq_class(2)); break;
        case 5: x = gamma * (gamma - beta); break;
        case 6: x = mpq_class(9) * gamma * (gamma + mpq_class(1)); break;
        default: throw std::invalid_argument("no order discriminant known for n = " + std::to_string(n));
    }
    return x;
}

mpz_class order_disc_norm(int n, const FieldElem& gamma, const FieldElem& beta) {
    mpq_class N = order_disc_element(n, gamma, beta).norm();
    if (N.get_den() != 1) throw std::logic_error("order discriminant generator is not integral");
    return N.get_num();
}

namespace {

int vl(mpz_class x, long l) {
    if (x == 0) return 1 << 30;
    int v = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(l))) {
        x /= l;
        ++v;
    }
    return v;
}

mpz_class lpow(long l, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(k));
    return r;
}

// Coordinates of x in the power basis of theta (both in the same field).
RatPoly rebase(const FieldElem& x, const FieldElem& theta) {
    size_t n = static_cast<size_t>(x.field()->degree());
    // augmented system: columns theta^j, right-hand side x
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n + 1, 0));
    FieldElem p = FieldElem::constant(x.field(), 1);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) M[i][j] = p.rep().coeff(static_cast<int>(i));
        p = p * theta;
    }
    for (size_t i = 0; i < n; ++i) M[i][n] = x.rep().coeff(static_cast<int>(i));
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) throw std::logic_error("theta does not generate the field");
        std::swap(M[c], M[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            mpq_class t = M[r][c] / M[c][c];
            for (size_t k = c; k <= n; ++k) M[r][k] -= t * M[c][k];
        }
    }
    std::vector<mpq_class> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = M[i][n] / M[i][i];
    return RatPoly(out);
}

struct Presentation {
    Field K;
    FieldElem a, b;
};

// A presentation of K by a generator whose index is prime to l.
std::optional<Presentation> presentation_at(const HilbertSymbol& s, long l) {
    const Field& K = s.field();
    if (dedekind_p_maximal(K->poly(), l)) return Presentation{K, s.a, s.b};
    auto g = generator_prime_to(K, l);
    if (!g) return std::nullopt;
    Field K2 = NumberField::make(g->minpoly, K->precision());
    return Presentation{K2, FieldElem(K2, rebase(s.a, g->theta)), FieldElem(K2, rebase(s.b, g->theta))};
}

// Integer numerator A and denominator d of x; l must not divide d.
std::pair<IntPoly, mpz_class> numerator(const FieldElem& x, long l) {
    auto [A, d] = x.rep().split_denominator();
    if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(l)))
        throw std::logic_error("denominator divisible by l at an l-maximal presentation");
    return {A, d};
}

IntPoly reduce_mod(const IntPoly& a, const mpz_class& m) {
    std::vector<mpz_class> c;
    for (const auto& x : a.coeffs()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        c.push_back(r);
    }
    return IntPoly(c);
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& g) { return pseudo_rem(a, g); }

struct LocalPrime {
    long l;
    int e, f;
    GfPoly g;
    IntPoly G;  // l-adic factor lifting g^e, modulo l^k
    int k;
};

// x in O_P/l^k coordinates divided by l^v, as an integer polynomial mod l^(k-v)
IntPoly unit_part(const IntPoly& A, const LocalPrime& P, int v) {
    mpz_class mod = lpow(P.l, P.k);
    IntPoly X = reduce_mod(rem_monic(A, P.G), mod);
    mpz_class lv = lpow(P.l, v);
    std::vector<mpz_class> c;
    for (const auto& x : X.coeffs()) {
        if (!mpz_divisible_p(x.get_mpz_t(), lv.get_mpz_t())) throw std::logic_error("valuation mismatch in unit part");
        c.push_back(x / lv);
    }
    return IntPoly(c);
}

int valuation_at(const IntPoly& A, const LocalPrime& P) {
    int v = vl(resultant(P.G, A), P.l);
    if (v >= P.k * P.f) throw std::runtime_error("l-adic precision exhausted");
    if (v % P.f != 0) throw std::logic_error("norm valuation not divisible by the residue degree");
    return v / P.f;
}

// Hilbert symbol at an odd prime by the tame symbol.
int tame_symbol(const LocalPrime& P, const std::pair<IntPoly, mpz_class>& a, const std::pair<IntPoly, mpz_class>& b,
                int va, int vb, std::string& method) {
    GF F(P.l);
    auto residue = [&](const std::pair<IntPoly, mpz_class>& x, int v) {
        GfPoly r;
        if (P.e == 1)
            r = F.rem(F.from(unit_part(x.first, P, v)), P.g);
        else
            r = F.rem(F.from(x.first), P.g);
        mpz_class dm;
        mpz_fdiv_r_ui(dm.get_mpz_t(), x.second.get_mpz_t(), static_cast<unsigned long>(P.l));
        return F.scale(r, F.inv(dm.get_si()));
    };
    if (P.e > 1 && va > 0 && vb > 0) {
        method = "undecided: ramified odd prime dividing both entries";
        return 0;
    }
    GfPoly ua = residue(a, P.e == 1 ? va : 0);
    GfPoly ub = residue(b, P.e == 1 ? vb : 0);
    // c = (-1)^(va vb) a^vb / b^va
    GfPoly c{1};
    for (int i = 0; i < vb; ++i) c = F.rem(F.mul(c, ua), P.g);
    GfPoly s, t;
    F.ext_gcd(ub, P.g, s, t);
    for (int i = 0; i < va; ++i) c = F.rem(F.mul(c, s), P.g);
    if ((va * vb) % 2 == 1) c = F.scale(c, P.l - 1);
    mpz_class q = lpow(P.l, P.f);
    GfPoly r = F.powmod(c, (q - 1) / 2, P.g);
    method = "tame symbol";
    if (r == GfPoly{1}) return 1;
    if (r == GfPoly{P.l - 1}) return -1;
    throw std::logic_error("tame symbol residue is not a square class");
}

// Hilbert symbol at an unramified dyadic prime: a x^2 + b y^2 = z^2 with a
// primitive solution in O_P / 8.
int dyadic_symbol(const LocalPrime& P, const std::pair<IntPoly, mpz_class>& a, const std::pair<IntPoly, mpz_class>& b,
                  int va, int vb, std::string& method) {
    if (P.f > 4) {
        method = "undecided: residue degree too large for the search";
        return 0;
    }
    mpz_class mod = lpow(2, P.k);
    // a d^2 = A d has the square class of a
    auto norm_class = [&](const std::pair<IntPoly, mpz_class>& x, int v) {
        IntPoly X = unit_part(x.second * x.first, P, 2 * (v / 2));
        return reduce_mod(rem_monic(X, P.G), mod);
    };
    IntPoly A = norm_class(a, va), B = norm_class(b, vb);
    if (va % 2 == 1 && vb % 2 == 1) {
        // (a, b) = (a, -ab), and -ab / 4 is a unit
        IntPoly AB = reduce_mod(rem_monic(-(A * B), P.G), mod);
        std::vector<mpz_class> c;
        for (const auto& x : AB.coeffs()) {
            if (!mpz_divisible_ui_p(x.get_mpz_t(), 4)) throw std::logic_error("dyadic normalization failed");
            c.push_back(x / 4);
        }
        B = IntPoly(c);
    }
    const int f = P.f;
    const int size = 1 << (3 * f);
    std::vector<int> G8(static_cast<size_t>(f + 1));
    for (int i = 0; i <= f; ++i) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), P.G.coeff(i).get_mpz_t(), 8);
        G8[static_cast<size_t>(i)] = static_cast<int>(r.get_si());
    }
    auto to_vec = [&](const IntPoly& p) {
        std::vector<int> v(static_cast<size_t>(f), 0);
        for (int i = 0; i < f; ++i) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), p.coeff(i).get_mpz_t(), 8);
            v[static_cast<size_t>(i)] = static_cast<int>(r.get_si());
        }
        return v;
    };
    auto decode = [&](int idx) {
        std::vector<int> v(static_cast<size_t>(f));
        for (int i = 0; i < f; ++i) v[static_cast<size_t>(i)] = (idx >> (3 * i)) & 7;
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0;
        for (int i = 0; i < f; ++i) idx |= (v[static_cast<size_t>(i)] & 7) << (3 * i);
        return idx;
    };
    auto mul = [&](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> r(static_cast<size_t>(2 * f), 0);
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) r[static_cast<size_t>(i + j)] += x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        // reduce by the monic G8 from the top
        for (int d = 2 * f - 1; d >= f; --d) {
            int c = r[static_cast<size_t>(d)] & 7;
            for (int i = 0; i <= f; ++i) r[static_cast<size_t>(d - f + i)] -= c * G8[static_cast<size_t>(i)];
        }
        std::vector<int> out(static_cast<size_t>(f));
        for (int i = 0; i < f; ++i) out[static_cast<size_t>(i)] = ((r[static_cast<size_t>(i)] % 8) + 8) % 8;
        return out;
    };
    auto unit = [&](int idx) {
        for (int i = 0; i < f; ++i)
            if ((idx >> (3 * i)) & 1) return true;
        return false;
    };
    std::vector<char> square(static_cast<size_t>(size), 0), unit_square(static_cast<size_t>(size), 0);
    std::vector<int> sq(static_cast<size_t>(size));
    for (int z = 0; z < size; ++z) {
        auto v = decode(z);
        sq[static_cast<size_t>(z)] = encode(mul(v, v));
        square[static_cast<size_t>(sq[static_cast<size_t>(z)])] = 1;
        if (unit(z)) unit_square[static_cast<size_t>(sq[static_cast<size_t>(z)])] = 1;
    }
    auto av = to_vec(A), bv = to_vec(B);
    std::vector<std::vector<int>> ax(static_cast<size_t>(size)), by(static_cast<size_t>(size));
    for (int x = 0; x < size; ++x) {
        auto s = decode(sq[static_cast<size_t>(x)]);
        ax[static_cast<size_t>(x)] = mul(av, s);
        by[static_cast<size_t>(x)] = mul(bv, s);
    }
    method = "primitive solution search modulo 8";
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            std::vector<int> s(static_cast<size_t>(f));
            for (int i = 0; i < f; ++i)
                s[static_cast<size_t>(i)] = (ax[static_cast<size_t>(x)][static_cast<size_t>(i)] + by[static_cast<size_t>(y)][static_cast<size_t>(i)]) & 7;
            int idx = encode(s);
            bool prim = unit(x) || unit(y);
            if (prim ? square[static_cast<size_t>(idx)] : unit_square[static_cast<size_t>(idx)]) return 1;
        }
    return -1;
}

}  // namespace

namespace {

// Lifts the local factor of each prime above l to precision k (doubling on
// failure) and hands it to fn together with the prime's data.
template <class Fn>
void for_each_local_prime(const Presentation& pres, long l, Fn fn) {
    const IntPoly& h = pres.K->poly();
    GF F(l);
    auto primes = primes_above(h, l);
    for (size_t i = 0; i < primes.size(); ++i) {
        const auto& pr = primes[i];
        LocalPrime P{l, pr.e, pr.f, pr.g, h, 0};
        for (int k = 24;; k *= 2) {
            P.k = k;
            if (primes.size() > 1) {
                GfPoly ge{1}, rest{1};
                for (int t = 0; t < pr.e; ++t) ge = F.mul(ge, pr.g);
                for (size_t j = 0; j < primes.size(); ++j)
                    if (j != i)
                        for (int t = 0; t < primes[j].e; ++t) rest = F.mul(rest, primes[j].g);
                P.G = hensel_lift(h, ge, rest, l, k).first;
            }
            try {
                fn(P, pr);
                break;
            } catch (const std::runtime_error&) {
                if (k > 1000) throw;
            }
        }
    }
}

}  // namespace

std::vector<LocalSymbol> local_symbols(const HilbertSymbol& s, long l) {
    if (!s.a.is_integral() || !s.b.is_integral()) throw std::invalid_argument("symbol entries must be integral");
    std::vector<LocalSymbol> out;
    auto pres = presentation_at(s, l);
    if (!pres) {
        out.push_back({l, 0, 0, 0, 0, "undecided: common index divisor"});
        return out;
    }
    auto an = numerator(pres->a, l), bn = numerator(pres->b, l);
    for_each_local_prime(*pres, l, [&](const LocalPrime& P, const PrimeIdeal& pr) {
        LocalSymbol ls{l, pr.e, pr.f, pr.norm(), 0, ""};
        int va = valuation_at(an.first, P), vb = valuation_at(bn.first, P);
        if (l == 2) {
            // units need not give a split symbol here
            if (P.e == 1)
                ls.value = dyadic_symbol(P, an, bn, va, vb, ls.method);
            else
                ls.method = "undecided: ramified dyadic prime";
        } else if (va == 0 && vb == 0) {
            ls.value = 1;
            ls.method = "both entries are units";
        } else {
            ls.value = tame_symbol(P, an, bn, va, vb, ls.method);
        }
        out.push_back(ls);
    });
    return out;
}

std::optional<std::vector<PrimeValuation>> prime_valuations(const FieldElem& x, long l) {
    if (!x.is_integral() || x.is_zero()) throw std::invalid_argument("prime_valuations needs a nonzero integral element");
    auto pres = presentation_at(HilbertSymbol{x, x}, l);
    if (!pres) return std::nullopt;
    auto xn = numerator(pres->a, l);
    std::vector<PrimeValuation> out;
    for_each_local_prime(*pres, l, [&](const LocalPrime& P, const PrimeIdeal& pr) {
        out.push_back({l, pr.e, pr.f, pr.norm(), valuation_at(xn.first, P)});
    });
    return out;
}

const char* finite_status_name(FiniteStatus s) {
    switch (s) {
        case FiniteStatus::unramified: return "unramified";
        case FiniteStatus::primes: return "primes";
        case FiniteStatus::dyadic_only_candidate: return "dyadic_only_candidate";
        default: return "undetermined";
    }
}

RamificationReport classify_finite_ramification(const HilbertSymbol& s, std::optional<mpz_class> disc_norm) {
    RamificationReport rep;
    const Field& K = s.field();
    rep.real_places = K->r1();
    rep.real_ramified = real_ramification(s);
    rep.order_disc_norm = disc_norm;
    mpq_class na = abs(s.a.norm()), nb = abs(s.b.norm());
    if (na.get_den() != 1 || nb.get_den() != 1) throw std::invalid_argument("symbol entries must be integral");
    std::vector<long> ls{2};
    for (const auto& [p, e] : factor_integer(na.get_num() * nb.get_num() * 2)) {
        (void)e;
        if (p != 2) ls.push_back(p.get_si());
    }
    for (long l : ls)
        for (auto& x : local_symbols(s, l)) rep.local.push_back(x);

    std::vector<size_t> open;
    bool open_count_known = true;
    for (size_t i = 0; i < rep.local.size(); ++i) {
        if (rep.local[i].value != 0) continue;
        open.push_back(i);
        if (rep.local[i].e == 0) open_count_known = false;
    }
    auto ramified_count = [&] {
        size_t c = 0;
        for (const auto& x : rep.local) c += x.value == -1;
        return c;
    };
    if (open.size() == 1 && open_count_known) {
        auto& x = rep.local[open.front()];
        x.value = (rep.real_ramified.size() + ramified_count()) % 2 == 1 ? -1 : 1;
        x.method += "; closed by parity";
        open.clear();
    }
    for (const auto& x : rep.local)
        if (x.value == -1) rep.finite_norms.push_back(x.norm);
    std::sort(rep.finite_norms.begin(), rep.finite_norms.end(), std::greater<>());
    if (open.empty()) {
        rep.finite = rep.finite_norms.empty() ? FiniteStatus::unramified : FiniteStatus::primes;
        if (!rep.parity_even()) throw std::logic_error("ramification set has odd cardinality");
    } else {
        bool dyadic = true;
        for (size_t i : open) dyadic = dyadic && rep.local[i].l == 2;
        rep.finite = dyadic ? FiniteStatus::dyadic_only_candidate : FiniteStatus::undetermined;
        rep.note = std::to_string(open.size()) + " prime(s) left open";
    }
    if (disc_norm && *disc_norm != 0)
        for (const auto& x : rep.local)
            if (x.value == -1 && !mpz_divisible_ui_p(disc_norm->get_mpz_t(), static_cast<unsigned long>(x.l)))
                rep.note += (rep.note.empty() ? "" : "; ") + std::string("ramified prime does not divide the order discriminant");
    return rep;
}

const char* rule_name(RuleOutcome r) { return r == RuleOutcome::ruled_out ? "ruled_out" : "consistent"; }

RuleOutcome is_minus_one_minus_one_possible(const RamificationReport& report, const Field& K) {
    if (static_cast<int>(report.real_ramified.size()) < K->r1()) return RuleOutcome::ruled_out;
    for (const auto& x : report.local)
        if (x.value == -1 && x.l != 2) return RuleOutcome::ruled_out;
    return RuleOutcome::consistent;
}

RuleOutcome a5_quartic_rule(const Field& K, const FieldElem& sqrt5, const RamificationReport& report,
                            const std::optional<std::vector<mpz_class>>& finite_norms) {
    if (K->degree() != 4) throw std::invalid_argument("a5_quartic_rule needs a quartic field");
    if (!(sqrt5 * sqrt5 == FieldElem::constant(K, 5))) throw std::invalid_argument("sqrt5 does not square to 5");
    if (finite_norms) return finite_norms->empty() ? RuleOutcome::consistent : RuleOutcome::ruled_out;
    if (!report.finite_norms.empty()) return RuleOutcome::ruled_out;
    return RuleOutcome::consistent;
}

}  // namespace akg
