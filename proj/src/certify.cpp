#include "akg/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "akg/resultant.hpp"

namespace akg {

namespace {

std::pair<double, double> interval_of(RealRoot r) {
    if (!r.is_exact()) r.refine_to(mpq_class(mpz_class(1), mpz_class("1000000000000")));
    return {r.lo().get_d(), r.hi().get_d()};
}

void finish(DiscretenessCertificate& c) {
    bool ok = !c.conditions.empty();
    for (const auto& x : c.conditions) ok = ok && x.pass;
    c.verdict = ok ? Verdict::subgroup_of_arithmetic : Verdict::inconclusive;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

// conjugate box of box i (itself when real)
size_t conj_box(const std::vector<RootBox>& boxes, size_t i) {
    if (boxes[i].is_real) return i;
    return match_root(boxes, boxes[i].center.conj(), 1e-6);
}

}  // namespace

const char* verdict_name(Verdict v) {
    return v == Verdict::subgroup_of_arithmetic ? "subgroup_of_arithmetic" : "inconclusive";
}

DiscretenessCertificate check_t514(const IntPoly& p, const Complex& gamma_approx, int n, long bits) {
    if (n != 3 && n != 4 && n != 6) throw std::invalid_argument("check_t514 needs n in {3,4,6}");
    if (!p.is_monic()) throw std::invalid_argument("check_t514 needs a monic polynomial");
    auto boxes = isolate_roots(p, bits);
    size_t gi = match_root(boxes, gamma_approx);
    const RootBox& gb = boxes[gi];
    mpq_class beta = -beta_minpoly(n).coeff(0);
    if (gb.is_real && gb.lo == gb.hi && (gb.lo == 0 || gb.lo == beta))
        throw std::invalid_argument("gamma in {0, beta} gives an elementary group");

    DiscretenessCertificate cert;
    cert.theorem = "T5.14";
    cert.conditions.push_back({"monic", true, "leading coefficient 1, gamma is an algebraic integer", {}});

    Condition c{"other_roots_in_interval", false, "", {}};
    int exempt = gb.is_real ? 1 : 2;
    int others = p.degree() - exempt;
    int inside = 0;
    std::ostringstream ev;
    try {
        for (const auto& part : squarefree_decomposition(p)) {
            inside += part.multiplicity * sturm_count(part.factor, beta, 0);
            for (auto& r : real_roots(part.factor)) {
                auto iv = interval_of(r);
                if (r.compare(beta) > 0 && r.compare(0) < 0) c.intervals.push_back(iv);
            }
        }
        if (gb.is_real) {
            RealRoot g = gb.real_root();
            if (g.compare(beta) > 0 && g.compare(0) < 0) {
                --inside;
                // drop gamma's own interval from the evidence
                auto gi_iv = interval_of(g);
                for (auto it = c.intervals.begin(); it != c.intervals.end(); ++it)
                    if (it->first <= gi_iv.second && gi_iv.first <= it->second) {
                        c.intervals.erase(it);
                        break;
                    }
            }
        }
        c.pass = inside == others;
        ev << inside << " of " << others << " other roots are real in (" << beta.get_str() << ", 0)";
    } catch (const EndpointRootError& e) {
        c.pass = false;
        ev << "root at the interval endpoint " << e.point.get_str() << "; open interval required";
    }
    c.evidence = ev.str();
    cert.conditions.push_back(std::move(c));
    finish(cert);
    return cert;
}

DiscretenessCertificate check_t513(const BivarIntPoly& p, const Complex& gamma_approx, int n, long bits) {
    if (n != 5 && n != 7) throw std::invalid_argument("check_t513 needs n in {5,7}");
    IntPoly m = beta_minpoly(n);
    IntPoly q = resultant_in_beta(m, p);
    if (!q.is_monic() || !p.z_coeff(p.degree_z()).is_monic() || p.z_coeff(p.degree_z()).degree() != 0)
        throw std::invalid_argument("check_t513 needs p monic in z");
    auto boxes = isolate_roots(q, bits);
    size_t gi = match_root(boxes, gamma_approx);
    size_t gci = conj_box(boxes, gi);

    DiscretenessCertificate cert;
    cert.theorem = "T5.13";
    cert.conditions.push_back({"monic", true, "p monic in z, gamma is an algebraic integer", {}});

    long work = bits + 64;
    PrecisionScope ps(work);
    for (auto& bk : galois_conjugates_beta(n, work)) {
        Condition c{"roots_in_interval_k" + std::to_string(bk.k), true, "", {}};
        auto coeffs = p.at_b(Complex(bk.value));
        auto zs = aberth_roots(coeffs, work);
        auto rad = inclusion_radii(coeffs, zs);
        int skip_g = bk.k == 1 ? 1 : 0;
        int skip_c = (bk.k == 1 && gci != gi) ? 1 : 0;
        int checked = 0;
        std::ostringstream ev;
        for (size_t j = 0; j < zs.size(); ++j) {
            size_t hit = boxes.size();
            for (size_t b = 0; b < boxes.size(); ++b)
                if (boxes[b].contains(zs[j], rad[j] + ldexp(Real(1L), -(bits / 2)))) hit = b;
            if (hit == boxes.size()) throw std::logic_error("root of p(z, beta_k) outside every root box of q");
            if (hit == gi && skip_g > 0) {
                --skip_g;
                continue;
            }
            if (hit == gci && skip_c > 0) {
                --skip_c;
                continue;
            }
            ++checked;
            if (!boxes[hit].is_real) {
                c.pass = false;
                ev << "non-real root " << zs[j].str(8) << "; ";
                continue;
            }
            RealRoot r = boxes[hit].real_root();
            RealRoot b = bk.root;
            int vs_beta = compare_roots(r, b);
            int vs_zero = r.compare(0);
            c.intervals.push_back(interval_of(r));
            if (vs_beta == 0 || vs_zero == 0) {
                c.pass = false;
                ev << "root at an interval endpoint; ";
            } else if (vs_beta < 0 || vs_zero > 0) {
                c.pass = false;
                ev << "real root " << fmt(r.midpoint().get_d()) << " outside the interval; ";
            }
        }
        ev << checked << " root(s) checked against (" << fmt(bk.value.to_double()) << ", 0)";
        c.evidence = ev.str();
        cert.conditions.push_back(std::move(c));
    }
    finish(cert);
    return cert;
}

DiscretenessCertificate check_t510(const FieldElem& gamma, const FieldElem& beta, size_t identity) {
    const Field& K = gamma.field();
    if (gamma.is_zero() || gamma == beta) throw std::invalid_argument("gamma in {0, beta} gives an elementary group");
    DiscretenessCertificate cert;
    cert.theorem = "T5.10";
    bool integral = gamma.is_integral() && beta.is_integral();
    cert.conditions.push_back({"integral", integral,
                               integral ? "characteristic polynomials of gamma and beta have integer coefficients"
                                        : "gamma or beta is not an algebraic integer",
                               {}});
    bool sig = K->r2() <= 1;
    cert.conditions.push_back({"signature", sig,
                               "(r1, r2) = (" + std::to_string(K->r1()) + ", " + std::to_string(K->r2()) + ")", {}});
    FieldElem b4 = beta + mpq_class(4);
    FieldElem gg = gamma * (gamma - beta);
    for (int k = 0; k < K->r1(); ++k) {
        if (static_cast<size_t>(k) == identity) continue;
        std::string s = std::to_string(k);
        bool br = beta.real_sign(k) < 0 && b4.real_sign(k) > 0;
        Condition cb{"beta_range_sigma" + s, br, "-4 < sigma(beta) < 0", {}};
        double bv = beta.embed(static_cast<size_t>(k), 64).re.to_double();
        cb.intervals.push_back({bv, bv});
        cert.conditions.push_back(std::move(cb));
        bool gs = gg.real_sign(k) < 0;
        Condition cg{"gamma_sign_sigma" + s, gs, "sigma(gamma(gamma - beta)) < 0", {}};
        double gv = gg.embed(static_cast<size_t>(k), 64).re.to_double();
        cg.intervals.push_back({gv, gv});
        cert.conditions.push_back(std::move(cg));
    }
    finish(cert);
    return cert;
}

FieldElem beta_in_field(const Field& K, int n, const FieldElem& gamma, const BivarIntPoly& p) {
    IntPoly m = beta_minpoly(n);
    if (m.degree() == 1) return FieldElem::constant(K, -mpq_class(m.coeff(0)));
    std::vector<FieldElem> mm, pg;
    for (const auto& c : m.coeffs()) mm.push_back(FieldElem::constant(K, mpq_class(c)));
    // p(gamma, X) as a polynomial in X
    for (int j = 0; j <= p.degree_b(); ++j) {
        FieldElem acc = FieldElem::constant(K, 0);
        FieldElem gp = FieldElem::constant(K, 1);
        for (int i = 0; i <= p.degree_z(); ++i) {
            acc = acc + mpq_class(p.coeff(i, j)) * gp;
            gp = gp * gamma;
        }
        pg.push_back(acc);
    }
    auto g = poly_gcd_over(K, mm, pg);
    if (g.size() != 2) throw std::invalid_argument("beta is not determined by gamma inside the field");
    return -g[0];
}

}  // namespace akg
