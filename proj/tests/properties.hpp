// Randomized invariant checks shared by the unit suite (small counts) and the
// acceptance run (full counts).
#pragma once

#include <random>
#include <string>

#include "akg/geometry.hpp"
#include "akg/params.hpp"
#include "akg/resultant.hpp"
#include "akg/roots.hpp"

namespace akg::props {

struct Tally {
    int trials = 0;
    int failures = 0;
    double worst = 0;  // largest residual seen

    void record(double r, double tol) {
        ++trials;
        if (!(r <= tol)) ++failures;
        if (r > worst || r != r) worst = r;
    }
    bool ok() const { return failures == 0 && trials > 0; }
};

inline Complex rand_c(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return Complex(u(rng), u(rng));
}

inline Mat2C rand_sl2(std::mt19937_64& rng) {
    Mat2C m;
    do m.a = rand_c(rng, -2, 2);
    while (abs(m.a) < Real(0.5));
    m.b = rand_c(rng, -2, 2);
    m.c = rand_c(rng, -2, 2);
    m.d = (Complex(1L) + m.b * m.c) / m.a;
    return m;
}

// f^2 = tr(f) f - 1, fgf = -tr(g) + tr(fg) f + g,
// fg + gf = (tr(fg) - tr f tr g) + tr(g) f + tr(f) g
inline Tally trace_identities(int count, unsigned seed, double tol = 1e-25) {
    PrecisionScope ps(128);
    std::mt19937_64 rng(seed);
    Tally t;
    Mat2C I = Mat2C::identity();
    for (int k = 0; k < count; ++k) {
        Mat2C f = rand_sl2(rng), g = rand_sl2(rng);
        Complex tf = f.trace(), tg = g.trace(), tfg = (f * g).trace();
        double r1 = (f * f - (f * tf - I)).max_abs().to_double();
        double r2 = (f * g * f - (I * (-tg) + f * tfg + g)).max_abs().to_double();
        double r3 = (f * g + g * f - (I * (tfg - tf * tg) + f * tg + g * tf)).max_abs().to_double();
        t.record(std::max({r1, r2, r3}), tol);
    }
    return t;
}

// gamma(f, g f g^-1) computed from matrices against gamma(gamma - beta)
inline Tally conjugation_map(int count, unsigned seed, double tol = 1e-25) {
    PrecisionScope ps(128);
    std::mt19937_64 rng(seed);
    Tally t;
    for (int k = 0; k < count; ++k) {
        Complex g = rand_c(rng, -3, 3);
        Complex b;
        do b = rand_c(rng, -5, 1);
        while (abs(b) < Real(0.1) || abs(b + Complex(4L)) < Real(0.1));
        auto fg = realize(g, b);
        Complex m = gamma_of_word(fg, parse_word("gfg", 3));
        Complex e = conj_map(g, b);
        t.record((abs(m - e) / (Real(1L) + abs(e))).to_double(), tol);
    }
    return t;
}

// cosh delta(f, hfh^-1) from the conjugation map against the direct formula
inline Tally conj_distance_consistency(int count, unsigned seed, double tol = 1e-25) {
    PrecisionScope ps(128);
    std::mt19937_64 rng(seed);
    Tally t;
    for (int k = 0; k < count; ++k) {
        Complex g = rand_c(rng, -3, 3);
        Complex b(std::uniform_real_distribution<double>(-3.9, -0.1)(rng), 0.0);
        Real a = axial_distance(conj_map(g, b), b, b);
        Real c = conj_axis_distance(g, b);
        t.record(abs(a - c).to_double(), tol);
    }
    return t;
}

inline IntPoly rand_poly(std::mt19937_64& rng, int maxdeg, int bound) {
    std::uniform_int_distribution<int> d(1, maxdeg), c(-bound, bound);
    int n = d(rng);
    std::vector<mpz_class> v(n + 1);
    for (auto& x : v) x = c(rng);
    if (v.back() == 0) v.back() = 1;
    return IntPoly(v);
}

// Res(a, bc) = Res(a, b) Res(a, c)
inline Tally resultant_multiplicative(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    Tally t;
    for (int k = 0; k < count; ++k) {
        IntPoly a = rand_poly(rng, 6, 9), b = rand_poly(rng, 3, 9), c = rand_poly(rng, 3, 9);
        bool eq = resultant(a, b * c) == resultant(a, b) * resultant(a, c);
        t.record(eq ? 0 : 1, 0);
    }
    return t;
}

// Sturm count on a bounding interval against the real boxes from isolation
inline Tally sturm_vs_isolation(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    Tally t;
    for (int k = 0; k < count; ++k) {
        IntPoly p = rand_poly(rng, 6, 9);
        if (p.degree() < 1) continue;
        if (discriminant(p) == 0) continue;
        // Cauchy bound
        mpz_class m = 0;
        for (const auto& c : p.coeffs()) m = std::max(m, mpz_class(abs(c)));
        mpq_class B = mpq_class(m, abs(p.lc())) + 1;
        int s = sturm_count(p, -B, B);
        int real = 0;
        for (const auto& box : isolate_roots(p)) real += box.is_real ? 1 : 0;
        t.record(s == real ? 0 : 1, 0);
    }
    return t;
}

// axial_distance is constant on the orbit {g, b - g, conj g, b - conj g}
inline Tally orbit_invariance(int count, unsigned seed, double tol = 1e-25) {
    PrecisionScope ps(128);
    std::mt19937_64 rng(seed);
    Tally t;
    for (int k = 0; k < count; ++k) {
        Real b(std::uniform_real_distribution<double>(-3.9, -0.1)(rng));
        Complex g = rand_c(rng, -4, 2);
        auto o = normalize_symmetry(g, b);
        Real d0 = axial_distance(o.canonical, Complex(b), Complex(-4L));
        double worst = 0;
        for (const auto& m : o.orbit)
            worst = std::max(worst, abs(axial_distance(m, Complex(b), Complex(-4L)) - d0).to_double());
        t.record(worst, tol);
    }
    return t;
}

// beta = -1: gamma -> gamma^3 drives 0 < |gamma| < 1 to zero
inline Tally cube_map_to_zero(int count, unsigned seed, int max_iter = 30) {
    PrecisionScope ps(128);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> r(0.01, 0.99), th(0, 6.283185307179586);
    Tally t;
    for (int k = 0; k < count; ++k) {
        double rho = r(rng), a = th(rng);
        auto tr = word_map_iterate(Complex(rho * std::cos(a), rho * std::sin(a)), Complex(-1L), WordMap::cube, max_iter);
        double last = abs(tr.points.back()).to_double();
        bool ok = tr.verdict == TrajectoryVerdict::converges_to_zero && last < 1e-10 && tr.steps <= max_iter;
        t.record(ok ? last : 1, 1e-10);
    }
    return t;
}

}  // namespace akg::props
