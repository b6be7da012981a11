#include <doctest.h>

#include <cmath>
#include <random>

#include "akg/geometry.hpp"
#include "akg/params.hpp"

using namespace akg;

namespace {

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

Complex row_gamma(const IntPoly& q, double re, double im) {
    auto boxes = isolate_roots(q);
    return boxes[match_root(boxes, Complex(re, im))].center;
}

}  // namespace

TEST_CASE("realize") {
    PrecisionScope ps(128);
    auto r = realize(Complex(-3L), Complex(-3L));
    CHECK(abs(r.G.a).to_double() < 1e-35);
    CHECK(dist(r.G.b, Complex(1L)) < 1e-35);
    CHECK(dist(r.G.c, Complex(-1L)) < 1e-35);

    auto s = realize(Complex(-1.5, 0.8660), Complex(-3L));
    CHECK(dist(gamma_of_word(s, parse_word("g", 3)), Complex(-1.5, 0.8660)) < 1e-30);
    CHECK(dist(s.F.det(), Complex(1L)) < 1e-30);
    CHECK(dist(s.G.det(), Complex(1L)) < 1e-30);

    auto t = realize(Complex(0.0, 1.0), Complex(-2L));
    CHECK(dist(t.F.trace(), Complex(std::sqrt(2.0), 0.0)) < 1e-15);
    Mat2C comm = t.F * t.G * t.F.inverse() * t.G.inverse();
    CHECK(dist(comm.trace(), Complex(2.0, 1.0)) < 1e-30);

    CHECK_THROWS_AS(realize(Complex(1L), Complex(0L)), std::invalid_argument);
    CHECK_THROWS_AS(realize(Complex(1L), Complex(-4L)), std::invalid_argument);
}

TEST_CASE("word parsing and printing") {
    auto w = parse_word("gfgf^-1g", 5);
    CHECK(format_word(w) == "gfgf^-1g");
    CHECK(w.letters.size() == 5);
    CHECK(w.letters[3].exp == 4);
    // reduction merges powers and drops g^2
    CHECK(format_word(parse_word("gffg", 5)) == "gf^2g");
    CHECK(parse_word("ggf", 3).letters.size() == 1);
    CHECK(parse_word("fff", 3).letters.empty());
    // g^-1 = g
    CHECK(parse_word("gfg^-1fg", 6) == parse_word("gfgfg", 6));
    // substitution
    CHECK(parse_word("kf;k=gfg", 4) == parse_word("gfgf", 4));
    CHECK(format_word(inverse_word(parse_word("gfgf^2g", 5))) == "gf^-2gf^-1g");
    CHECK_THROWS_AS(parse_word("gxg", 3), std::invalid_argument);
}

TEST_CASE("gamma of words") {
    PrecisionScope ps(128);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 20; ++t) {
        Complex g(u(rng), u(rng));
        auto fg = realize(g, Complex(-1L));
        // gfgfg realizes gamma^3 when beta = -1
        CHECK(dist(gamma_of_word(fg, parse_word("gfg^-1fg", 6)), g * g * g) < 1e-25);
        Complex b(u(rng) - 2, u(rng));
        auto fg2 = realize(g, b);
        CHECK(dist(gamma_of_word(fg2, parse_word("g", 3)), g) < 1e-25);
    }
    Complex g39 = row_gamma(IntPoly{3, 3, 1}, -1.5, 0.866);
    auto fg = realize(g39, Complex(-3L));
    CHECK(dist(gamma_of_word(fg, parse_word("gfg", 3)), Complex(-3L)) < 1e-30);
    CHECK(dist(beta_of_word(fg, parse_word("gfg", 3)), Complex(-3L)) < 1e-30);
}

TEST_CASE("distances") {
    PrecisionScope ps(128);
    CHECK(axial_distance(Complex(0.0, 1.0), Complex(-1L), Complex(-4L)).to_double() ==
          doctest::Approx(0.7642854597).epsilon(1e-9));
    CHECK(axial_distance(Complex(-1L), Complex(-3L), Complex(-4L)).to_double() == doctest::Approx(0.0));
    CHECK(axial_distance(Complex(-1.5, 0.6066), Complex(-3L), Complex(-4L)).to_double() ==
          doctest::Approx(0.1970587557).epsilon(1e-9));
    CHECK(conj_axis_distance(Complex(-1L), Complex(-3L)).to_double() == doctest::Approx(0.0));
    CHECK(conj_axis_distance(Complex(-3L), Complex(-3L)).to_double() == doctest::Approx(0.0));
    CHECK(conj_axis_distance(Complex(0.0, 1.0), Complex(-1L)).to_double() ==
          doctest::Approx(1.528570919).epsilon(1e-9));
    CHECK(dist(conj_map(Complex(-3L), Complex(-3L)), Complex(0L)) == 0);
    CHECK(dist(conj_map(Complex(-1L), Complex(-3L)), Complex(-2L)) == 0);
}

TEST_CASE("word maps") {
    PrecisionScope ps(128);
    auto t = word_map_iterate(Complex(0.5, 0.0), Complex(-1L), WordMap::cube, 30);
    CHECK(t.verdict == TrajectoryVerdict::converges_to_zero);
    CHECK(dist(t.points[1], Complex(0.125, 0.0)) < 1e-30);
    auto circle = word_map_iterate(Complex(cos(Real(1L)), sin(Real(1L))), Complex(-1L), WordMap::cube, 20);
    for (const auto& p : circle.points) CHECK(abs(abs(p) - Real(1L)).to_double() < 1e-25);
    // gamma_{3,9}: the conjugation map lands on beta and then on 0, the cube
    // map leaves the disc
    Complex g39 = row_gamma(IntPoly{3, 3, 1}, -1.5, 0.866);
    auto b = word_map_iterate(g39, Complex(-3L), WordMap::conj, 50);
    REQUIRE(b.points.size() >= 2);
    CHECK(dist(b.points[1], Complex(-3L)) < 1e-30);
    CHECK(b.verdict == TrajectoryVerdict::converges_to_zero);
    CHECK(word_map_iterate(g39, Complex(-3L), WordMap::cube, 50).verdict == TrajectoryVerdict::escapes);
    CHECK(parse_word_map("cube") == WordMap::cube);
    CHECK_THROWS(parse_word_map("square"));
}

TEST_CASE("simple axis search") {
    PrecisionScope ps(128);
    auto w39 = simple_axis_search(row_gamma(IntPoly{3, 3, 1}, -1.5, 0.866), 3);
    REQUIRE(w39);
    CHECK(format_word(w39->word) == "gfg");
    CHECK(w39->kind == WitnessKind::equals_beta);

    auto w43 = simple_axis_search(row_gamma(IntPoly{1, 1, 2, 1}, -0.1225, 0.7448), 4);
    REQUIRE(w43);
    CHECK(format_word(w43->word) == "gfgfg");
    CHECK(dist(w43->gamma_h, Complex(-1L)) < 1e-20);
    CHECK(w43->kind == WitnessKind::interval);

    auto w33 = simple_axis_search(row_gamma(IntPoly{1, 9, 12, 6, 1}, -1.5, 0.6066), 3);
    REQUIRE(w33);
    CHECK(w33->gamma_h.re.to_double() == doctest::Approx(-2.6180339887));

    CHECK_FALSE(simple_axis_search(row_gamma(IntPoly{5, 8, 5, 1}, -1.1225, 0.7448), 3));

    // the thread count does not change the answer
    Complex g = row_gamma(IntPoly{1, 9, 12, 6, 1}, -1.5, 0.6066);
    auto a = simple_axis_search(g, 3, 9, 1);
    auto c = simple_axis_search(g, 3, 9, 4);
    REQUIRE(a);
    REQUIRE(c);
    CHECK(a->word == c->word);
}

TEST_CASE("finite triangle groups") {
    PrecisionScope ps(128);
    // tr^2(fg) = gamma - beta: 0 gives fg of order 2, 1 gives order 3
    CHECK(finite_triangle_group(Complex(-3L), 3) == std::optional<std::string>("D3"));
    CHECK(finite_triangle_group(Complex(-2L), 3) == std::optional<std::string>("A4"));
    CHECK(finite_triangle_group(Complex(-1L), 4) == std::optional<std::string>("S4"));
    CHECK_FALSE(finite_triangle_group(Complex(-1.5, 0.6066), 3));
}
