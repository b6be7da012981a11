#include <doctest.h>

#include <cmath>

#include "akg/params.hpp"

using namespace akg;

TEST_CASE("beta minimal polynomials") {
    CHECK(beta_minpoly(3) == IntPoly{3, 1});
    CHECK(beta_minpoly(4) == IntPoly{2, 1});
    CHECK(beta_minpoly(6) == IntPoly{1, 1});
    CHECK(beta_minpoly(5) == IntPoly{5, 5, 1});
    CHECK(beta_minpoly(7).degree() == 3);
    CHECK_THROWS_AS(beta_minpoly(2), std::invalid_argument);
    CHECK_THROWS_AS(beta_minpoly(8), std::invalid_argument);
    for (int n = 3; n <= 7; ++n) {
        double b = -4 * std::pow(std::sin(M_PI / n), 2);
        CHECK(beta_value(n).to_double() == doctest::Approx(b).epsilon(1e-14));
        CHECK(abs(beta_minpoly(n).eval(beta_value(n))).to_double() < 1e-30);
    }
}

TEST_CASE("galois conjugates of beta") {
    auto c5 = galois_conjugates_beta(5);
    REQUIRE(c5.size() == 2);
    CHECK(c5[0].k == 1);
    CHECK(c5[1].k == 2);
    CHECK(c5[0].value.to_double() == doctest::Approx(-1.381966011250105));
    CHECK(c5[1].value.to_double() == doctest::Approx(-3.618033988749895));
    CHECK_FALSE(c5[0].rational);

    auto c7 = galois_conjugates_beta(7);
    REQUIRE(c7.size() == 3);
    for (size_t j = 0; j < 3; ++j) {
        double b = -4 * std::pow(std::sin(c7[j].k * M_PI / 7), 2);
        CHECK(c7[j].value.to_double() == doctest::Approx(b).epsilon(1e-14));
        if (j > 0) CHECK(c7[j].value < c7[j - 1].value);
    }

    auto c4 = galois_conjugates_beta(4);
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].rational);
}

TEST_CASE("symmetry orbit") {
    Real beta(-3L);
    Complex g(-2.0, -0.4);
    auto o = normalize_symmetry(g, beta);
    CHECK(o.orbit.size() == 4);
    CHECK(o.canonical.re.to_double() >= -1.5);
    CHECK(o.canonical.im.to_double() >= 0);
    CHECK(o.canonical.re.to_double() == doctest::Approx(-1.0));
    CHECK(o.canonical.im.to_double() == doctest::Approx(0.4));
    // every member normalizes to the same representative
    for (const auto& m : o.orbit) {
        auto o2 = normalize_symmetry(m, beta);
        CHECK(abs(o2.canonical - o.canonical).to_double() < 1e-30);
    }
    // a real point on the symmetry line is fixed by everything
    auto fixed = normalize_symmetry(Complex(-1.5, 0.0), beta);
    CHECK(fixed.orbit.size() == 1);
}

TEST_CASE("make_params") {
    BivarIntPoly quartic = BivarIntPoly::from_univariate(IntPoly{1, 9, 12, 6, 1});
    auto gp = make_params(3, quartic, Complex(-1.5, 0.6066));
    CHECK(gp.q == IntPoly{1, 9, 12, 6, 1});
    CHECK(gp.gamma().re.to_double() == doctest::Approx(-1.5));
    CHECK(gp.gamma().im.to_double() == doctest::Approx(0.6066).epsilon(1e-3));
    CHECK_FALSE(gp.gamma_real());

    // nothing near the approximation
    CHECK_THROWS_AS(make_params(3, quartic, Complex(5.0, 5.0)), std::invalid_argument);
    // equidistant from the conjugate pair
    CHECK_THROWS_AS(make_params(3, quartic, Complex(-1.5, 0.0)), std::invalid_argument);
    // excluded values
    CHECK_THROWS_AS(make_params(3, BivarIntPoly::from_univariate(IntPoly{3, 1}), Complex(-3.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_params(4, BivarIntPoly::from_univariate(IntPoly{0, 1}), Complex(0.0, 0.0)),
                    std::invalid_argument);
    // not monic in z
    CHECK_THROWS_AS(make_params(3, BivarIntPoly::from_univariate(IntPoly{1, 1, 2}), Complex(-0.25, 0.66)),
                    std::invalid_argument);
}

TEST_CASE("make_params with beta in p") {
    // z^2 - b z + 1 over Q(beta_5): q is the resultant with b^2 + 5b + 5
    BivarIntPoly p(std::vector<std::vector<mpz_class>>{{1}, {0, -1}, {1}});
    auto gp = make_params(5, p, Complex(-0.6909, 0.7228));
    CHECK(gp.q == IntPoly{1, 5, 7, 5, 1});
    CHECK(abs(gp.gamma() * gp.gamma() - gp.gamma() * Complex(gp.beta) + Complex(1L)).to_double() < 1e-30);
}
