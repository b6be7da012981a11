#include <doctest.h>
#include <cmath>

#include "akg/volume.hpp"

using namespace akg;

TEST_CASE("zeta of the -275 quartic") {
    PrecisionScope ps(128);
    auto z = zeta2(IntPoly{1, 9, 12, 6, 1}, 20000);
    // independent Euler product to the same bound
    CHECK(z.value.to_double() == doctest::Approx(1.05373738055).epsilon(1e-9));
    CHECK(z.tail_bound.to_double() >= 0);
    CHECK(z.tail_bound.to_double() < 1e-3);
    CHECK(z.bracketed_primes.empty());
    CHECK(quartic_covolume(mpz_class(-275), z.value).to_double() == doctest::Approx(0.0390501064).epsilon(1e-8));
}

TEST_CASE("zeta increases with the prime bound and stays inside the tail bound") {
    PrecisionScope ps(128);
    IntPoly f{2, 4, 4, 1};
    auto a = zeta2(f, 1000);
    auto b = zeta2(f, 20000);
    CHECK(b.value >= a.value);
    CHECK(b.value.to_double() <= (a.value + a.tail_bound).to_double() + 1e-15);
}

TEST_CASE("covolume formulas") {
    PrecisionScope ps(128);
    Real one(1L);
    double pi = 3.14159265358979323846;
    CHECK(quartic_covolume(mpz_class(-275), one).to_double() ==
          doctest::Approx(std::pow(275.0, 1.5) / (128 * std::pow(pi, 6))));
    CHECK(cubic_covolume(mpz_class(-44), one, 2).to_double() ==
          doctest::Approx(std::pow(44.0, 1.5) / (64 * std::pow(pi, 4))));
    CHECK_THROWS_AS(quartic_covolume(mpz_class(725), one), std::invalid_argument);
    CHECK_THROWS_AS(cubic_covolume(mpz_class(49), one, 7), std::invalid_argument);
}
