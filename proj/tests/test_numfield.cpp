#include <doctest.h>

#include <random>

#include "akg/numfield.hpp"
#include "akg/resultant.hpp"

using namespace akg;

TEST_CASE("signature") {
    auto K1 = NumberField::make(IntPoly{3, 3, 1});
    CHECK(K1->r1() == 0);
    CHECK(K1->r2() == 1);
    auto K2 = NumberField::make(IntPoly{1, 9, 12, 6, 1});
    CHECK(K2->r1() == 2);
    CHECK(K2->r2() == 1);
    auto K3 = NumberField::make(IntPoly{1, 3, 1});
    CHECK(K3->r1() == 2);
    CHECK(K3->r2() == 0);
    CHECK_THROWS_AS(NumberField::make(IntPoly{1, 2, 1}), std::invalid_argument);
}

TEST_CASE("field_norm of gamma(gamma+3)") {
    for (auto [p, expected] : std::vector<std::pair<IntPoly, long>>{
             {IntPoly{2, 4, 4, 1}, -2}, {IntPoly{1, 9, 12, 6, 1}, 1}, {IntPoly{3, 5, 4, 1}, -9}}) {
        auto K = NumberField::make(p);
        auto g = FieldElem::gen(K);
        CHECK(abs((g * (g + 3)).norm()) == std::abs(expected));
        // sign convention: determinant of the multiplication matrix
        CHECK((g * (g + 3)).norm() == expected);
    }
}

TEST_CASE("norm is multiplicative and agrees with the resultant") {
    auto K = NumberField::make(IntPoly{1, 3, 7, 5, 1});
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int t = 0; t < 50; ++t) {
        std::vector<mpq_class> a, b;
        for (int i = 0; i < 4; ++i) {
            a.emplace_back(c(rng), 1 + (t % 3));
            b.emplace_back(c(rng));
        }
        FieldElem x(K, RatPoly(a)), y(K, RatPoly(b));
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!y.is_zero()) {
            // monic f: N(y) = Res(f, y)
            auto [yi, den] = y.rep().split_denominator();
            CHECK(y.norm() == mpq_class(resultant(K->poly(), yi)));
            CHECK((x / y) * y == x);
        }
    }
}

TEST_CASE("charpoly and integrality") {
    auto K = NumberField::make(IntPoly{1, 3, 1});
    auto g = FieldElem::gen(K);
    CHECK(g.charpoly() == IntPoly{1, 3, 1}.to_rat());
    CHECK(g.is_integral());
    CHECK(!(mpq_class(1, 2) * g).is_integral());
    // (g+1)^2 has minpoly of degree 2
    CHECK((g + 1).pow(2).minpoly().degree() == 2);
    auto r = FieldElem::constant(K, 3);
    CHECK(r.minpoly().degree() == 1);
}

TEST_CASE("certified real signs") {
    auto K = NumberField::make(IntPoly{1, 9, 12, 6, 1});
    auto g = FieldElem::gen(K);
    // real roots -2.86676, -0.13324
    CHECK(g.real_sign(0) == -1);
    CHECK((g + 3).real_sign(0) == 1);
    CHECK((g * (g + 3)).real_sign(0) == -1);
    CHECK((g * (g + 3)).real_sign(1) == -1);
    auto Q5 = NumberField::make(IntPoly{-5, 0, 1});
    auto s = FieldElem::gen(Q5);
    CHECK((s - FieldElem::constant(Q5, mpq_class(2236, 1000))).real_sign(1) == 1);
    CHECK((s - FieldElem::constant(Q5, mpq_class(2237, 1000))).real_sign(1) == -1);
}

TEST_CASE("dedekind_p_maximal") {
    CHECK(dedekind_p_maximal(IntPoly{3, 3, 1}, 3));
    CHECK(!dedekind_p_maximal(IntPoly{5, 2, 1}, 2));
    CHECK(dedekind_p_maximal(IntPoly{1, 6, 7, 4, 1}, 2));
    CHECK(dedekind_p_maximal(IntPoly{1, 6, 7, 4, 1}, 5));
}

TEST_CASE("field_discriminant") {
    CHECK(field_discriminant(IntPoly{5, 8, 5, 1}).disc == -23);
    CHECK(field_discriminant(IntPoly{1, 3, 7, 5, 1}).disc == -283);
    CHECK(field_discriminant(IntPoly{1, 1, 3, 1}).disc == -76);
    CHECK(field_discriminant(IntPoly{1, 6, 7, 4, 1}).disc == -400);
    auto g = field_discriminant(IntPoly{5, 2, 1});
    CHECK(g.disc == -4);
    CHECK(g.index == 2);
    // Z[sqrt(-3)] has index 2 in the Eisenstein integers
    CHECK(field_discriminant(IntPoly{3, 0, 1}).disc == -3);
    // x^3 - x^2 - 2x - 8: index 2 although 2 divides only the index
    auto dd = field_discriminant(IntPoly{-8, -2, -1, 1});
    CHECK(dd.disc == -503);
    CHECK(dd.index == 2);
}

TEST_CASE("factor_integer") {
    auto f = factor_integer(mpz_class(-400));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::make_pair(mpz_class(2), 4));
    CHECK(f[1] == std::make_pair(mpz_class(5), 2));
}

TEST_CASE("primes_above") {
    auto P = primes_above(IntPoly{3, 3, 1}, 3);
    REQUIRE(P.size() == 1);
    CHECK(P[0].e == 2);
    CHECK(P[0].norm() == 3);
    auto Q = primes_above(IntPoly{3, 3, 1}, 2);
    REQUIRE(Q.size() == 1);
    CHECK(Q[0].norm() == 4);
}

TEST_CASE("gcd over a number field") {
    // K = Q(sqrt 5); gcd(X^2 - 5, X - t) = X - t
    auto K = NumberField::make(IntPoly{-5, 0, 1});
    auto t = FieldElem::gen(K);
    auto c = [&](long v) { return FieldElem::constant(K, v); };
    auto g = poly_gcd_over(K, {c(-5), c(0), c(1)}, {-t, c(1)});
    REQUIRE(g.size() == 2);
    CHECK(g[0] == -t);
    auto h = poly_gcd_over(K, {c(-2), c(0), c(1)}, {-t, c(1)});
    CHECK(h.size() == 1);
}

TEST_CASE("field discriminants of the catalog fields") {
    // frozen from tests/oracles/derived_oracle.py (search-based p-maximal orders)
    for (const auto& [f, d] : std::vector<std::pair<IntPoly, long>>{
             {IntPoly{1, 3, 1}, 5},  // 3,2
             {IntPoly{1, 9, 12, 6, 1}, -275},  // 3,3
             {IntPoly{1, 3, 7, 5, 1}, -283},  // 3,4
             {IntPoly{2, 4, 4, 1}, -44},  // 3,5
             {IntPoly{5, 8, 5, 1}, -23},  // 3,6
             {IntPoly{1, 2, 3, 1}, -23},  // 3,7
             {IntPoly{1, 6, 8, 5, 1}, -563},  // 3,8
             {IntPoly{3, 3, 1}, -3},  // 3,9
             {IntPoly{3, 5, 4, 1}, -31},  // 3,10
             {IntPoly{1, 0, 6, 5, 1}, -491},  // 3,11
             {IntPoly{-1, 3, 4, 1}, 49},  // 3,12
             {IntPoly{1, 12, 28, 35, 24, 8, 1}, -104875},  // 3,13
             {IntPoly{1, 1, 3, 1}, -76},  // 3,14
             {IntPoly{1, 1, 1}, -3},  // 4,2
             {IntPoly{1, 1, 2, 1}, -23},  // 4,3
             {IntPoly{2, 2, 1}, -4},  // 4,4
             {IntPoly{3, 4, 3, 1}, -31},  // 4,5
             {IntPoly{1, 0, 1, 1}, -31},  // 4,6
             {IntPoly{2, 2, 2, 1}, -44},  // 4,7
             {IntPoly{1, -1, 1, 1}, -44},  // 4,8
             {IntPoly{1, 0, 1}, -4},  // 4,9
             {IntPoly{-1, 1, 1}, 5},  // 4,10
             {IntPoly{1, 6, 7, 4, 1}, -400},  // 4,11
             {IntPoly{1, 4, 4, 3, 1}, -331},  // 4,12
             {IntPoly{1, 0, -2, 1, 1}, -283},  // 4,13
             {IntPoly{1, 5, 7, 5, 1}, -475},  // 5,2
             {IntPoly{1, 1, 2, 4, 1}, -275},  // 5,3
             {IntPoly{1, 3, 3, 3, 1}, -275},  // 5,4
             {IntPoly{1, 7, 7, 8, 11, 6, 1}, -149875},  // 5,6
             {IntPoly{4, 10, 9, 5, 1}, -775},  // 5,7
             {IntPoly{11, 14, 12, 6, 1}, -400},  // 5,8
             {IntPoly{5, 5, 4, 4, 1}, -475},  // 5,9
             {IntPoly{1, 8, 17, 16, 12, 6, 1}, -254875},  // 5,10
             {IntPoly{1, 2, -2, 2, 1}, -400},  // 5,11
             {IntPoly{1, 8, 1, -8, 3, 5, 1}, -188875},  // 5,12
             {IntPoly{1, -1, 1}, -3},  // 6,3
             {IntPoly{2, 1, 1}, -7},  // 6,4
             {IntPoly{1, 2, 1, 1}, -23},  // 6,5
             {IntPoly{1, 1, 0, 1}, -31},  // 6,6
             {IntPoly{1, 0, -1, 1}, -23},  // 6,8
             {IntPoly{1, 7, 17, 21, 17, 7, 1}, -170471},  // 7,2
             {IntPoly{-1, -2, 1, 1}, 49},  // 7,3
         }) {
        CAPTURE(f.str());
        CHECK(field_discriminant(f).disc == d);
    }
}
