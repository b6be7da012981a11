#include <doctest.h>

#include "akg/quatalg.hpp"

using namespace akg;

namespace {

HilbertSymbol rational_symbol(const Field& K, long a, long b) {
    return {FieldElem::constant(K, a), FieldElem::constant(K, b)};
}

}  // namespace

TEST_CASE("(-1,-1) over an unramified quadratic extension of Q_2 splits") {
    // 2 is inert in Q(sqrt 5): local degree 2 kills the symbol
    auto K = NumberField::make(IntPoly{-1, -1, 1});
    auto loc = local_symbols(rational_symbol(K, -1, -1), 2);
    REQUIRE(loc.size() == 1);
    CHECK(loc[0].e == 1);
    CHECK(loc[0].f == 2);
    CHECK(loc[0].value == 1);
}

TEST_CASE("(-1,-1) at split dyadic primes matches Q_2") {
    // 2 splits in Q(sqrt -7), each completion is Q_2 where (-1,-1) = -1
    auto K = NumberField::make(IntPoly{2, -1, 1});
    auto s = rational_symbol(K, -1, -1);
    auto loc = local_symbols(s, 2);
    REQUIRE(loc.size() == 2);
    for (const auto& l : loc) {
        CHECK(l.f == 1);
        CHECK(l.value == -1);
    }
    auto rep = classify_finite_ramification(s);
    CHECK(rep.real_places == 0);
    CHECK(rep.finite == FiniteStatus::primes);
    CHECK(rep.finite_norms == std::vector<mpz_class>{2, 2});
    CHECK(rep.parity_even());
}

TEST_CASE("tame symbol at split odd primes") {
    // Q(sqrt -2): 3 splits; -1 is not a square mod 3
    auto K = NumberField::make(IntPoly{2, 0, 1});
    auto s = rational_symbol(K, -1, 3);
    auto loc = local_symbols(s, 3);
    REQUIRE(loc.size() == 2);
    CHECK(loc[0].value == -1);
    CHECK(loc[1].value == -1);
    // (-1, 5): 5 is inert in Q(sqrt -2) and the residue field has -1 as a square
    auto loc5 = local_symbols(rational_symbol(K, -1, 5), 5);
    REQUIRE(loc5.size() == 1);
    CHECK(loc5[0].f == 2);
    CHECK(loc5[0].value == 1);
    auto rep = classify_finite_ramification(s);
    CHECK(rep.finite == FiniteStatus::primes);
    CHECK(rep.finite_norms == std::vector<mpz_class>{3, 3});
}

TEST_CASE("prime valuations") {
    auto K = NumberField::make(IntPoly{2, 0, 1});
    auto t = FieldElem::gen(K);
    auto v3 = prime_valuations(FieldElem::constant(K, 9) * (t + 1), 3);
    REQUIRE(v3.has_value());
    REQUIRE(v3->size() == 2);
    // t + 1 has norm 3, so it lies in exactly one of the two primes
    int total = (*v3)[0].v + (*v3)[1].v;
    CHECK(total == 5);
    CHECK(std::abs((*v3)[0].v - (*v3)[1].v) == 1);
    auto v2 = prime_valuations(t, 2);
    REQUIRE(v2.has_value());
    REQUIRE(v2->size() == 1);
    CHECK((*v2)[0].e == 2);
    CHECK((*v2)[0].v == 1);
}

TEST_CASE("quartic example is unramified at finite primes") {
    auto K = NumberField::make(IntPoly{1, 9, 12, 6, 1});
    auto g = FieldElem::gen(K);
    auto beta = FieldElem::constant(K, -3);
    auto s = invariant_symbol(g, beta);
    CHECK(s.a == FieldElem::constant(K, -3));
    CHECK(s.b == g * (g + 3));
    CHECK(real_ramification(s).size() == 2);
    auto rep = classify_finite_ramification(s, order_disc_norm(3, g, beta));
    CHECK(rep.finite == FiniteStatus::unramified);
    CHECK(rep.finite_norms.empty());
    CHECK(rep.parity_even());
    CHECK(is_minus_one_minus_one_possible(rep, K) == RuleOutcome::consistent);
}

TEST_CASE("(-1,-1) rule") {
    // an odd ramified prime rules it out
    auto K = NumberField::make(IntPoly{2, 0, 1});
    auto rep = classify_finite_ramification(rational_symbol(K, -1, 3));
    CHECK(is_minus_one_minus_one_possible(rep, K) == RuleOutcome::ruled_out);
}
