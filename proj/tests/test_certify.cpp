#include <doctest.h>

#include "akg/certify.hpp"

using namespace akg;

namespace {

bool has_interval_near(const Condition& c, double x, double tol = 1e-5) {
    for (auto [lo, hi] : c.intervals)
        if (lo - tol <= x && x <= hi + tol) return true;
    return false;
}

const Condition& cond(const DiscretenessCertificate& cert, const std::string& id) {
    for (const auto& c : cert.conditions)
        if (c.id == id) return c;
    FAIL("no condition " << id);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("quartic worked example, order three") {
    auto cert = check_t514(IntPoly{1, 9, 12, 6, 1}, Complex(-1.5, 0.6066), 3);
    CHECK(cert.passed());
    CHECK(cert.theorem == "T5.14");
    const auto& c = cond(cert, "other_roots_in_interval");
    CHECK(c.pass);
    CHECK(c.intervals.size() == 2);
    CHECK(has_interval_near(c, -0.13324));
    CHECK(has_interval_near(c, -2.86676));
}

TEST_CASE("order five worked example checks the second conjugate") {
    BivarIntPoly p(std::vector<std::vector<mpz_class>>{{1}, {0, -1}, {1}});
    auto cert = check_t513(p, Complex(-0.6909, 0.7228), 5);
    CHECK(cert.passed());
    CHECK(cert.theorem == "T5.13");
    const auto& k2 = cond(cert, "roots_in_interval_k2");
    CHECK(k2.pass);
    CHECK(has_interval_near(k2, -0.301522));
    CHECK(has_interval_near(k2, -3.31651));
    // for k = 1 only gamma and its conjugate exist, nothing left to check
    CHECK(cond(cert, "roots_in_interval_k1").intervals.empty());
}

TEST_CASE("a real root below beta fails") {
    // z^3 + z^2 + 1 has a real root near -1.4656 < -1
    auto cert = check_t514(IntPoly{1, 0, 1, 1}, Complex(0.2328, 0.7926), 6);
    CHECK_FALSE(cert.passed());
    CHECK(cert.verdict == Verdict::inconclusive);
    // the same root is inside (-3, 0)
    CHECK(check_t514(IntPoly{1, 0, 1, 1}, Complex(0.2328, 0.7926), 3).passed());
}

TEST_CASE("a root at beta is not inside the open interval") {
    // (z + 1)(z^2 + z + 1) with beta = -1
    auto cert = check_t514(IntPoly{1, 2, 2, 1}, Complex(-0.5, 0.866), 6);
    CHECK_FALSE(cert.passed());
}

TEST_CASE("bad input") {
    CHECK_THROWS_AS(check_t514(IntPoly{1, 9, 12, 6, 1}, Complex(-1.5, 0.6066), 5), std::invalid_argument);
    CHECK_THROWS_AS(check_t514(IntPoly{1, 9, 12, 6, 2}, Complex(-1.5, 0.6066), 3), std::invalid_argument);
    CHECK_THROWS_AS(check_t514(IntPoly{1, 9, 12, 6, 1}, Complex(7.0, 7.0), 3), std::invalid_argument);
    CHECK_THROWS_AS(check_t514(IntPoly{3, 1}, Complex(-3.0, 0.0), 3), std::invalid_argument);
}

TEST_CASE("t510 on the quartic example") {
    auto K = NumberField::make(IntPoly{1, 9, 12, 6, 1});
    auto g = FieldElem::gen(K);
    auto b = beta_in_field(K, 3, g, BivarIntPoly::from_univariate(IntPoly{1, 9, 12, 6, 1}));
    CHECK(b == FieldElem::constant(K, -3));
    size_t id = 0;
    for (size_t k = 0; k < K->embeddings().size(); ++k)
        if (!K->embeddings()[k].is_real && K->embeddings()[k].center.im > 0) id = k;
    auto cert = check_t510(g, b, id);
    CHECK(cert.theorem == "T5.10");
    CHECK(cert.passed());
}
