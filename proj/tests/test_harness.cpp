#include <doctest.h>

#include <json.hpp>

#include "akg/harness.hpp"

using namespace akg;
using nlohmann::json;

namespace {

std::vector<CatalogRow> pick(const std::vector<std::pair<int, int>>& ids) {
    auto all = load_catalog(AKG_DEFAULT_CATALOG);
    std::vector<CatalogRow> out;
    for (const auto& r : all)
        for (auto [n, i] : ids)
            if (r.n == n && r.i == i) out.push_back(r);
    return out;
}

}  // namespace

TEST_CASE("parse_poly") {
    CHECK(parse_poly("z^3 + 4z^2 + 4z + 2") == BivarIntPoly::from_univariate(IntPoly{2, 4, 4, 1}));
    CHECK(parse_poly("(z+1)(z^2+3z+1)") == BivarIntPoly::from_univariate(IntPoly{1, 4, 4, 1}));
    auto p = parse_poly("z^2-bz+1");
    CHECK(p == BivarIntPoly(std::vector<std::vector<mpz_class>>{{1}, {0, -1}, {1}}));
    CHECK(parse_poly("z^2-βz+1") == p);
    CHECK(parse_poly("z^2 - b*z + 1") == p);
    CHECK(parse_poly("-(z-2)^2") == BivarIntPoly::from_univariate(IntPoly{-4, 4, -1}));
    CHECK_THROWS_AS(parse_poly("z^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("z + y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("(z+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
}

TEST_CASE("malformed rows are rejected with the row id") {
    json good = {{"n", 3}, {"i", 9}, {"poly_text", "z^2+3z+3"}, {"gamma_approx", {-1.5, 0.866}}};
    CHECK_NOTHROW(parse_row(good));
    auto bad_n = good;
    bad_n["n"] = 9;
    CHECK_THROWS_AS(parse_row(bad_n), std::invalid_argument);
    auto bad_g = good;
    bad_g["gamma_approx"] = {1.0};
    try {
        parse_row(bad_g);
        FAIL("accepted a one-element gamma");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("3,9") != std::string::npos);
    }
    auto no_poly = good;
    no_poly.erase("poly_text");
    CHECK_THROWS_AS(parse_row(no_poly), std::invalid_argument);
    auto no_n = good;
    no_n.erase("n");
    CHECK_THROWS_AS(parse_row(no_n), std::invalid_argument);
}

TEST_CASE("empty catalog gives headers and an empty summary") {
    Report rep = run_catalog({}, RunOptions{});
    CHECK(rep.rows.empty());
    CHECK(rep.unexpected() == 0);
    auto csv = emit_tables(rep, TableFormat::csv);
    CHECK(csv == "n,i,cell,computed,expected,status,note\n");
    auto j = json::parse(emit_tables(rep, TableFormat::json));
    CHECK(j["rows"].empty());
    CHECK(emit_tables(rep, TableFormat::markdown).find("Summary") != std::string::npos);
}

TEST_CASE("format names") {
    CHECK(parse_table_format("md") == TableFormat::markdown);
    CHECK(parse_table_format("csv") == TableFormat::csv);
    CHECK(parse_table_format("json") == TableFormat::json);
    CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
}

TEST_CASE("rows run, round-trip through json and do not depend on thread count") {
    auto rows = pick({{3, 3}, {3, 9}, {4, 3}, {5, 2}, {6, 2}});
    REQUIRE(rows.size() == 5);
    RunOptions one;
    one.prime_bound = 5000;
    RunOptions four = one;
    four.threads = 4;
    Report a = run_catalog(rows, one);
    Report b = run_catalog(rows, four);
    CHECK(a.unexpected() == 0);
    std::string ja = emit_tables(a, TableFormat::json);
    CHECK(ja == emit_tables(b, TableFormat::json));

    auto j = json::parse(ja);
    REQUIRE(j["rows"].size() == 5);
    for (size_t k = 0; k < a.rows.size(); ++k) {
        const auto& jr = j["rows"][k];
        CHECK(jr["n"] == a.rows[k].n);
        CHECK(jr["i"] == a.rows[k].i);
        for (const auto& c : a.rows[k].cells) {
            bool found = false;
            for (const auto& jc : jr["cells"])
                if (jc["name"] == c.name) {
                    found = true;
                    CHECK(jc["computed"] == c.computed);
                    CHECK(jc["status"] == cell_status_name(c.status));
                }
            CHECK(found);
        }
    }
    // ordered by (n, i)
    for (size_t k = 1; k < a.rows.size(); ++k)
        CHECK(std::make_pair(a.rows[k - 1].n, a.rows[k - 1].i) < std::make_pair(a.rows[k].n, a.rows[k].i));

    const Cell* cert = a.rows[0].cell("certificate");
    REQUIRE(cert);
    CHECK(cert->status == CellStatus::match);
}

TEST_CASE("a wrong expectation is a mismatch") {
    auto rows = pick({{3, 9}});
    REQUIRE(rows.size() == 1);
    rows[0].expected["delta"] = ".9999";
    Report rep = run_catalog(rows, RunOptions{});
    const Cell* d = rep.rows[0].cell("delta");
    REQUIRE(d);
    CHECK(d->status == CellStatus::mismatch);
    CHECK(rep.unexpected() >= 1);
}
