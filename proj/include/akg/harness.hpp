// Catalog rows, the end-to-end pipeline per row, and table regeneration with
// per-cell comparison against the printed values.
#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "akg/poly.hpp"

namespace akg {

struct RunOptions {
    long bits = 128;
    int threads = 1;
    long prime_bound = 100000;
    int max_letters = 9;
};

struct CatalogRow {
    int n = 0, i = 0;
    std::string poly_text;
    BivarIntPoly p;
    double gamma_re = 0, gamma_im = 0;
    nlohmann::json expected = nlohmann::json::object();
    nlohmann::json witness;       // {word, gamma, beta_h?} or null
    nlohmann::json finite_group;  // {gamma, group} or null
    nlohmann::json assumed;       // {ramf: [...]} or null
    std::map<std::string, nlohmann::json> annotations;  // by cell name

    std::string id() const { return std::to_string(n) + "," + std::to_string(i); }
};

// Polynomials in z and b (beta) with integer coefficients: "z^2-b*z+1",
// "(z+1)(z^2+3z+1)", "z^3 + 4z^2 + 4z + 2". "β" is accepted for b.
BivarIntPoly parse_poly(const std::string& text);

// Throws std::invalid_argument naming the row on malformed input.
CatalogRow parse_row(const nlohmann::json& j);
std::vector<CatalogRow> parse_catalog(const nlohmann::json& j);
std::vector<CatalogRow> load_catalog(const std::string& path);

enum class CellStatus { match, mismatch, expected_mismatch, skipped };
const char* cell_status_name(CellStatus s);

struct Cell {
    std::string name;
    std::string computed;
    std::string expected;
    CellStatus status = CellStatus::skipped;
    std::string note;
    bool flagged = false;  // the catalog annotates this cell
};

struct ReportRow {
    int n = 0, i = 0;
    std::string poly_text;
    std::vector<Cell> cells;
    nlohmann::json detail = nlohmann::json::object();
    std::string error;  // set when the row could not be processed

    const Cell* cell(const std::string& name) const;
    std::string id() const { return std::to_string(n) + "," + std::to_string(i); }
};

struct Report {
    std::vector<ReportRow> rows;  // ordered by (n, i)
    int count(CellStatus s) const;
    // mismatches plus rows that failed to run
    int unexpected() const;
};

ReportRow run_row(const CatalogRow& row, const RunOptions& opt);
// Rows in parallel over opt.threads; output ordered by (n, i).
Report run_catalog(const std::vector<CatalogRow>& rows, const RunOptions& opt);

enum class TableFormat { markdown, csv, json };
TableFormat parse_table_format(const std::string& s);
std::string emit_tables(const Report& report, TableFormat fmt);

}  // namespace akg
