// Command line front end: catalog tables, single-row checks, simple-axis
// searches, co-volume estimates and word-map grids.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "akg/geometry.hpp"
#include "akg/harness.hpp"
#include "akg/numfield.hpp"
#include "akg/params.hpp"
#include "akg/resultant.hpp"
#include "akg/volume.hpp"

#ifndef AKG_DEFAULT_CATALOG
#define AKG_DEFAULT_CATALOG "data/catalog.json"
#endif

using namespace akg;
using nlohmann::json;

namespace {

struct Grid {
    double re0, re1, im0, im1;
    int nre, nim;
};

// "re0:re1:nre,im0:im1:nim"
Grid parse_grid(const std::string& s) {
    Grid g{};
    char c1, c2, comma, c3, c4;
    std::istringstream is(s);
    if (!(is >> g.re0 >> c1 >> g.re1 >> c2 >> g.nre >> comma >> g.im0 >> c3 >> g.im1 >> c4 >> g.nim) || c1 != ':' ||
        c2 != ':' || comma != ',' || c3 != ':' || c4 != ':' || g.nre < 1 || g.nim < 1)
        throw std::invalid_argument("grid must look like re0:re1:nre,im0:im1:nim");
    return g;
}

const CatalogRow& find_row(const std::vector<CatalogRow>& rows, int n, int i) {
    for (const auto& r : rows)
        if (r.n == n && r.i == i) return r;
    throw std::invalid_argument("no catalog row " + std::to_string(n) + "," + std::to_string(i));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmeticity, discreteness and simple-axis checks for two-generator Kleinian groups"};
    app.require_subcommand(1);
    app.fallthrough();
    RunOptions opt;
    app.add_option("--precision-bits", opt.bits, "working precision in bits")->check(CLI::Range(64L, 4096L));
    app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));

    auto* check = app.add_subcommand("check", "run the full pipeline on one parameter row (catalog schema)");
    std::string params_path;
    check->add_option("params", params_path, "JSON file with one row")->required();

    auto* table = app.add_subcommand("table", "regenerate the tables from a catalog");
    std::string catalog = AKG_DEFAULT_CATALOG, format = "md";
    table->add_option("--catalog", catalog, "catalog JSON");
    table->add_option("--format", format, "md, csv or json");
    table->add_option("--prime-bound", opt.prime_bound, "Euler product prime bound");

    auto* simple = app.add_subcommand("simple-axis", "search for h with gamma(f,h) in (beta,0) or equal to beta");
    int sn = 0, si = 0;
    simple->add_option("--n", sn, "order of f")->required();
    simple->add_option("--i", si, "row index")->required();
    simple->add_option("--max-syllables", opt.max_letters, "longest word in letters");
    simple->add_option("--catalog", catalog, "catalog JSON");

    auto* volume = app.add_subcommand("volume", "zeta_k(2) and the cubic/quartic co-volume formula");
    std::string poly;
    long np = 0;
    volume->add_option("--poly", poly, "defining polynomial of k, e.g. z^3+4z^2+4z+2")->required();
    volume->add_option("--np", np, "norm of the ramified prime (cubic fields)");
    volume->add_option("--prime-bound", opt.prime_bound, "Euler product prime bound");

    auto* explore = app.add_subcommand("explore", "iterate a word map over a grid of starting values (CSV)");
    double beta = -1;
    std::string map = "cube", grid = "-1:1:21,-1:1:21";
    int iters = 50;
    explore->add_option("--beta", beta, "beta(f)");
    explore->add_option("--map", map, "cube = gamma(1+beta-gamma)^2, conj = gamma(gamma-beta)");
    explore->add_option("--grid", grid, "re0:re1:nre,im0:im1:nim");
    explore->add_option("--iterations", iters, "maximum iterations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            std::ifstream in(params_path);
            if (!in) throw std::runtime_error("cannot open " + params_path);
            json j = json::parse(in);
            auto rows = j.is_array() ? parse_catalog(j) : std::vector<CatalogRow>{parse_row(j)};
            Report rep = run_catalog(rows, opt);
            std::cout << emit_tables(rep, TableFormat::json);
            return rep.unexpected() == 0 ? 0 : 1;
        }
        if (*table) {
            TableFormat fmt = parse_table_format(format);
            Report rep = run_catalog(load_catalog(catalog), opt);
            std::cout << emit_tables(rep, fmt);
            return rep.unexpected() == 0 ? 0 : 1;
        }
        if (*simple) {
            auto rows = load_catalog(catalog);
            const CatalogRow& row = find_row(rows, sn, si);
            PrecisionScope ps(opt.bits);
            GroupParams gp = make_params(row.n, row.p, Complex(Real(row.gamma_re), Real(row.gamma_im)), opt.bits);
            auto w = simple_axis_search(gp.gamma(), row.n, opt.max_letters, opt.threads, opt.bits);
            std::cout << "G_{" << sn << "," << si << "} gamma = " << gp.gamma().str(10) << "\n";
            if (!w) {
                std::cout << "none found up to " << opt.max_letters << " letters\n";
                return 0;
            }
            std::cout << "h = " << format_word(w->word) << "\n"
                      << "gamma(f,h) = " << w->gamma_h.str(15) << "\n"
                      << "beta(h) = " << w->beta_h.str(10) << "\n"
                      << "kind = " << witness_kind_name(w->kind) << "\n";
            return 0;
        }
        if (*volume) {
            PrecisionScope ps(opt.bits);
            BivarIntPoly p = parse_poly(poly);
            if (!p.is_b_free()) throw std::invalid_argument("--poly must be a polynomial in z alone");
            IntPoly f = p.to_univariate();
            Field K = NumberField::make(f, opt.bits);
            FieldDiscriminant fd = field_discriminant(f);
            ZetaEstimate z = zeta2(f, opt.prime_bound, opt.bits);
            std::cout << "degree = " << K->degree() << ", signature = (" << K->r1() << ", " << K->r2() << ")\n"
                      << "disc = " << fd.disc.get_str() << "\n"
                      << "zeta_k(2) = " << z.value.str(12) << "\n"
                      << "tail bound = " << z.tail_bound.str(6) << "\n"
                      << "prime bound = " << z.prime_bound << "\n";
            if (!z.bracketed_primes.empty()) std::cout << "bracketed primes = " << z.bracketed_primes.size() << "\n";
            if (K->degree() == 4 && fd.disc < 0) {
                std::cout << "covolume = " << quartic_covolume(fd.disc, z.value).str(8) << " (quartic, Ram_f empty)\n";
            } else if (K->degree() == 3 && fd.disc < 0) {
                if (np < 2) throw std::invalid_argument("cubic fields need --np");
                std::cout << "covolume = " << cubic_covolume(fd.disc, z.value, np).str(8) << " (cubic, NP = " << np
                          << ")\n";
            } else {
                std::cout << "covolume = n/a (formula covers cubic and quartic fields with one complex place)\n";
            }
            return 0;
        }
        if (*explore) {
            PrecisionScope ps(opt.bits);
            Grid g = parse_grid(grid);
            WordMap m = parse_word_map(map);
            std::cout << "re,im,verdict,steps,final_abs\n";
            for (int a = 0; a < g.nre; ++a)
                for (int b = 0; b < g.nim; ++b) {
                    double re = g.nre == 1 ? g.re0 : g.re0 + (g.re1 - g.re0) * a / (g.nre - 1);
                    double im = g.nim == 1 ? g.im0 : g.im0 + (g.im1 - g.im0) * b / (g.nim - 1);
                    Trajectory t = word_map_iterate(Complex(re, im), Complex(beta, 0.0), m, iters);
                    std::cout << re << "," << im << "," << trajectory_verdict_name(t.verdict) << "," << t.steps << ","
                              << abs(t.points.back()).to_double() << "\n";
                }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
