#include "akg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "akg/certify.hpp"
#include "akg/geometry.hpp"
#include "akg/numfield.hpp"
#include "akg/params.hpp"
#include "akg/quatalg.hpp"
#include "akg/volume.hpp"

namespace akg {

using nlohmann::json;

// ---------------------------------------------------------------- polynomial text

namespace {

using Terms = std::map<std::pair<int, int>, mpz_class>;  // (deg z, deg b) -> coefficient

Terms mul(const Terms& a, const Terms& b) {
    Terms r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return r;
}

void add_into(Terms& a, const Terms& b, int sign) {
    for (const auto& [k, c] : b) a[k] += sign > 0 ? c : mpz_class(-c);
}

class PolyParser {
public:
    explicit PolyParser(std::string s) {
        // accept the Greek beta as b
        for (size_t p; (p = s.find("\xCE\xB2")) != std::string::npos;) s.replace(p, 2, "b");
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    Terms parse() {
        if (s_.empty()) throw std::invalid_argument("empty polynomial");
        Terms t = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
    }
    bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    Terms expr() {
        Terms r;
        int sign = 1;
        if (at('+') || at('-')) sign = s_[pos_++] == '-' ? -1 : 1;
        add_into(r, term(), sign);
        while (at('+') || at('-')) {
            sign = s_[pos_++] == '-' ? -1 : 1;
            add_into(r, term(), sign);
        }
        return r;
    }

    Terms term() {
        Terms r = factor();
        for (;;) {
            if (at('*')) {
                ++pos_;
                r = mul(r, factor());
            } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                r = mul(r, factor());
            } else {
                return r;
            }
        }
    }

    Terms factor() {
        Terms base = primary();
        if (!at('^')) return base;
        ++pos_;
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        int e = std::stoi(s_.substr(start, pos_ - start));
        Terms r{{{0, 0}, mpz_class(1)}};
        for (int k = 0; k < e; ++k) r = mul(r, base);
        return r;
    }

    Terms primary() {
        if (pos_ >= s_.size()) fail("operand expected");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {{{0, 0}, mpz_class(s_.substr(start, pos_ - start))}};
        }
        if (c == 'z') {
            ++pos_;
            return {{{1, 0}, mpz_class(1)}};
        }
        if (c == 'b') {
            ++pos_;
            return {{{0, 1}, mpz_class(1)}};
        }
        if (c == '(') {
            ++pos_;
            Terms t = expr();
            if (!at(')')) fail("')' expected");
            ++pos_;
            return t;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

BivarIntPoly parse_poly(const std::string& text) {
    Terms t = PolyParser(text).parse();
    int dz = 0, db = 0;
    for (const auto& [k, c] : t)
        if (c != 0) {
            dz = std::max(dz, k.first);
            db = std::max(db, k.second);
        }
    std::vector<std::vector<mpz_class>> rows(dz + 1, std::vector<mpz_class>(db + 1, 0));
    for (const auto& [k, c] : t) rows[k.first][k.second] += c;
    return BivarIntPoly(rows);
}

// ---------------------------------------------------------------- catalog

CatalogRow parse_row(const json& j) {
    CatalogRow r;
    std::string id = "?";
    try {
        r.n = j.at("n").get<int>();
        r.i = j.value("i", 0);
        id = r.id();
        if (r.n < 3 || r.n > 7) throw std::invalid_argument("n must be in 3..7");
        r.poly_text = j.value("poly_text", "");
        if (j.contains("poly")) {
            const json& p = j.at("poly");
            if (!p.is_array() || p.empty()) throw std::invalid_argument("poly must be a non-empty array");
            if (p.front().is_array()) {
                std::vector<std::vector<mpz_class>> rows;
                for (const auto& row : p) {
                    std::vector<mpz_class> v;
                    for (const auto& c : row) v.emplace_back(c.get<long>());
                    rows.push_back(std::move(v));
                }
                r.p = BivarIntPoly(rows);
            } else {
                std::vector<mpz_class> v;
                for (const auto& c : p) v.emplace_back(c.get<long>());
                r.p = BivarIntPoly::from_univariate(IntPoly(v));
            }
        } else if (!r.poly_text.empty()) {
            r.p = parse_poly(r.poly_text);
        } else {
            throw std::invalid_argument("row has neither poly nor poly_text");
        }
        if (r.poly_text.empty()) r.poly_text = r.p.str();
        const json& g = j.at("gamma_approx");
        if (!g.is_array() || g.size() != 2) throw std::invalid_argument("gamma_approx must be [re, im]");
        r.gamma_re = g[0].get<double>();
        r.gamma_im = g[1].get<double>();
        if (j.contains("expected") && !j["expected"].is_null()) r.expected = j["expected"];
        if (j.contains("witness")) r.witness = j["witness"];
        if (j.contains("finite_group")) r.finite_group = j["finite_group"];
        if (j.contains("assumed")) r.assumed = j["assumed"];
        if (j.contains("annotations"))
            for (const auto& a : j["annotations"]) r.annotations[a.at("cell").get<std::string>()] = a;
    } catch (const json::exception& e) {
        throw std::invalid_argument("catalog row " + id + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("catalog row " + id + ": " + e.what());
    }
    return r;
}

std::vector<CatalogRow> parse_catalog(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("catalog must be a JSON array");
    std::vector<CatalogRow> out;
    for (const auto& r : j) out.push_back(parse_row(r));
    return out;
}

std::vector<CatalogRow> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path);
    return parse_catalog(json::parse(in));
}

// ---------------------------------------------------------------- row pipeline

const char* cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::match: return "match";
        case CellStatus::mismatch: return "mismatch";
        case CellStatus::expected_mismatch: return "expected_mismatch";
        case CellStatus::skipped: return "skipped";
    }
    return "?";
}

const Cell* ReportRow::cell(const std::string& name) const {
    for (const auto& c : cells)
        if (c.name == name) return &c;
    return nullptr;
}

int Report::count(CellStatus s) const {
    int k = 0;
    for (const auto& r : rows)
        for (const auto& c : r.cells) k += c.status == s;
    return k;
}

int Report::unexpected() const {
    int k = count(CellStatus::mismatch);
    for (const auto& r : rows) k += !r.error.empty();
    return k;
}

namespace {

// ".1970" style, as printed
std::string fixed(double v, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    std::string s = os.str();
    if (s.rfind("0.", 0) == 0) s.erase(0, 1);
    if (s.rfind("-0.", 0) == 0) s.erase(1, 1);
    return s;
}

std::string complex_text(const Complex& z, int digits = 4) {
    double re = z.re.to_double(), im = z.im.to_double();
    if (std::abs(im) < 1e-12) return fixed(re, digits);
    return fixed(re, digits) + (im < 0 ? "-" : "+") + fixed(std::abs(im), digits) + "i";
}

std::string poly_text(const IntPoly& q) {
    std::string s;
    for (int k = q.degree(); k >= 0; --k) {
        mpz_class c = q.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class a = abs(c);
        if (!s.empty() || neg) s += neg ? "-" : "+";
        if (a != 1 || k == 0) s += a.get_str();
        if (k >= 1) s += "z";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

std::string json_text(const json& j) {
    if (j.is_null()) return "";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string norms_text(const std::vector<mpz_class>& v) {
    if (v.empty()) return "∅";
    std::string s = "{";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? ", P" : "P") + v[k].get_str();
    return s + "}";
}

std::string norms_text(const json& e) {
    std::vector<mpz_class> v;
    for (const auto& x : e) v.emplace_back(x.get<long>());
    return norms_text(v);
}

struct RowBuilder {
    const CatalogRow& row;
    ReportRow& out;

    bool has_expected(const std::string& key) const {
        return row.expected.contains(key) && !row.expected[key].is_null();
    }
    json expected(const std::string& key) const { return has_expected(key) ? row.expected[key] : json(); }
    const json* annotation(const std::string& cell) const {
        auto it = row.annotations.find(cell);
        return it == row.annotations.end() ? nullptr : &it->second;
    }

    // status from a comparison, downgraded to expected_mismatch by an annotation
    void add(const std::string& name, const std::string& computed, const std::string& exp, bool ok,
             std::string note = "") {
        Cell c{name, computed, exp, ok ? CellStatus::match : CellStatus::mismatch, std::move(note)};
        if (const json* a = annotation(name)) {
            std::string an = a->value("note", "");
            c.note = c.note.empty() ? an : c.note + "; " + an;
            c.flagged = true;
            if (!ok) c.status = CellStatus::expected_mismatch;
        }
        out.cells.push_back(std::move(c));
    }
    void skip(const std::string& name, const std::string& computed, const std::string& reason) {
        out.cells.push_back({name, computed, json_text(expected(name)), CellStatus::skipped, reason});
    }
    // skip only when there is something to report
    void skip_if_expected(const std::string& name, const std::string& reason) {
        if (has_expected(name)) skip(name, "", reason);
    }
};

// volume cell when the order-discriminant support lies in Ram_f
struct VolumeResult {
    bool applies = false;
    std::string reason;
    double value = 0;
    json detail = json::object();
};

VolumeResult container_volume(int n, const Field& K, const FieldElem& g, const FieldElem& b,
                              const RamificationReport& R, const mpz_class& disc, const RunOptions& opt) {
    VolumeResult v;
    int deg = K->degree();
    if (deg > 4) {
        v.reason = "degree > 4";
        return v;
    }
    if (deg < 3) {
        v.reason = "quadratic field; formula covers cubic and quartic fields only";
        return v;
    }
    if (K->r2() != 1 || static_cast<int>(R.real_ramified.size()) != K->r1()) {
        v.reason = "not an arithmetic Kleinian configuration";
        return v;
    }
    if (!R.determined()) {
        v.reason = "finite ramification undetermined";
        return v;
    }
    if (n == 7) {
        v.reason = "no order discriminant for n = 7";
        return v;
    }
    if (deg == 4 && !R.finite_norms.empty()) {
        v.reason = "quartic formula needs Ram_f empty";
        return v;
    }
    if (deg == 3 && R.finite_norms.size() != 1) {
        v.reason = "cubic formula needs exactly one ramified prime";
        return v;
    }
    // the order must be maximal away from Ram_f, otherwise the container is a
    // group Gamma_{S,S'} with S nonempty
    FieldElem x = order_disc_element(n, g, b);
    mpz_class dn = order_disc_norm(n, g, b);
    for (const auto& [pl, e] : factor_integer(abs(dn))) {
        (void)e;
        long l = pl.get_si();
        auto pv = prime_valuations(x, l);
        std::vector<LocalSymbol> ls;
        for (const auto& y : R.local)
            if (y.l == l) ls.push_back(y);
        if (!pv || pv->size() != ls.size()) {
            v.reason = "order discriminant at " + pl.get_str() + " not resolved";
            return v;
        }
        for (size_t k = 0; k < pv->size(); ++k)
            if ((*pv)[k].v > 0 && ls[k].value != -1) {
                v.reason = "order not maximal at an unramified prime of norm " + (*pv)[k].norm.get_str() +
                           " (container Gamma_{S,S'}, S nonempty)";
                return v;
            }
    }
    auto z = zeta2(K->poly(), opt.prime_bound, opt.bits);
    Real vol = deg == 4 ? quartic_covolume(disc, z.value) : cubic_covolume(disc, z.value, R.finite_norms[0].get_si());
    v.applies = true;
    v.value = vol.to_double();
    v.detail = {{"zeta2", z.value.to_double()},
                {"tail_bound", z.tail_bound.to_double()},
                {"prime_bound", z.prime_bound},
                {"index_primes", z.index_primes},
                {"bracketed_primes", z.bracketed_primes},
                {"covolume", v.value}};
    return v;
}

json certificate_json(const DiscretenessCertificate& c) {
    json j{{"theorem", c.theorem}, {"verdict", verdict_name(c.verdict)}, {"conditions", json::array()}};
    for (const auto& x : c.conditions)
        j["conditions"].push_back({{"id", x.id}, {"pass", x.pass}, {"evidence", x.evidence}, {"intervals", x.intervals}});
    return j;
}

json ramification_json(const RamificationReport& R) {
    json j{{"real_places", R.real_places},
           {"real_ramified", R.real_ramified},
           {"finite", finite_status_name(R.finite)},
           {"note", R.note},
           {"local", json::array()}};
    std::vector<std::string> norms;
    for (const auto& x : R.finite_norms) norms.push_back(x.get_str());
    j["finite_norms"] = norms;
    if (R.order_disc_norm) j["order_disc_norm"] = R.order_disc_norm->get_str();
    for (const auto& x : R.local)
        j["local"].push_back(
            {{"l", x.l}, {"e", x.e}, {"f", x.f}, {"norm", x.norm.get_str()}, {"value", x.value}, {"method", x.method}});
    return j;
}

std::string simple_label(const SimpleClassification& c) {
    switch (c.outcome) {
        case SimpleOutcome::non_simple: return "No";
        case SimpleOutcome::simple: return "Yes";
        case SimpleOutcome::finite_group: return c.group;
        case SimpleOutcome::fuchsian: return "Fuch.";
        case SimpleOutcome::unknown: return "?";
    }
    return "?";
}

void run_row_impl(const CatalogRow& row, const RunOptions& opt, ReportRow& out) {
    PrecisionScope ps(opt.bits);
    RowBuilder rb{row, out};
    const int n = row.n;
    Complex approx(Real(row.gamma_re), Real(row.gamma_im));
    GroupParams gp = make_params(n, row.p, approx, opt.bits);
    Complex gamma = gp.gamma();
    Complex beta(gp.beta);
    out.detail["gamma"] = complex_text(gamma, 6);
    out.detail["beta"] = fixed(gp.beta.to_double(), 6);

    // discreteness certificate
    DiscretenessCertificate cert = (n == 5 || n == 7) ? check_t513(row.p, approx, n, opt.bits)
                                                      : check_t514(row.p.to_univariate(), approx, n, opt.bits);
    out.detail["certificate"] = certificate_json(cert);
    rb.add("certificate", verdict_name(cert.verdict), "subgroup_of_arithmetic", cert.passed(),
           cert.theorem);

    // axial distance
    double delta = axial_distance(gamma, beta, Complex(-4L)).to_double();
    out.detail["delta"] = delta;
    if (rb.has_expected("delta")) {
        std::string e = rb.expected("delta").get<std::string>();
        rb.add("delta", fixed(delta), e, std::abs(delta - std::stod(e)) <= 5e-4);
    }

    // minimal polynomial over Q
    std::string qt = poly_text(gp.q);
    out.detail["q"] = qt;
    if (rb.has_expected("q_over_Q")) {
        std::vector<mpz_class> e;
        for (const auto& c : rb.expected("q_over_Q")) e.emplace_back(c.get<long>());
        rb.add("q", qt, row.expected.value("q_text", IntPoly(e).str()), IntPoly(e) == gp.q);
    }

    // covolumes of the groups themselves come from an external program
    if (rb.has_expected("covolume")) rb.skip("covolume", "", "carried as data; produced by an external program");

    auto finite = finite_triangle_group(gamma, n);
    if (finite) {
        out.detail["finite_group"] = *finite;
        if (rb.has_expected("volume")) {
            std::string e = json_text(rb.expected("volume"));
            rb.add("volume", *finite, e, *finite == e);
        }
        if (rb.has_expected("simple")) {
            std::string e = json_text(rb.expected("simple"));
            rb.add("simple", *finite, e, *finite == e);
        }
        for (const char* c : {"disc", "ramf"}) rb.skip_if_expected(c, "finite group");
        return;
    }

    if (gp.q.degree() < 2) {
        // rational gamma: real parameters
        if (rb.has_expected("volume")) {
            std::string e = json_text(rb.expected("volume"));
            rb.add("volume", "Fuch.", e, e == "Fuch.");
        }
        if (rb.has_expected("simple")) {
            std::string e = json_text(rb.expected("simple"));
            rb.add("simple", "Fuch.", e, e == "Fuch.");
        }
        for (const char* c : {"disc", "ramf"}) rb.skip_if_expected(c, "Fuchsian");
        return;
    }

    Field K = NumberField::make(gp.q, opt.bits);
    FieldElem gk = FieldElem::gen(K);
    FieldElem bk = beta_in_field(K, n, gk, row.p);
    size_t identity = match_root(K->embeddings(), gamma);
    FieldDiscriminant fd = field_discriminant(gp.q);
    out.detail["field"] = {{"poly", qt},
                           {"signature", {K->r1(), K->r2()}},
                           {"disc", fd.disc.get_str()},
                           {"index", fd.index.get_str()},
                           {"beta", bk.str()}};
    DiscretenessCertificate t510 = check_t510(gk, bk, identity);
    out.detail["t510"] = certificate_json(t510);

    bool fuchsian = K->r2() == 0;
    if (fuchsian) {
        if (rb.has_expected("volume")) {
            std::string e = json_text(rb.expected("volume"));
            rb.add("volume", "Fuch.", e, e == "Fuch.");
        }
        if (rb.has_expected("simple")) {
            std::string e = json_text(rb.expected("simple"));
            rb.add("simple", "Fuch.", e, e == "Fuch.");
        }
        for (const char* c : {"disc", "ramf"}) rb.skip_if_expected(c, "Fuchsian");
        return;
    }

    // field discriminant
    if (rb.has_expected("disc")) {
        std::string e = std::to_string(rb.expected("disc").get<long>());
        rb.add("disc", fd.disc.get_str(), e, fd.disc.get_str() == e);
    } else {
        rb.skip("disc", fd.disc.get_str(), "not printed");
    }

    // quaternion algebra and ramification
    HilbertSymbol s = invariant_symbol(gk, bk);
    out.detail["hilbert_symbol"] = {{"a", s.a.str()}, {"b", s.b.str()}};
    std::optional<mpz_class> dn;
    if (n != 7) dn = order_disc_norm(n, gk, bk);
    RamificationReport R = classify_finite_ramification(s, dn);
    out.detail["ramification"] = ramification_json(R);
    std::optional<std::vector<mpz_class>> assumed;
    if (!row.assumed.is_null() && row.assumed.contains("ramf")) {
        std::vector<mpz_class> v;
        for (const auto& x : row.assumed["ramf"]) v.emplace_back(x.get<long>());
        assumed = v;
    }
    std::string rt = R.determined() ? norms_text(R.finite_norms) : std::string("?");
    if (rb.has_expected("ramf")) {
        std::string e = norms_text(rb.expected("ramf"));
        if (!R.determined()) {
            rb.skip("ramf", rt,
                    std::string("classifier left the finite ramification open (") + finite_status_name(R.finite) + ")" +
                        (assumed ? "; catalog value used downstream" : ""));
        } else {
            rb.add("ramf", rt, e, rt == e);
        }
    } else {
        rb.skip("ramf", rt, "not printed");
    }

    // container co-volume
    VolumeResult vol = container_volume(n, K, gk, bk, R, fd.disc, opt);
    out.detail["volume"] = vol.detail;
    if (!vol.applies) out.detail["volume"]["skipped"] = vol.reason;
    if (rb.has_expected("volume")) {
        std::string e = json_text(rb.expected("volume"));
        if (!vol.applies) {
            rb.skip("volume", "", vol.reason);
        } else {
            bool ok = std::abs(vol.value - std::stod(e)) <= 0.01 * std::stod(e);
            std::string note;
            if (const json* a = rb.annotation("volume"); a && a->contains("alternate")) {
                double alt = std::stod((*a)["alternate"].get<std::string>());
                bool alt_ok = std::abs(vol.value - alt) <= 0.01 * alt;
                note = std::string("printed values disagree (") + e + " vs " + (*a)["alternate"].get<std::string>() +
                       "); within 1% of " + (ok && alt_ok ? "both" : ok ? e : alt_ok ? "the alternate" : "neither");
                ok = ok || alt_ok;
            }
            rb.add("volume", fixed(vol.value), e, ok, note);
        }
    }

    // simple axis
    std::optional<Witness> w = simple_axis_search(gamma, n, opt.max_letters, 1, opt.bits);
    SimpleInputs in{n, gamma, gk, bk, R, assumed};
    SimpleClassification sc = classify_simple(in, w);
    std::string label = simple_label(sc);
    out.detail["simple"] = {{"outcome", simple_outcome_name(sc.outcome)}, {"reason", sc.obstruction}};
    if (w)
        out.detail["simple"]["witness"] = {{"word", format_word(w->word)},
                                           {"kind", witness_kind_name(w->kind)},
                                           {"gamma_h", complex_text(w->gamma_h, 10)},
                                           {"beta_h", complex_text(w->beta_h, 6)}};
    if (rb.has_expected("simple")) {
        std::string e = json_text(rb.expected("simple"));
        if (sc.outcome == SimpleOutcome::unknown && rb.annotation("simple")) {
            rb.skip("simple", label, rb.annotation("simple")->value("note", "") + "; " + sc.obstruction);
        } else {
            rb.add("simple", label, e, label == e, sc.obstruction);
        }
    }

    // the printed witness word evaluated on this group
    if (!row.witness.is_null()) {
        Generators fg = realize(gamma, beta);
        WordSpec ws = parse_word(row.witness.at("word").get<std::string>(), n);
        Complex gw = gamma_of_word(fg, ws);
        Complex expected_g(Real::parse(row.witness.at("gamma").get<std::string>()));
        bool ok = abs(gw - expected_g) < Real(1e-10);
        std::string note = format_word(ws);
        if (row.witness.contains("beta_h")) {
            Complex bh = beta_of_word(fg, ws);
            Complex eb(Real(row.witness["beta_h"][0].get<double>()), Real(row.witness["beta_h"][1].get<double>()));
            bool bok = abs(bh - eb) < Real(1e-3) || abs(bh - eb.conj()) < Real(1e-3);
            note += "; beta(h) = " + complex_text(bh) + (bok ? "" : " differs from the printed value");
            ok = ok && bok;
        }
        rb.add("witness", complex_text(gw, 10), row.witness.at("gamma").get<std::string>(), ok, note);
    }
}

}  // namespace

ReportRow run_row(const CatalogRow& row, const RunOptions& opt) {
    ReportRow out;
    out.n = row.n;
    out.i = row.i;
    out.poly_text = row.poly_text;
    try {
        run_row_impl(row, opt, out);
    } catch (const std::exception& e) {
        out.error = "row " + row.id() + ": " + e.what();
    }
    // annotations on printed items that have no computed cell
    for (const auto& [name, a] : row.annotations)
        if (!out.cell(name)) out.detail["annotations"][name] = a.value("note", "");
    return out;
}

Report run_catalog(const std::vector<CatalogRow>& rows, const RunOptions& opt) {
    Report rep;
    rep.rows.resize(rows.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k; (k = next++) < rows.size();) rep.rows[k] = run_row(rows[k], opt);
    };
    int t = std::max(1, std::min<int>(opt.threads, static_cast<int>(rows.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < t; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    std::stable_sort(rep.rows.begin(), rep.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) { return std::pair(a.n, a.i) < std::pair(b.n, b.i); });
    return rep;
}

// ---------------------------------------------------------------- tables

TableFormat parse_table_format(const std::string& s) {
    if (s == "md" || s == "markdown") return TableFormat::markdown;
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format '" + s + "' (md, csv or json)");
}

namespace {

struct TableSpec {
    int number;
    std::string title;
    std::vector<std::string> headers;
};

// markdown cell text: computed value with the printed one on disagreement
std::string render(const ReportRow& r, const std::string& name, const std::string& fallback = "") {
    const Cell* c = r.cell(name);
    if (!c) return fallback;
    switch (c->status) {
        case CellStatus::match: return c->computed + (c->flagged ? " †" : "");
        case CellStatus::mismatch: return "**" + c->computed + "** ≠ " + c->expected;
        case CellStatus::expected_mismatch: return c->computed + " (printed " + c->expected + ") †";
        case CellStatus::skipped:
            if (!c->expected.empty() && !c->computed.empty()) return c->computed + " (printed " + c->expected + ", skipped)";
            if (!c->expected.empty()) return c->expected + " (printed, not computed)";
            return c->computed;
    }
    return fallback;
}

std::string md_escape(std::string s) {
    for (size_t p = 0; (p = s.find('|', p)) != std::string::npos; p += 2) s.replace(p, 1, "\\|");
    return s;
}

std::string simple_text(const ReportRow& r) {
    std::string s = render(r, "simple");
    if (r.detail.contains("simple") && r.detail["simple"].contains("witness"))
        s += " (h = " + r.detail["simple"]["witness"]["word"].get<std::string>() + ")";
    return s;
}

std::vector<std::pair<const ReportRow*, const Cell*>> all_cells(const Report& rep) {
    std::vector<std::pair<const ReportRow*, const Cell*>> v;
    for (const auto& r : rep.rows)
        for (const auto& c : r.cells) v.push_back({&r, &c});
    return v;
}

}  // namespace

std::string emit_tables(const Report& rep, TableFormat fmt) {
    if (fmt == TableFormat::json) {
        json j{{"rows", json::array()},
               {"summary",
                {{"match", rep.count(CellStatus::match)},
                 {"mismatch", rep.count(CellStatus::mismatch)},
                 {"expected_mismatch", rep.count(CellStatus::expected_mismatch)},
                 {"skipped", rep.count(CellStatus::skipped)},
                 {"unexpected", rep.unexpected()}}}};
        for (const auto& r : rep.rows) {
            json row{{"n", r.n}, {"i", r.i}, {"poly", r.poly_text}, {"cells", json::array()}, {"detail", r.detail}};
            if (!r.error.empty()) row["error"] = r.error;
            for (const auto& c : r.cells)
                row["cells"].push_back({{"name", c.name},
                                        {"computed", c.computed},
                                        {"expected", c.expected},
                                        {"status", cell_status_name(c.status)},
                                        {"note", c.note},
                                        {"flagged", c.flagged}});
            j["rows"].push_back(row);
        }
        return j.dump(2) + "\n";
    }
    if (fmt == TableFormat::csv) {
        auto q = [](const std::string& s) {
            std::string o = "\"";
            for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
            return o + "\"";
        };
        std::ostringstream os;
        os << "n,i,cell,computed,expected,status,note\n";
        for (const auto& [r, c] : all_cells(rep))
            os << r->n << "," << r->i << "," << c->name << "," << q(c->computed) << "," << q(c->expected) << ","
               << cell_status_name(c->status) << "," << q(c->note) << "\n";
        for (const auto& r : rep.rows)
            if (!r.error.empty()) os << r.n << "," << r.i << ",error,,,mismatch," << q(r.error) << "\n";
        return os.str();
    }

    std::ostringstream os;
    auto rows_for = [&](int n) {
        std::vector<const ReportRow*> v;
        for (const auto& r : rep.rows)
            if (r.n == n) v.push_back(&r);
        return v;
    };
    // Tables 1-5: groups G_{n,i}
    for (int n = 3; n <= 7; ++n) {
        os << "### Table " << n - 2 << " - Groups G_{" << n << ",i}\n\n";
        os << "| i | gamma | p | delta | certificate |\n|---|---|---|---|---|\n";
        for (const ReportRow* r : rows_for(n)) {
            std::string g = r->detail.contains("gamma") ? r->detail["gamma"].get<std::string>() : "";
            os << "| " << r->i << " | " << g << " | " << md_escape(r->poly_text) << " | " << render(*r, "delta") << " | "
               << (r->error.empty() ? render(*r, "certificate") : "error: " + md_escape(r->error)) << " |\n";
        }
        os << "\n";
    }
    // Tables 6-10: co-volume of a group containing G_{n,i}
    for (int n = 3; n <= 7; ++n) {
        os << "### Table " << n + 3 << " - Co-volume of group containing G_{" << n << ",i}\n\n";
        os << "| i | q | d_kG | Ram_f | delta | V |\n|---|---|---|---|---|---|\n";
        for (const ReportRow* r : rows_for(n))
            os << "| " << r->i << " | " << render(*r, "q") << " | " << render(*r, "disc", "--") << " | "
               << render(*r, "ramf", "--") << " | " << render(*r, "delta") << " | " << render(*r, "volume", "?") << " |\n";
        os << "\n";
    }
    // Tables 11-12 are laid out by i with one column per n
    int max_i = 0;
    for (const auto& r : rep.rows)
        if (r.n <= 6) max_i = std::max(max_i, r.i);
    auto grid = [&](const std::string& title, auto&& cell) {
        os << "### " << title << "\n\n| i | G_{3,i} | G_{4,i} | G_{5,i} | G_{6,i} |\n|---|---|---|---|---|\n";
        for (int i = 1; i <= max_i; ++i) {
            os << "| " << i << " |";
            for (int n = 3; n <= 6; ++n) {
                const ReportRow* hit = nullptr;
                for (const auto& r : rep.rows)
                    if (r.n == n && r.i == i) hit = &r;
                os << " " << (hit ? cell(*hit) : std::string()) << " |";
            }
            os << "\n";
        }
        os << "\n";
    };
    grid("Table 11 - Co-volumes of G_{n,i} (printed data, not computed)", [](const ReportRow& r) {
        const Cell* c = r.cell("covolume");
        return c ? c->expected : std::string();
    });
    grid("Table 12 - f simple elliptic", [](const ReportRow& r) { return simple_text(r); });

    // annotations and disagreements
    std::ostringstream notes;
    for (const auto& [r, c] : all_cells(rep)) {
        if (c->status == CellStatus::match && !c->flagged) continue;
        if (c->status == CellStatus::skipped && c->name == "covolume") continue;
        notes << "- " << r->n << "," << r->i << " " << c->name << ": " << cell_status_name(c->status);
        if (!c->note.empty()) notes << " (" << c->note << ")";
        notes << "\n";
    }
    for (const auto& r : rep.rows) {
        if (!r.error.empty()) notes << "- " << r.id() << ": " << r.error << "\n";
        if (r.detail.contains("annotations"))
            for (const auto& [name, text] : r.detail["annotations"].items())
                notes << "- " << r.id() << " " << name << ": " << text.get<std::string>() << "\n";
    }
    if (!notes.str().empty()) os << "### Notes\n\n" << notes.str() << "\n";
    os << "Summary: " << rep.count(CellStatus::match) << " match, " << rep.count(CellStatus::mismatch) << " mismatch, "
       << rep.count(CellStatus::expected_mismatch) << " expected mismatch, " << rep.count(CellStatus::skipped)
       << " skipped, " << rep.unexpected() << " unexpected\n";
    return os.str();
}

}  // namespace akg
