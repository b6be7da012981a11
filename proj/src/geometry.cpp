#include "akg/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "akg/numfield.hpp"

namespace akg {

Mat2C Mat2C::identity() { return {Complex(1L), Complex(0L), Complex(0L), Complex(1L)}; }

Mat2C Mat2C::inverse() const { return {d, -b, -c, a}; }

Mat2C Mat2C::operator*(const Mat2C& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2C Mat2C::operator+(const Mat2C& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
Mat2C Mat2C::operator-(const Mat2C& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
Mat2C Mat2C::operator*(const Complex& s) const { return {a * s, b * s, c * s, d * s}; }

Real Mat2C::max_abs() const {
    Real m = abs(a);
    for (const Complex* z : {&b, &c, &d}) {
        Real v = abs(*z);
        if (v > m) m = v;
    }
    return m;
}

namespace {

// unary functions keep their argument's precision, so lift inputs first
Complex lift(const Complex& z) {
    Real zero = Real::with_precision(working_precision());
    return {zero + z.re, zero + z.im};
}

}  // namespace

Generators realize(const Complex& gamma_in, const Complex& beta_in) {
    Complex gamma = lift(gamma_in), beta = lift(beta_in);
    if (abs(beta) < Real(1e-30) || abs(beta + Complex(4L)) < Real(1e-30))
        throw std::invalid_argument("realize needs beta != 0, -4 (f elliptic or loxodromic)");
    Complex t = sqrt(beta + Complex(4L));
    Complex u = (t + sqrt(beta)) / Complex(2L);
    Complex a = sqrt(gamma / beta - Complex(1L));
    Generators fg;
    fg.F = {u, Complex(0L), Complex(0L), Complex(1L) / u};
    fg.G = {a, Complex(1L), -Complex(1L) - a * a, -a};
    fg.gamma = gamma;
    fg.beta = beta;
    Complex tr = fg.F.trace();
    Complex comm = (fg.F * fg.G * fg.F.inverse() * fg.G.inverse()).trace() - Complex(2L);
    Real tol = ldexp(Real(1L), -(working_precision() / 2)) * (Real(1L) + abs(gamma));
    if (abs(tr * tr - Complex(4L) - beta) > tol || abs(comm - gamma) > tol)
        throw std::logic_error("matrix realization does not reproduce the parameters");
    return fg;
}

// ---------------------------------------------------------------- words

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

WordSpec reduce_word(int n, const std::vector<Letter>& letters) {
    if (n < 2) throw std::invalid_argument("word order n must be at least 2");
    std::vector<Letter> out;
    for (const Letter& l0 : letters) {
        Letter l = l0;
        l.exp = mod(l.exp, l.gen == 'g' ? 2 : n);
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp = mod(out.back().exp + l.exp, l.gen == 'g' ? 2 : n);
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return {n, out};
}

WordSpec inverse_word(const WordSpec& w) {
    std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
    for (auto& l : out) l.exp = -l.exp;
    return reduce_word(w.n, out);
}

namespace {

std::vector<Letter> parse_letters(const std::string& s, int n, const std::map<char, std::vector<Letter>>& defs) {
    std::vector<Letter> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i++];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isalpha(static_cast<unsigned char>(c))) throw std::invalid_argument(std::string("bad letter '") + c + "' in word");
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            if (i < s.size() && s[i] == '{') ++i;
            size_t used = 0;
            e = std::stoi(s.substr(i), &used);
            i += used;
            if (i < s.size() && s[i] == '}') ++i;
        }
        if (c == 'f' || c == 'g') {
            out.push_back({c, e});
            continue;
        }
        auto it = defs.find(c);
        if (it == defs.end()) throw std::invalid_argument(std::string("undefined letter '") + c + "' in word");
        WordSpec base{n, it->second};
        WordSpec piece = e < 0 ? inverse_word(base) : base;
        for (int k = 0; k < std::abs(e); ++k) out.insert(out.end(), piece.letters.begin(), piece.letters.end());
    }
    return out;
}

}  // namespace

WordSpec parse_word(const std::string& text, int n) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t p; (p = text.find(';', start)) != std::string::npos; start = p + 1) parts.push_back(text.substr(start, p - start));
    parts.push_back(text.substr(start));
    std::map<char, std::vector<Letter>> defs;
    // definitions after the main word, each may use earlier ones
    for (size_t k = 1; k < parts.size(); ++k) {
        auto eq = parts[k].find('=');
        std::string name = parts[k].substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        if (eq == std::string::npos || name.size() != 1 || name == "f" || name == "g")
            throw std::invalid_argument("bad word definition: " + parts[k]);
        defs[name[0]] = reduce_word(n, parse_letters(parts[k].substr(eq + 1), n, defs)).letters;
    }
    return reduce_word(n, parse_letters(parts[0], n, defs));
}

std::string format_word(const WordSpec& w) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (const auto& l : w.letters) {
        s += l.gen;
        if (l.gen == 'g') continue;
        int e = l.exp;
        if (2 * e > w.n) e -= w.n;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Mat2C evaluate_word(const Generators& fg, const WordSpec& w) {
    Mat2C H = Mat2C::identity();
    Mat2C Fi = fg.F.inverse();
    for (const auto& l : w.letters) {
        if (l.gen == 'g') {
            H = H * fg.G;
            continue;
        }
        int e = l.exp;
        if (2 * e > w.n) e -= w.n;
        const Mat2C& B = e > 0 ? fg.F : Fi;
        for (int k = 0; k < std::abs(e); ++k) H = H * B;
    }
    return H;
}

namespace {

Complex gamma_raw(const Generators& fg, const Mat2C& H) {
    return (fg.F * H * fg.F.inverse() * H.inverse()).trace() - Complex(2L);
}

}  // namespace

Complex gamma_of_word(const Generators& fg, const WordSpec& w) {
    long p = working_precision();
    Complex v = gamma_raw(fg, evaluate_word(fg, w));
    // compare against a re-realization at doubled precision
    for (long q = 2 * p; q <= 16 * p; q *= 2) {
        PrecisionScope ps(q);
        Generators hi = realize(fg.gamma, fg.beta);
        Complex vh = gamma_raw(hi, evaluate_word(hi, w));
        Real tol = ldexp(Real(1L), -(p / 2)) * (Real(1L) + abs(vh));
        if (abs(vh - v) <= tol) return v;
        v = vh;
        p = q;
    }
    throw std::runtime_error("word evaluation lost too much precision");
}

Complex beta_of_word(const Generators& fg, const WordSpec& w) {
    Complex t = evaluate_word(fg, w).trace();
    return t * t - Complex(4L);
}

// ---------------------------------------------------------------- distances

Real axial_distance(const Complex& gamma, const Complex& beta, const Complex& beta2) {
    if (abs(beta) < Real(1e-30) || abs(beta2) < Real(1e-30)) throw std::invalid_argument("axial distance of a parabolic");
    Complex x = Complex(4L) * gamma / (beta * beta2);
    Real c = abs(x + Complex(1L)) + abs(x);
    if (c < Real(1L)) c = Real(1L);  // rounding below 1
    return acosh(c) / Real(2L);
}

Real conj_axis_distance(const Complex& gamma, const Complex& beta) {
    if (abs(beta) < Real(1e-30)) throw std::invalid_argument("conj_axis_distance needs beta != 0");
    Real c = (abs(gamma - beta) + abs(gamma)) / abs(beta);
    if (c < Real(1L)) c = Real(1L);
    return acosh(c);
}

Complex conj_map(const Complex& gamma, const Complex& beta) { return gamma * (gamma - beta); }

const char* word_map_name(WordMap m) { return m == WordMap::cube ? "cube" : "conj"; }

WordMap parse_word_map(const std::string& s) {
    if (s == "cube" || s == "gamma(1+beta-gamma)^2") return WordMap::cube;
    if (s == "conj" || s == "gamma(gamma-beta)") return WordMap::conj;
    throw std::invalid_argument("unknown word map '" + s + "' (cube or conj)");
}

Complex apply_word_map(WordMap m, const Complex& gamma, const Complex& beta) {
    if (m == WordMap::conj) return conj_map(gamma, beta);
    Complex s = Complex(1L) + beta - gamma;
    return gamma * s * s;
}

const char* trajectory_verdict_name(TrajectoryVerdict v) {
    switch (v) {
        case TrajectoryVerdict::escapes: return "escapes";
        case TrajectoryVerdict::converges_to_zero: return "converges_to_zero";
        case TrajectoryVerdict::cycles: return "cycles";
        case TrajectoryVerdict::bounded: return "bounded";
    }
    return "?";
}

Trajectory word_map_iterate(const Complex& gamma0, const Complex& beta, WordMap m, int max_iter, double zero_tol,
                            double escape_radius) {
    Trajectory t;
    t.points.push_back(gamma0);
    Real ztol(zero_tol), esc(escape_radius);
    Real same = ldexp(Real(1L), -(working_precision() / 2));
    auto check = [&](const Complex& z) -> bool {
        Real a = abs(z);
        if (a < ztol) {
            t.verdict = TrajectoryVerdict::converges_to_zero;
            return true;
        }
        if (a > esc) {
            t.verdict = TrajectoryVerdict::escapes;
            return true;
        }
        return false;
    };
    if (check(gamma0)) return t;
    for (int j = 0; j < max_iter; ++j) {
        Complex z = apply_word_map(m, t.points.back(), beta);
        t.points.push_back(z);
        t.steps = j + 1;
        if (check(z)) return t;
        for (size_t k = 0; k + 1 < t.points.size(); ++k)
            if (abs(t.points[k] - z) < same) {
                t.verdict = TrajectoryVerdict::cycles;
                return t;
            }
    }
    t.verdict = TrajectoryVerdict::bounded;
    return t;
}

// ---------------------------------------------------------------- simple axes

const char* witness_kind_name(WitnessKind k) { return k == WitnessKind::interval ? "interval" : "equals_beta"; }

std::optional<Witness> test_witness(const Generators& fg, const Complex& beta, const WordSpec& w) {
    static const Real tol(1e-20);
    Mat2C H = evaluate_word(fg, w);
    Complex gh = gamma_raw(fg, H);
    if (abs(gh.im) >= tol || abs(beta.im) >= tol) return std::nullopt;
    Complex t = H.trace();
    Complex bh = t * t - Complex(4L);
    if (abs(gh - beta) < tol) {
        // gamma(f, h) = beta is only a witness when h is not of order two
        if (abs(bh + Complex(4L)) > Real(1e-10)) return Witness{w, gh, bh, WitnessKind::equals_beta};
        return std::nullopt;
    }
    if (gh.re - beta.re > tol && gh.re < -tol) return Witness{w, gh, bh, WitnessKind::interval};
    return std::nullopt;
}

namespace {

// word g f^e1 g ... f^em g
WordSpec syllables_word(int n, const std::vector<int>& e) {
    std::vector<Letter> l{{'g', 1}};
    for (int x : e) {
        l.push_back({'f', x});
        l.push_back({'g', 1});
    }
    return {n, l};
}

// true when the inverse word comes first in the enumeration order
bool inverse_first(const std::vector<int>& e, int n) {
    std::vector<int> r(e.rbegin(), e.rend());
    for (int& x : r) x = n - x;
    return r < e;
}

// first witness among words with m syllables starting with f^e1
std::optional<Witness> scan_prefix(const Generators& fg, int n, int m, int e1) {
    std::vector<int> e(m, 1);
    e[0] = e1;
    for (;;) {
        if (!inverse_first(e, n))
            if (auto w = test_witness(fg, fg.beta, syllables_word(n, e))) return w;
        int k = m - 1;
        while (k >= 1 && e[k] == n - 1) e[k--] = 1;
        if (k < 1) return std::nullopt;
        ++e[k];
    }
}

}  // namespace

std::optional<Witness> simple_axis_search(const Complex& gamma, int n, int max_letters, int threads, long bits) {
    if (max_letters < 1) throw std::invalid_argument("max_letters must be at least 1");
    PrecisionScope ps(bits);
    Complex beta(Real(-4L) * pow(sin(Real::pi() / Real(static_cast<long>(n))), 2));
    Generators fg = realize(gamma, beta);
    if (auto w = test_witness(fg, beta, syllables_word(n, {}))) return w;
    threads = std::max(1, threads);
    for (int m = 1; 2 * m + 1 <= max_letters; ++m) {
        std::vector<std::optional<Witness>> found(n);
        std::atomic<int> next{1};
        auto work = [&] {
            PrecisionScope tps(bits);
            for (int e1; (e1 = next++) < n;) found[e1] = scan_prefix(fg, n, m, e1);
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < std::min(threads, n - 1); ++t) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        for (int e1 = 1; e1 < n; ++e1)
            if (found[e1]) return found[e1];
    }
    return std::nullopt;
}

const char* simple_outcome_name(SimpleOutcome s) {
    switch (s) {
        case SimpleOutcome::non_simple: return "non_simple";
        case SimpleOutcome::simple: return "simple";
        case SimpleOutcome::unknown: return "unknown";
        case SimpleOutcome::finite_group: return "finite_group";
        case SimpleOutcome::fuchsian: return "fuchsian";
    }
    return "?";
}

std::optional<std::string> finite_triangle_group(const Complex& gamma, int n) {
    Real beta = Real(-4L) * pow(sin(Real::pi() / Real(static_cast<long>(n))), 2);
    // tr^2(fg) = gamma - beta for the normalized pair
    Complex t2 = gamma - Complex(beta);
    for (int m = 2; m <= 5; ++m) {
        if (2 * n * m <= n * m + 2 * m + 2 * n) {  // 1/2 + 1/n + 1/m > 1
            for (int k = 1; k < m; ++k) {
                if (std::gcd(k, m) != 1) continue;
                Real c = Real(4L) * pow(cos(Real(static_cast<long>(k)) * Real::pi() / Real(static_cast<long>(m))), 2);
                if (abs(t2 - Complex(c)) < Real(1e-25)) {
                    int a = std::min(n, m), b = std::max(n, m);
                    if (a == 2) return "D" + std::to_string(b);
                    if (a == 3 && b == 3) return std::string("A4");
                    if (a == 3 && b == 4) return std::string("S4");
                    if (a == 3 && b == 5) return std::string("A5");
                }
            }
        }
    }
    return std::nullopt;
}

SimpleClassification classify_simple(const SimpleInputs& in, const std::optional<Witness>& search) {
    SimpleClassification out;
    if (auto g = finite_triangle_group(in.gamma, in.n)) {
        out.outcome = SimpleOutcome::finite_group;
        out.group = *g;
        out.obstruction = "fg has finite order; spherical triangle group";
        return out;
    }
    bool real_field = in.gamma_k ? in.gamma_k->field()->r2() == 0 : abs(in.gamma.im) < Real(1e-30);
    if (real_field) {
        out.outcome = SimpleOutcome::fuchsian;
        out.obstruction = "totally real parameters";
        return out;
    }
    if (search) {
        out.outcome = SimpleOutcome::non_simple;
        out.witness = search;
        return out;
    }
    if (!in.gamma_k || !in.beta_k || !in.ram) {
        out.obstruction = "no field data";
        return out;
    }
    const Field& K = in.gamma_k->field();
    const RamificationReport& R = *in.ram;
    std::optional<std::vector<mpz_class>> finite = in.assumed_finite;
    if (!finite && R.determined()) finite = R.finite_norms;

    // finite subgroups A4, S4, A5 force (-1,-1) or, for n = 5, an A5 configuration
    bool finite_out = false;
    std::string why;
    if (in.n >= 6) {
        finite_out = true;
        why = "no finite subgroup has an element of order n >= 6";
    } else if (is_minus_one_minus_one_possible(R, K) == RuleOutcome::ruled_out) {
        finite_out = true;
        why = "algebra is not (-1,-1)";
    } else if (in.n == 5 && K->degree() == 4) {
        FieldElem s5 = mpq_class(2) * *in.beta_k + mpq_class(5);
        if (a5_quartic_rule(K, s5, R, finite) == RuleOutcome::ruled_out) {
            finite_out = true;
            why = "quartic field with sqrt 5 and finite ramification";
        }
    }
    if (!finite_out) {
        out.obstruction = "finite subgroup case not excluded";
        return out;
    }

    // euclidean triangle subgroups only for n = 3, 4, 6 and only over Q(i), Q(sqrt -3) in M(2, k)
    bool euclid_out = false;
    if (in.n != 3 && in.n != 4 && in.n != 6) {
        euclid_out = true;
    } else if (K->degree() != 2) {
        euclid_out = true;
        why += "; kG is not imaginary quadratic";
    } else {
        mpz_class d = field_discriminant(K->poly()).disc;
        if (d != -3 && d != -4) {
            euclid_out = true;
            why += "; kG is not Q(i) or Q(sqrt -3)";
        } else if (!R.real_ramified.empty() || (finite && !finite->empty())) {
            euclid_out = true;
            why += "; algebra is a division algebra";
        }
    }
    if (!euclid_out) {
        out.obstruction = why + "; euclidean case not excluded";
        return out;
    }
    out.outcome = SimpleOutcome::simple;
    out.obstruction = why;
    return out;
}

}  // namespace akg
