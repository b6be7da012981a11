// Matrix realizations of (gamma, beta, -4), word evaluation, axial distances
// and the search for words h with axis(f) meeting axis(h f h^-1).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akg/quatalg.hpp"
#include "akg/real.hpp"

namespace akg {

struct Mat2C {
    Complex a, b, c, d;

    static Mat2C identity();
    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
    // adjugate; the inverse when det = 1
    Mat2C inverse() const;
    Mat2C operator*(const Mat2C& o) const;
    Mat2C operator+(const Mat2C& o) const;
    Mat2C operator-(const Mat2C& o) const;
    Mat2C operator*(const Complex& s) const;
    // largest entry modulus
    Real max_abs() const;
};

struct Generators {
    Mat2C F, G;
    Complex gamma, beta;
};

// F = diag(u, 1/u) with (u + 1/u)^2 = beta + 4, G = [[a, 1], [-1 - a^2, -a]]
// with a^2 = gamma/beta - 1 (principal branches).
Generators realize(const Complex& gamma, const Complex& beta);

// Letters over f (exponent mod n) and g (order two).
struct Letter {
    char gen = 'g';
    int exp = 1;
    bool operator==(const Letter&) const = default;
};

struct WordSpec {
    int n = 0;
    std::vector<Letter> letters;  // reduced: no adjacent equal generators, no trivial powers

    bool operator==(const WordSpec&) const = default;
};

// Merges adjacent letters and drops g^2 and f^n.
WordSpec reduce_word(int n, const std::vector<Letter>& letters);
// "gfgf^-1g", "f^2", and substitutions such as "kfk^-1fk;k=gfgfg".
WordSpec parse_word(const std::string& text, int n);
// f exponents printed in (-n/2, n/2]: "gf^-1gfg"
std::string format_word(const WordSpec& w);
WordSpec inverse_word(const WordSpec& w);

Mat2C evaluate_word(const Generators& fg, const WordSpec& w);
// tr[F, H] - 2 for the word H; re-evaluated at doubled precision when the two
// working precisions disagree
Complex gamma_of_word(const Generators& fg, const WordSpec& w);
// tr(H)^2 - 4
Complex beta_of_word(const Generators& fg, const WordSpec& w);

// cosh 2 delta = |4 gamma/(beta beta') + 1| + |4 gamma/(beta beta')|
Real axial_distance(const Complex& gamma, const Complex& beta, const Complex& beta2);
// cosh delta = (|gamma - beta| + |gamma|)/|beta|, the distance between the
// axes of f and h f h^-1
Real conj_axis_distance(const Complex& gamma, const Complex& beta);
// gamma(f, h f h^-1) = gamma(gamma - beta)
Complex conj_map(const Complex& gamma, const Complex& beta);

enum class WordMap { cube, conj };  // gamma(1 + beta - gamma)^2 and gamma(gamma - beta)
const char* word_map_name(WordMap m);
WordMap parse_word_map(const std::string& s);
Complex apply_word_map(WordMap m, const Complex& gamma, const Complex& beta);

enum class TrajectoryVerdict { escapes, converges_to_zero, cycles, bounded };
const char* trajectory_verdict_name(TrajectoryVerdict v);

struct Trajectory {
    std::vector<Complex> points;  // gamma_0, gamma_1, ...
    TrajectoryVerdict verdict = TrajectoryVerdict::bounded;
    int steps = 0;                // iterations performed
};

// Stops at |gamma| < zero_tol, |gamma| > escape_radius or a repeated value.
Trajectory word_map_iterate(const Complex& gamma0, const Complex& beta, WordMap m, int max_iter,
                            double zero_tol = 1e-10, double escape_radius = 1e10);

enum class WitnessKind { interval, equals_beta };
const char* witness_kind_name(WitnessKind k);

struct Witness {
    WordSpec word;
    Complex gamma_h;  // gamma(f, h)
    Complex beta_h;   // beta(h)
    WitnessKind kind = WitnessKind::interval;
};

// Is gamma(f, h) real in (beta, 0), or equal to beta with beta(h) != -4?
std::optional<Witness> test_witness(const Generators& fg, const Complex& beta, const WordSpec& w);

// Words g f^e1 g ... f^em g with 2m + 1 <= max_letters, in (length, exponent
// lex) order with each word/inverse pair tested once. The first witness in
// that order is returned whatever the thread count.
std::optional<Witness> simple_axis_search(const Complex& gamma, int n, int max_letters = 9, int threads = 1,
                                          long bits = 128);

enum class SimpleOutcome { non_simple, simple, unknown, finite_group, fuchsian };
const char* simple_outcome_name(SimpleOutcome s);

struct SimpleClassification {
    SimpleOutcome outcome = SimpleOutcome::unknown;
    std::optional<Witness> witness;
    std::string group;        // "A4", "S4", "A5" or "D<m>" for finite groups
    std::string obstruction;  // reasons, or what is left open
};

struct SimpleInputs {
    int n = 0;
    Complex gamma;
    // invariant trace field data; empty when gamma is rational
    std::optional<FieldElem> gamma_k, beta_k;
    std::optional<RamificationReport> ram;
    // finite ramification taken as given when the classifier leaves it open
    std::optional<std::vector<mpz_class>> assumed_finite;
};

// Finite triangle group (2, n, m) when fg has finite order m with
// 1/2 + 1/n + 1/m > 1.
std::optional<std::string> finite_triangle_group(const Complex& gamma, int n);

SimpleClassification classify_simple(const SimpleInputs& in, const std::optional<Witness>& search);

}  // namespace akg
