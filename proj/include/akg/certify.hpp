// Sufficient criteria for a two-generator group to be a subgroup of an
// arithmetic Kleinian group, with the evidence that decided each condition.
#pragma once

#include <string>
#include <vector>

#include "akg/numfield.hpp"
#include "akg/params.hpp"

namespace akg {

enum class Verdict { subgroup_of_arithmetic, inconclusive };

struct Condition {
    std::string id;
    bool pass = false;
    std::string evidence;
    // real roots or embedded values that decided the condition, as [lo, hi]
    std::vector<std::pair<double, double>> intervals;
};

struct DiscretenessCertificate {
    Verdict verdict = Verdict::inconclusive;
    std::string theorem;  // "T5.10", "T5.13" or "T5.14"
    std::vector<Condition> conditions;

    bool passed() const { return verdict == Verdict::subgroup_of_arithmetic; }
};

const char* verdict_name(Verdict v);

// n in {3, 4, 6}: every root of p other than gamma (and conj gamma) real and
// inside (beta, 0). p monic; gamma_approx must match a root of p.
DiscretenessCertificate check_t514(const IntPoly& p, const Complex& gamma_approx, int n, long bits = 128);

// n in {5, 7}: for each conjugate beta_k the roots of p(z, beta_k) lie in
// (beta_k, 0), except gamma and conj gamma for k = 1.
DiscretenessCertificate check_t513(const BivarIntPoly& p, const Complex& gamma_approx, int n, long bits = 128);

// Integrality, signature and the sign conditions at the real embeddings of
// K = Q(gamma, beta). identity is the index in K->embeddings() of the
// embedding that realizes the group (skipped when it is real).
DiscretenessCertificate check_t510(const FieldElem& gamma, const FieldElem& beta, size_t identity);

// beta of order n as an element of K, which must contain it; p(gamma, beta) = 0
// selects the conjugate when K contains several roots of the minimal polynomial.
FieldElem beta_in_field(const Field& K, int n, const FieldElem& gamma, const BivarIntPoly& p);

}  // namespace akg
