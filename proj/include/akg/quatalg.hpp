// Invariant quaternion algebras (a, b / k) and their ramification.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akg/numfield.hpp"

namespace akg {

struct HilbertSymbol {
    FieldElem a;
    FieldElem b;
    const Field& field() const { return a.field(); }
};

// (beta(beta + 4), gamma(gamma - beta)). With eq81 set, a is built as
// beta(f^2) = (beta + 2)^2 - 4 and b as gamma(gamma + 4 sin^2(pi/n)).
HilbertSymbol invariant_symbol(const FieldElem& gamma, const FieldElem& beta, bool eq81 = false);

// Real embeddings (indices into K->embeddings()) where both a and b are negative.
std::vector<int> real_ramification(const HilbertSymbol& s);

// Norm of the discriminant generator of the order used for elliptic order n:
// gamma(gamma+3), 2 gamma(gamma+2), gamma(gamma-beta), 9 gamma(gamma+1).
mpz_class order_disc_norm(int n, const FieldElem& gamma, const FieldElem& beta);
FieldElem order_disc_element(int n, const FieldElem& gamma, const FieldElem& beta);

// Local symbol at one prime ideal.
struct LocalSymbol {
    long l = 0;
    int e = 0, f = 0;
    mpz_class norm;
    int value = 0;  // +1 split, -1 ramified, 0 not decided
    std::string method;
};

// Hilbert symbol at every prime above l. a, b must be integral.
std::vector<LocalSymbol> local_symbols(const HilbertSymbol& s, long l);

// Valuation of x at every prime above l, in the same order as local_symbols.
// Empty when l is a common index divisor.
struct PrimeValuation {
    long l = 0;
    int e = 0, f = 0;
    mpz_class norm;
    int v = 0;
};
std::optional<std::vector<PrimeValuation>> prime_valuations(const FieldElem& x, long l);

enum class FiniteStatus { unramified, primes, dyadic_only_candidate, undetermined };
const char* finite_status_name(FiniteStatus s);

struct RamificationReport {
    int real_places = 0;
    std::vector<int> real_ramified;
    FiniteStatus finite = FiniteStatus::undetermined;
    std::vector<mpz_class> finite_norms;  // ramified prime norms, descending
    std::vector<LocalSymbol> local;       // every prime examined
    std::optional<mpz_class> order_disc_norm;
    std::string note;

    bool determined() const { return finite == FiniteStatus::unramified || finite == FiniteStatus::primes; }
    // parity of the full ramification set; meaningful when determined
    bool parity_even() const { return (real_ramified.size() + finite_norms.size()) % 2 == 0; }
};

// Local symbols at the primes dividing N(a) N(b) and at 2, closed by the
// parity of the ramification set when exactly one prime is left open.
RamificationReport classify_finite_ramification(const HilbertSymbol& s, std::optional<mpz_class> disc_norm = {});

enum class RuleOutcome { ruled_out, consistent };
const char* rule_name(RuleOutcome r);

// The algebra could be (-1,-1 / k) only if every real place ramifies and
// no finite prime of odd norm does.
RuleOutcome is_minus_one_minus_one_possible(const RamificationReport& report, const Field& K);

// A quartic field containing sqrt 5 and an A5 subgroup force empty finite
// ramification. sqrt5 must square to 5 in K. finite_norms overrides the
// report when given.
RuleOutcome a5_quartic_rule(const Field& K, const FieldElem& sqrt5, const RamificationReport& report,
                            const std::optional<std::vector<mpz_class>>& finite_norms = {});

}  // namespace akg
