#ifndef GRING_FREE_VERIFY_HPP
#define GRING_FREE_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gring/units.hpp"

namespace gring {

enum class Letter { U, Z };

struct Syllable {
  Letter letter = Letter::U;
  int exponent = 0;  // nonzero
  bool operator==(const Syllable&) const = default;
};

// An alternating word in the two generators. Exponents of a finite-order
// letter lie in [1, s-1]; exponents of an infinite-order letter lie in
// [-E, E] \ {0}.
struct WordSpec {
  std::vector<Syllable> syllables;
  std::string str() const;  // e.g. "u z^2 u^-1"
  bool operator==(const WordSpec&) const = default;
};

struct LetterOrder {
  bool finite = false;
  long long order = 0;  // when finite
};

// Visits every alternating word with at most max_syllables syllables and
// admissible exponents, each exactly once, in depth-first order (prefixes
// before extensions, letter U before Z, exponents in canonical order:
// ascending for finite letters, 1, -1, 2, -2, ... for infinite ones).
// Returning false from the visitor stops the enumeration.
void for_each_word(LetterOrder u, LetterOrder z, int max_syllables, int exponent_bound,
                   const std::function<bool(const WordSpec&)>& visit);

std::vector<WordSpec> enumerate_words(LetterOrder u, LetterOrder z, int max_syllables,
                                      int exponent_bound);

struct FreenessReport {
  std::string witness_id;  // "a=<cycles> b=<cycles>" of the defining witness
  int k = 0;
  std::string claimed;  // "C<s> * C<s>" or "Cinf * Cinf"
  bool claimed_finite = false;
  long long claimed_order = 0;
  int max_syllables = 0;
  int exponent_bound = 0;
  long long words_checked = 0;
  bool truncated = false;  // stopped by the word budget
  std::optional<WordSpec> counterexample;
  // When a counterexample is found the hypotheses are rechecked
  // (b outside N_G(<a^k>)) to localize blame; true otherwise.
  bool hypotheses_ok = true;

  bool certified() const { return !counterexample.has_value(); }
};

// Evaluates every enumerated word of <u, z> in KG by exact multiplication and
// reports the first word equal to 1, if any. word_budget = 0 means unlimited.
// With a budget the search is sequential (deterministic truncation);
// unbudgeted runs may fan the top-level branches out over `jobs` workers.
FreenessReport certify_freeness(const UnitFamily& fam, int max_syllables, int exponent_bound,
                                long long word_budget = 0, int jobs = 1);

struct HydraReport {
  bool comm_nontrivial = false;      // (u, w) != 1
  bool comm_formula_match = false;   // (u, w) == 1 + (a^-k - a^(1-k) + a - 1)*b*hat(a)
  bool second_comm_trivial = false;  // ((u, w), w) == 1
  bool all() const { return comm_nontrivial && comm_formula_match && second_comm_trivial; }
};

// Requires k in witness.valid_k.
HydraReport certify_hydra(const UnitFamily& fam);

// For k = 1: verifies z = w^-1 * u * w by fresh multiplication, certifying
// that the generating pair {u, z} lies in the normal closure of u inside
// <u, w>. Throws std::invalid_argument when fam.k != 1.
bool certify_normal_generation(const UnitFamily& fam);

}  // namespace gring

#endif
