#include "gring/free_verify.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "gring/parallel.hpp"

namespace gring {

std::string WordSpec::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : syllables) {
    if (!first) out << ' ';
    out << (s.letter == Letter::U ? 'u' : 'z');
    if (s.exponent != 1) out << '^' << s.exponent;
    first = false;
  }
  return out.str();
}

namespace {

std::vector<int> exponent_domain(const LetterOrder& o, int exponent_bound) {
  std::vector<int> out;
  if (o.finite) {
    for (long long e = 1; e < o.order; ++e) out.push_back(static_cast<int>(e));
  } else {
    for (int e = 1; e <= exponent_bound; ++e) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

bool extend_words(WordSpec& prefix, const std::vector<int>& u_dom, const std::vector<int>& z_dom,
                  int max_syllables, const std::function<bool(const WordSpec&)>& visit) {
  for (Letter letter : {Letter::U, Letter::Z}) {
    if (!prefix.syllables.empty() && prefix.syllables.back().letter == letter) continue;
    const auto& dom = letter == Letter::U ? u_dom : z_dom;
    for (int e : dom) {
      prefix.syllables.push_back({letter, e});
      bool keep = visit(prefix);
      if (keep && static_cast<int>(prefix.syllables.size()) < max_syllables) {
        keep = extend_words(prefix, u_dom, z_dom, max_syllables, visit);
      }
      prefix.syllables.pop_back();
      if (!keep) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_word(LetterOrder u, LetterOrder z, int max_syllables, int exponent_bound,
                   const std::function<bool(const WordSpec&)>& visit) {
  if (max_syllables < 1) throw std::out_of_range("max_syllables must be >= 1");
  if (exponent_bound < 1) throw std::out_of_range("exponent_bound must be >= 1");
  WordSpec prefix;
  extend_words(prefix, exponent_domain(u, exponent_bound), exponent_domain(z, exponent_bound),
               max_syllables, visit);
}

std::vector<WordSpec> enumerate_words(LetterOrder u, LetterOrder z, int max_syllables,
                                      int exponent_bound) {
  std::vector<WordSpec> out;
  for_each_word(u, z, max_syllables, exponent_bound, [&](const WordSpec& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

namespace {

// Memoized letter powers: value(letter, e) with e in the letter's domain.
class SyllableValues {
public:
  SyllableValues(const UnitFamily& fam, const std::vector<int>& u_dom,
                 const std::vector<int>& z_dom) {
    fill(Letter::U, fam.u, fam.u_inv, u_dom, fam);
    fill(Letter::Z, fam.z, fam.z_inv, z_dom, fam);
  }

  const RingElement& get(Letter l, int e) const { return values_.at({l == Letter::U ? 0 : 1, e}); }

private:
  void fill(Letter l, const RingElement& base, const RingElement& base_inv,
            const std::vector<int>& dom, const UnitFamily& fam) {
    int key = l == Letter::U ? 0 : 1;
    int max_pos = 0, max_neg = 0;
    for (int e : dom) {
      if (e > max_pos) max_pos = e;
      if (-e > max_neg) max_neg = -e;
    }
    RingElement acc = RingElement::one(fam.group, fam.ring);
    for (int e = 1; e <= max_pos; ++e) {
      acc = acc * base;
      values_.emplace(std::pair<int, int>{key, e}, acc);
    }
    acc = RingElement::one(fam.group, fam.ring);
    for (int e = 1; e <= max_neg; ++e) {
      acc = acc * base_inv;
      values_.emplace(std::pair<int, int>{key, -e}, acc);
    }
  }

  std::map<std::pair<int, int>, RingElement> values_;
};

struct BranchOutcome {
  long long words = 0;
  bool truncated = false;
  std::optional<WordSpec> counterexample;
};

// Depth-first evaluation below one fixed first syllable, carrying the running
// product so each extension costs a single ring multiplication.
void search_branch(const SyllableValues& values, const std::vector<int>& u_dom,
                   const std::vector<int>& z_dom, int max_syllables, WordSpec& word,
                   const RingElement& product, long long budget, BranchOutcome& out) {
  ++out.words;
  if (product.is_one()) {
    if (!out.counterexample) out.counterexample = word;
    return;
  }
  if (static_cast<int>(word.syllables.size()) >= max_syllables) return;
  Letter last = word.syllables.back().letter;
  Letter next = last == Letter::U ? Letter::Z : Letter::U;
  const auto& dom = next == Letter::U ? u_dom : z_dom;
  for (int e : dom) {
    if (budget > 0 && out.words >= budget) {
      out.truncated = true;
      return;
    }
    word.syllables.push_back({next, e});
    search_branch(values, u_dom, z_dom, max_syllables, word, product * values.get(next, e), budget,
                  out);
    word.syllables.pop_back();
    if (out.counterexample || out.truncated) return;
  }
}

}  // namespace

FreenessReport certify_freeness(const UnitFamily& fam, int max_syllables, int exponent_bound,
                                long long word_budget, int jobs) {
  if (max_syllables < 1) throw std::out_of_range("max_syllables must be >= 1");
  if (exponent_bound < 1) throw std::out_of_range("exponent_bound must be >= 1");

  OrderClassification cls = classify_order(fam.witness.order_a, fam.k, fam.witness.M);
  LetterOrder order{cls.finite, cls.order};

  FreenessReport report;
  report.witness_id = "a=" + fam.group->label(fam.witness.a) + " b=" + fam.group->label(fam.witness.b);
  report.k = fam.k;
  report.claimed_finite = cls.finite;
  report.claimed_order = cls.order;
  report.claimed = cls.finite
                       ? "C" + std::to_string(cls.order) + " * C" + std::to_string(cls.order)
                       : "Cinf * Cinf";
  report.max_syllables = max_syllables;
  report.exponent_bound = exponent_bound;

  // u and z are conjugate, so they share one exponent domain.
  std::vector<int> dom = exponent_domain(order, exponent_bound);
  SyllableValues values(fam, dom, dom);

  // Top-level branches: one per (starting letter, exponent).
  std::vector<Syllable> branches;
  for (Letter l : {Letter::U, Letter::Z}) {
    for (int e : dom) branches.push_back({l, e});
  }

  std::vector<BranchOutcome> outcomes(branches.size());
  auto run_branch = [&](size_t i, long long budget) {
    WordSpec word;
    word.syllables.push_back(branches[i]);
    search_branch(values, dom, dom, max_syllables, word,
                  values.get(branches[i].letter, branches[i].exponent), budget, outcomes[i]);
  };

  if (word_budget > 0) {
    // Budgeted runs stay sequential so truncation is deterministic.
    long long used = 0;
    for (size_t i = 0; i < branches.size(); ++i) {
      if (used >= word_budget) {
        report.truncated = true;  // further branches remain unvisited
        break;
      }
      run_branch(i, word_budget - used);
      used += outcomes[i].words;
      report.truncated = report.truncated || outcomes[i].truncated;
      if (outcomes[i].counterexample) {
        report.counterexample = outcomes[i].counterexample;
        break;
      }
    }
    report.words_checked = used;
  } else {
    parallel_for(branches.size(), jobs, [&](size_t i) { run_branch(i, 0); });
    for (const auto& o : outcomes) {
      report.words_checked += o.words;
      if (o.counterexample && !report.counterexample) report.counterexample = o.counterexample;
    }
  }

  if (report.counterexample) {
    Subset power_subgroup = cyclic_subgroup(*fam.group, fam.a_pow_k);
    report.hypotheses_ok = !normalizer(*fam.group, power_subgroup).contains(fam.witness.b);
  }
  return report;
}

HydraReport certify_hydra(const UnitFamily& fam) {
  if (!fam.witness.k_valid(fam.k)) {
    throw std::invalid_argument("certify_hydra: b normalizes <a^k>");
  }
  const GroupTable* G = fam.group;
  const CoeffRing& R = fam.ring;
  RingElement one = RingElement::one(G, R);

  RingElement c = commutator(fam.u, fam.w, fam.u_inv, fam.w_inv);
  RingElement c_inv = fam.w_inv * fam.u_inv * fam.w * fam.u;

  HydraReport out;
  out.comm_nontrivial = !c.is_one();

  RingElement a = RingElement::basis(G, R, fam.witness.a);
  RingElement a_mk = RingElement::basis(G, R, G->power(fam.witness.a, -fam.k));
  RingElement a_1mk = RingElement::basis(G, R, G->power(fam.witness.a, 1 - fam.k));
  RingElement b_hat = RingElement::basis(G, R, fam.witness.b) * hat_element(G, R, fam.witness.a);
  RingElement expected = one + (a_mk - a_1mk + a - one) * b_hat;
  out.comm_formula_match = c == expected;

  out.second_comm_trivial = commutator(c, fam.w, c_inv, fam.w_inv).is_one();
  return out;
}

bool certify_normal_generation(const UnitFamily& fam) {
  if (fam.k != 1) throw std::invalid_argument("certify_normal_generation: requires k = 1");
  return fam.w_inv * fam.u * fam.w == fam.z;
}

}  // namespace gring
