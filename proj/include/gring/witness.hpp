#ifndef GRING_WITNESS_HPP
#define GRING_WITNESS_HPP

#include <vector>

#include "gring/group.hpp"

namespace gring {

// A pair (a, b) with <a> non-normal and b outside its normalizer, together
// with the derived data the unit constructions depend on:
//   M        least integer in [2, |a|] with b in N_G(<a^M>)
//   valid_k  all k in [1, |a|) with b not in N_G(<a^k>); always contains 1
struct Witness {
  int a = 0;
  int order_a = 0;
  int b = 0;
  int M = 0;
  std::vector<int> valid_k;

  bool k_valid(int k) const;
};

// Throws std::invalid_argument unless <a> is non-normal and b is outside
// N_G(<a>). M = |a| is always admissible because <a^|a|> is trivial.
int compute_M(const GroupTable& G, int a, int b);

struct WitnessScanOptions {
  // Keep only the first witness found for each conjugacy class of <a>.
  bool dedup_conjugacy = false;
};

// Every (a, b) pair, ordered by (a index, b index).
std::vector<Witness> find_witnesses(const GroupTable& G, const WitnessScanOptions& opts = {});

}  // namespace gring

#endif
