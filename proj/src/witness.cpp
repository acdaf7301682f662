#include "gring/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gring {

bool Witness::k_valid(int k) const {
  return std::binary_search(valid_k.begin(), valid_k.end(), k);
}

namespace {

// Normalizers of <a^k> for k = 1..|a|, deduplicated through gcd classes:
// <a^k> = <a^gcd(k,|a|)>.
std::vector<Subset> power_subgroup_normalizers(const GroupTable& G, int a, int order_a) {
  std::map<int, Subset> by_gcd;
  std::vector<Subset> out;
  out.reserve(static_cast<size_t>(order_a));
  for (int k = 1; k <= order_a; ++k) {
    int g = std::gcd(k, order_a);
    auto it = by_gcd.find(g);
    if (it == by_gcd.end()) {
      Subset n = normalizer(G, cyclic_subgroup(G, G.power(a, g)));
      it = by_gcd.emplace(g, std::move(n)).first;
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

int compute_M(const GroupTable& G, int a, int b) {
  int order_a = G.element_order(a);
  Subset A = cyclic_subgroup(G, a);
  Subset N = normalizer(G, A);
  if (N.count() == G.order()) throw std::invalid_argument("compute_M: <a> is normal");
  if (N.contains(b)) throw std::invalid_argument("compute_M: b normalizes <a>");
  for (int m = 2; m <= order_a; ++m) {
    Subset Nm = normalizer(G, cyclic_subgroup(G, G.power(a, m)));
    if (Nm.contains(b)) return m;
  }
  throw std::logic_error("compute_M: no admissible M found");  // unreachable
}

std::vector<Witness> find_witnesses(const GroupTable& G, const WitnessScanOptions& opts) {
  std::vector<Witness> out;
  std::set<Subset> seen_classes;
  for (int a = 0; a < G.order(); ++a) {
    int order_a = G.element_order(a);
    if (order_a < 2) continue;
    auto norms = power_subgroup_normalizers(G, a, order_a);
    const Subset& N1 = norms[0];
    if (N1.count() == G.order()) continue;  // <a> normal

    if (opts.dedup_conjugacy) {
      Subset A = cyclic_subgroup(G, a);
      Subset rep = A;
      for (int g = 0; g < G.order(); ++g) {
        Subset c = conjugate_subset(G, A, g);
        if (c < rep) rep = c;
      }
      if (!seen_classes.insert(rep).second) continue;
    }

    bool emitted = false;
    for (int b = 0; b < G.order(); ++b) {
      if (N1.contains(b)) continue;
      Witness w;
      w.a = a;
      w.order_a = order_a;
      w.b = b;
      for (int m = 2; m <= order_a; ++m) {
        if (norms[static_cast<size_t>(m - 1)].contains(b)) {
          w.M = m;
          break;
        }
      }
      for (int k = 1; k < order_a; ++k) {
        if (!norms[static_cast<size_t>(k - 1)].contains(b)) w.valid_k.push_back(k);
      }
      out.push_back(std::move(w));
      emitted = true;
      if (opts.dedup_conjugacy && emitted) break;
    }
  }
  return out;
}

}  // namespace gring
