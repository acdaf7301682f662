#ifndef GRING_GROUP_HPP
#define GRING_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gring/permutation.hpp"

namespace gring {

struct BuildLimits {
  int max_degree = 64;
  int max_order = 720;
};

// A finite group materialized as a full multiplication table over element
// indices. Immutable after construction; safe to share across threads.
class GroupTable {
public:
  // Closure of the generators under composition. Throws on degree mismatch or
  // when the closure exceeds limits.max_order.
  static GroupTable closure(const std::vector<Permutation>& generators,
                            const BuildLimits& limits = {});

  int order() const { return order_; }
  int degree() const { return degree_; }
  int identity() const { return identity_; }

  int mul(int g, int h) const {
    return mul_[static_cast<size_t>(g) * static_cast<size_t>(order_) + static_cast<size_t>(h)];
  }
  int inv(int g) const { return inv_[static_cast<size_t>(g)]; }

  // g^e for any integer exponent (negative exponents use the inverse).
  int power(int g, long long e) const;

  int element_order(int g) const { return element_order_[static_cast<size_t>(g)]; }
  long long exponent() const { return exponent_; }

  const Permutation& permutation(int g) const { return perms_[static_cast<size_t>(g)]; }
  const std::string& label(int g) const { return labels_[static_cast<size_t>(g)]; }

  // Index of the element with the given permutation, or -1.
  int element_index(const Permutation& p) const;
  // Index of the element with the given 1-based cycle notation, or -1.
  int element_index(const std::string& cycles) const;

  const std::vector<Permutation>& generators() const { return generators_; }

private:
  GroupTable() = default;

  int order_ = 0;
  int degree_ = 0;
  int identity_ = 0;
  long long exponent_ = 1;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> inv_;
  std::vector<int> element_order_;
  std::vector<Permutation> perms_;
  std::vector<std::string> labels_;
  std::vector<Permutation> generators_;
};

GroupTable build_group(const std::vector<Permutation>& generators,
                       const BuildLimits& limits = {});

// Named families used by the catalog and the CLI.
GroupTable cyclic_group(int n, const BuildLimits& limits = {});
GroupTable dihedral_group(int n, const BuildLimits& limits = {});  // order 2n
GroupTable symmetric_group(int n, const BuildLimits& limits = {});
GroupTable alternating_group(int n, const BuildLimits& limits = {});
GroupTable quaternion_group();  // Q8, regular action on 8 points
GroupTable direct_product(const GroupTable& lhs, const GroupTable& rhs,
                          const BuildLimits& limits = {});

// Subset of element indices, packed. Equality is set equality.
class Subset {
public:
  Subset() = default;
  explicit Subset(int universe) : universe_(universe), words_((static_cast<size_t>(universe) + 63) / 64, 0) {}

  static Subset full(int universe);

  int universe() const { return universe_; }
  bool contains(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void add(int i) { words_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }
  int count() const;
  std::vector<int> elements() const;

  bool operator==(const Subset&) const = default;
  // Lexicographic order on the packed words; used to pick class representatives.
  bool operator<(const Subset& rhs) const { return words_ < rhs.words_; }

private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

Subset cyclic_subgroup(const GroupTable& G, int g);
bool is_subgroup(const GroupTable& G, const Subset& H);
Subset conjugate_subset(const GroupTable& G, const Subset& H, int g);

// N_G(H) = {g : gHg^-1 = H}. Throws std::invalid_argument if H is not a
// subgroup.
Subset normalizer(const GroupTable& G, const Subset& H);

bool is_normal_subgroup(const GroupTable& G, const Subset& H);

struct TableCheckOptions {
  int exhaustive_assoc_bound = 128;  // full triple scan up to this order
  int assoc_samples = 20000;         // random triples above it
  uint64_t seed = 0x5eed;
};

// Sanity validation of the table axioms (identity, inverses, associativity).
// Throws std::logic_error on any violation.
void validate_table(const GroupTable& G, const TableCheckOptions& opts = {});

}  // namespace gring

#endif
