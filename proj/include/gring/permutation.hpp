#ifndef GRING_PERMUTATION_HPP
#define GRING_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace gring {

// A permutation of the points {0, ..., degree-1}, stored as its image table.
// Products compose like functions: (p * q) maps x to p(q(x)), i.e. q acts first.
class Permutation {
public:
  Permutation() = default;

  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  // Parses 1-based cycle notation such as "(1 2 3)(4 5)". "()" and "e" denote
  // the identity. Non-disjoint cycles are multiplied right to left.
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  long long order() const;  // lcm of cycle lengths

  // Same mapping on a larger point set: points are shifted by `offset`, all
  // other points of the new degree are fixed.
  Permutation embedded(int offset, int new_degree) const;

  // Canonical disjoint-cycle form, 1-based; the identity renders as "()".
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace gring

#endif
