#ifndef GRING_RING_ELEMENT_HPP
#define GRING_RING_ELEMENT_HPP

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gring/coeff.hpp"
#include "gring/group.hpp"

namespace gring {

// An element of the group ring KG: a sparse coefficient map over element
// indices. Stored coefficients are nonzero and normalized in the coefficient
// ring, so equality is map equality. Immutable in spirit: all operations
// return fresh values.
class RingElement {
public:
  RingElement(const GroupTable* group, CoeffRing ring) : group_(group), ring_(ring) {}

  static RingElement zero(const GroupTable* g, CoeffRing r) { return RingElement(g, r); }
  static RingElement one(const GroupTable* g, CoeffRing r) { return basis(g, r, g->identity()); }
  static RingElement basis(const GroupTable* g, CoeffRing r, int element, Int coeff = 1);

  const GroupTable* group() const { return group_; }
  const CoeffRing& ring() const { return ring_; }
  const std::map<int, Int>& coeffs() const { return coeffs_; }

  Int coeff(int element) const;
  void set_coeff(int element, Int value);

  int support_size() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& rhs) const;  // convolution over the table
  RingElement scaled(const Int& c) const;

  bool operator==(const RingElement& rhs) const;

  Int augmentation() const;  // sum of coefficients
  Int trace() const;         // coefficient of the identity

  std::string str() const;  // diagnostic form, e.g. "1*() + 2*(1 2)"

private:
  void check_compatible(const RingElement& rhs) const;

  const GroupTable* group_;
  CoeffRing ring_;
  std::map<int, Int> coeffs_;
};

// Sum of all |a| distinct powers of a, each with coefficient 1.
RingElement hat_element(const GroupTable* G, CoeffRing ring, int a);

struct AnnihilatorCheck {
  bool annihilates = false;    // x*(h-1) == 0 for all h in <a>
  bool hat_multiple = false;   // x == y*hat(a) for some y, i.e. the
                               // coefficients of x are constant on every left
                               // coset g<a>
};

AnnihilatorCheck check_annihilator(const GroupTable& G, int a, const RingElement& x);

// Serialized as a list of {"element": label, "coeff": decimal string} pairs,
// sorted by element index.
nlohmann::json ring_element_to_json(const RingElement& x);
RingElement ring_element_from_json(const GroupTable* G, CoeffRing ring, const nlohmann::json& j);

}  // namespace gring

#endif
