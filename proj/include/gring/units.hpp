#ifndef GRING_UNITS_HPP
#define GRING_UNITS_HPP

#include <string>

#include "gring/poly.hpp"
#include "gring/ring_element.hpp"
#include "gring/witness.hpp"

namespace gring {

// Reduced fraction with positive denominator.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d);
  bool is_integral() const { return den == 1; }
  std::string str() const;
  bool operator==(const Fraction&) const = default;
};

enum class OrderCase {
  CoprimeFull,    // gcd(k, |a|) = 1: order |a|
  ReducedFinite,  // gcd(k, M) = 1 and M != |a|: order s_k = |a|/gcd(k, |a|)
  Infinite,       // everything else
};

std::string order_case_name(OrderCase c);

// Arithmetic prediction of the order of u_k = a^k + (a-1)*b*hat(a) from the
// triple (|a|, k, M) alone.
struct OrderClassification {
  bool finite = false;
  long long order = 0;  // meaningful when finite
  long long s_k = 0;    // |a| / gcd(k, |a|)
  Fraction t_k;         // s_k / (M / gcd(M, k))
  OrderCase tag = OrderCase::Infinite;
};

// Throws std::out_of_range unless 1 <= k <= order_a and 2 <= M <= order_a.
OrderClassification classify_order(int order_a, int k, int M);

// The unit family attached to a witness and an exponent k:
//   w   = 1 + (a-1)*b*hat(a)          (unipotent: (w-1)^2 = 0)
//   u   = a^k + (a-1)*b*hat(a) = w*a^k
//   z   = w^-1 * u * w
// All inverses come from closed forms and are verified by multiplication.
struct UnitFamily {
  const GroupTable* group = nullptr;
  CoeffRing ring = CoeffRing::integers();
  Witness witness;
  int k = 0;
  int a_pow_k = 0;

  RingElement shift;  // (a-1)*b*hat(a); squares to zero
  RingElement w, w_inv;
  RingElement u, u_inv;
  RingElement z, z_inv;
};

// Throws std::out_of_range for k outside [1, |a|]; std::logic_error if any
// closed-form self-check fails.
UnitFamily make_family(const GroupTable* G, CoeffRing ring, const Witness& witness, int k);

// u^i evaluated through the closed form
//   u^i = a^(ik) + (sum_{j<i} a^(jk)) * (a-1)*b*hat(a),   i >= 0.
RingElement power_closed_form(const UnitFamily& fam, long long i);

enum class OracleVerdict { Finite, CertifiedInfinite, ExceedsBound };

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::ExceedsBound;
  long long order = 0;  // meaningful when Finite
};

// Iterates powers of a normalized unit up to max_power. Over the integers a
// torsion normalized unit has order dividing the group exponent, so running
// to the exponent with no return to 1 certifies infinite order; over a prime
// field the probe can only report that the bound was exceeded.
OracleResult probe_unit_order(const RingElement& x, long long max_power);

// probe_unit_order(fam.u, exponent(G)).
OracleResult order_oracle(const UnitFamily& fam);

// The four syllable shifts with u^(+/-1) = 1 + x_(+/-), z^(+/-1) = 1 + y_(+/-):
//   x_plus  = (a-1)*(gs(k)(a)  + b*hat(a))
//   y_plus  = (a-1)*(gs(k)(a)  + a^k*b*hat(a))
//   x_minus = (a-1)*(gs(-k)(a) - a^-k*b*hat(a))
//   y_minus = (a-1)*(gs(-k)(a) - b*hat(a))
struct Syllables {
  RingElement x_plus, x_minus, y_plus, y_minus;
};

// Requires k in witness.valid_k (throws std::invalid_argument); throws
// std::logic_error if the 1 + syllable identities fail to match the units.
Syllables make_syllables(const UnitFamily& fam);

// (x, y) = x^-1 * y^-1 * x * y. Verifies the supplied inverses first and
// throws std::invalid_argument if either check fails.
RingElement commutator(const RingElement& x, const RingElement& y, const RingElement& x_inv,
                       const RingElement& y_inv);

}  // namespace gring

#endif
