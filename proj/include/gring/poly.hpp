#ifndef GRING_POLY_HPP
#define GRING_POLY_HPP

#include <functional>
#include <string>
#include <vector>

#include "gring/coeff.hpp"
#include "gring/ring_element.hpp"

namespace gring {

// Dense integer polynomial, lowest degree first. The zero polynomial has an
// empty coefficient vector; otherwise the leading coefficient is nonzero.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);

  static Poly one() { return monomial(0); }
  static Poly monomial(int exponent, Int coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  // First n coefficients, zero padded.
  std::vector<Int> padded(int n) const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly pow(int e) const;

  bool operator==(const Poly&) const = default;

  std::string str() const;

private:
  void trim();
  std::vector<Int> coeffs_;
};

// Partial geometric sum used throughout the unit constructions:
//   k in [1, n]  ->  1 + x + ... + x^(k-1)
//   k in [-n,-1] ->  1 + x + ... + x^(n-|k|-1)
// Multiplying by (x - 1) telescopes it to x^k - 1 (resp. x^(n-|k|) - 1).
Poly geometric_sum(int n, int k);

// 1 + x + ... + x^(n-1).
Poly hat_poly(int n);

// The degree-(|step|*(m-1)) polynomial P with (x^s)^m = 1 + P * (x^s - 1)
// exactly in Z[x], where s = step for step > 0 and s = n - |step| otherwise.
// Computed as the binomial sum
//   sum_{i=1..m} C(m, i) * geometric_sum(n, step)^(i-1) * (x-1)^(i-1).
Poly power_transfer_poly(int n, int m, int step);

// Canonical representative of degree < n, folding x^i onto x^(i mod n).
Poly reduce_cyclic(const Poly& p, int n);

// Substitutes the group element a for x, after reduction mod x^|a| - 1.
RingElement to_group_ring(const Poly& p, const GroupTable* G, CoeffRing ring, int a);

enum class SignPattern {
  MinusPlus,  // geometric_sum(n,-k)^j * geometric_sum(n,k)^l
  PlusMinus,  // geometric_sum(n,k)^j * geometric_sum(n,-k)^l
};

// True iff the reduced form of gs(∓k)^j * gs(±k)^l * (x-1)^s mod x^n - 1 is
// nonzero and is not a constant multiple of 1 + x + ... + x^(n-1).
bool nonvanishing_check(int n, int k, int j, int l, int s, SignPattern pattern);

struct SweepFailure {
  int n = 0, k = 0, m = 0, j = 0, l = 0, s = 0;
  std::string what;
};

struct SweepSummary {
  long long checked = 0;
  std::vector<SweepFailure> failures;
  bool ok() const { return failures.empty(); }
};

using PowerPolyProvider = std::function<Poly(int n, int m, int step)>;

// Checks 1 + P*gs(step)*(x-1) == x^(s*m) mod x^n - 1 for every n <= n_max,
// 1 <= k < n, 1 <= m <= n and both signs of the step. The provider defaults
// to power_transfer_poly; tests inject faulty providers through it.
SweepSummary power_identity_sweep(int n_max, const PowerPolyProvider& provider = {});

// Runs nonvanishing_check over n in [2, n_max], 1 <= k < n, j/l/s in the
// given ranges, both sign patterns.
SweepSummary nonvanishing_sweep(int n_max, int j_max, int l_max, int s_max);

}  // namespace gring

#endif
