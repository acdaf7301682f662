#include "gring/units.hpp"

#include <numeric>
#include <stdexcept>

namespace gring {

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string order_case_name(OrderCase c) {
  switch (c) {
    case OrderCase::CoprimeFull:
      return "coprime_full";
    case OrderCase::ReducedFinite:
      return "reduced_finite";
    case OrderCase::Infinite:
      return "infinite";
  }
  return "?";
}

OrderClassification classify_order(int order_a, int k, int M) {
  if (k < 1 || k > order_a) throw std::out_of_range("classify_order: k out of range");
  if (M < 2 || M > order_a) throw std::out_of_range("classify_order: M out of range");
  OrderClassification out;
  long long g = std::gcd(k, order_a);
  out.s_k = order_a / g;
  out.t_k = Fraction(static_cast<long long>(order_a) * std::gcd(k, M),
                     static_cast<long long>(M) * g);
  if (g == 1) {
    out.finite = true;
    out.order = order_a;
    out.tag = OrderCase::CoprimeFull;
  } else if (std::gcd(k, M) == 1 && M != order_a) {
    out.finite = true;
    out.order = out.s_k;
    out.tag = OrderCase::ReducedFinite;
  } else {
    out.finite = false;
    out.tag = OrderCase::Infinite;
  }
  return out;
}

UnitFamily make_family(const GroupTable* G, CoeffRing ring, const Witness& witness, int k) {
  if (k < 1 || k > witness.order_a) throw std::out_of_range("make_family: k out of range");

  UnitFamily fam{G, ring, witness, k, G->power(witness.a, k),
                 RingElement(G, ring), RingElement(G, ring), RingElement(G, ring),
                 RingElement(G, ring), RingElement(G, ring), RingElement(G, ring),
                 RingElement(G, ring)};

  RingElement one = RingElement::one(G, ring);
  RingElement a = RingElement::basis(G, ring, witness.a);
  RingElement b = RingElement::basis(G, ring, witness.b);
  RingElement ahat = hat_element(G, ring, witness.a);

  fam.shift = (a - one) * b * ahat;
  fam.w = one + fam.shift;
  fam.w_inv = one - fam.shift;
  fam.u = RingElement::basis(G, ring, fam.a_pow_k) + fam.shift;
  fam.u_inv = RingElement::basis(G, ring, G->power(witness.a, -k)) * fam.w_inv;
  fam.z = fam.w_inv * fam.u * fam.w;
  fam.z_inv = fam.w_inv * fam.u_inv * fam.w;

  if (fam.w.is_one()) throw std::logic_error("make_family: w degenerated to 1");
  if (!(fam.w * fam.w_inv).is_one()) throw std::logic_error("make_family: w inverse check failed");
  if (!(fam.u * fam.u_inv).is_one()) throw std::logic_error("make_family: u inverse check failed");
  if (!(fam.z * fam.z_inv).is_one()) throw std::logic_error("make_family: z inverse check failed");
  if (!(fam.w * RingElement::basis(G, ring, fam.a_pow_k) == fam.u)) {
    throw std::logic_error("make_family: u != w*a^k");
  }
  return fam;
}

RingElement power_closed_form(const UnitFamily& fam, long long i) {
  if (i < 0) throw std::out_of_range("power_closed_form: negative power");
  const GroupTable* G = fam.group;
  RingElement lead = RingElement::basis(G, fam.ring, G->power(fam.a_pow_k, i));
  RingElement partial(G, fam.ring);
  for (long long j = 0; j < i; ++j) {
    int g = G->power(fam.a_pow_k, j);
    partial.set_coeff(g, partial.coeff(g) + 1);
  }
  return lead + partial * fam.shift;
}

OracleResult probe_unit_order(const RingElement& x, long long max_power) {
  RingElement p = x;
  for (long long d = 1; d <= max_power; ++d) {
    if (p.is_one()) return {OracleVerdict::Finite, d};
    p = p * x;
  }
  if (x.ring().is_integers()) return {OracleVerdict::CertifiedInfinite, 0};
  return {OracleVerdict::ExceedsBound, 0};
}

OracleResult order_oracle(const UnitFamily& fam) {
  return probe_unit_order(fam.u, fam.group->exponent());
}

Syllables make_syllables(const UnitFamily& fam) {
  if (!fam.witness.k_valid(fam.k)) {
    throw std::invalid_argument("make_syllables: b normalizes <a^k>");
  }
  const GroupTable* G = fam.group;
  const CoeffRing& R = fam.ring;
  int n = fam.witness.order_a;
  RingElement one = RingElement::one(G, R);
  RingElement a = RingElement::basis(G, R, fam.witness.a);
  RingElement b_hat = RingElement::basis(G, R, fam.witness.b) * hat_element(G, R, fam.witness.a);
  RingElement gs_pos = to_group_ring(geometric_sum(n, fam.k), G, R, fam.witness.a);
  RingElement gs_neg = to_group_ring(geometric_sum(n, -fam.k), G, R, fam.witness.a);
  RingElement a_k = RingElement::basis(G, R, fam.a_pow_k);
  RingElement a_mk = RingElement::basis(G, R, G->power(fam.witness.a, -fam.k));

  Syllables s{(a - one) * (gs_pos + b_hat), (a - one) * (gs_neg - a_mk * b_hat),
              (a - one) * (gs_pos + a_k * b_hat), (a - one) * (gs_neg - b_hat)};

  if (!(one + s.x_plus == fam.u) || !(one + s.x_minus == fam.u_inv) ||
      !(one + s.y_plus == fam.z) || !(one + s.y_minus == fam.z_inv)) {
    throw std::logic_error("make_syllables: unit decomposition check failed");
  }
  return s;
}

RingElement commutator(const RingElement& x, const RingElement& y, const RingElement& x_inv,
                       const RingElement& y_inv) {
  if (!(x * x_inv).is_one() || !(y * y_inv).is_one()) {
    throw std::invalid_argument("commutator: supplied inverses fail verification");
  }
  return x_inv * y_inv * x * y;
}

}  // namespace gring
