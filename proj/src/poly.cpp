#include "gring/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gring {

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(int exponent, Int coeff) {
  if (exponent < 0) throw std::out_of_range("negative exponent");
  if (coeff == 0) return Poly();
  std::vector<Int> c(static_cast<size_t>(exponent) + 1, Int(0));
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

Int Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

std::vector<Int> Poly::padded(int n) const {
  std::vector<Int> out(static_cast<size_t>(n), Int(0));
  for (size_t i = 0; i < coeffs_.size() && i < static_cast<size_t>(n); ++i) out[i] = coeffs_[i];
  return out;
}

Poly Poly::operator+(const Poly& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return Poly();
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::out_of_range("negative exponent");
  Poly acc = Poly::one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << coeffs_[i];
    if (i > 0) out << "*x^" << i;
    first = false;
  }
  return out.str();
}

Poly geometric_sum(int n, int k) {
  if (n < 1 || k == 0 || k > n || k < -n) throw std::out_of_range("geometric_sum: step out of range");
  int len = k > 0 ? k : n + k;
  return Poly(std::vector<Int>(static_cast<size_t>(len), Int(1)));
}

Poly hat_poly(int n) { return geometric_sum(n, n); }

Poly power_transfer_poly(int n, int m, int step) {
  if (m < 1) throw std::out_of_range("power_transfer_poly: m must be >= 1");
  Poly gs = geometric_sum(n, step);
  Poly x_minus_1(std::vector<Int>{Int(-1), Int(1)});
  Poly factor = gs * x_minus_1;

  Poly out;
  Poly term = Poly::one();  // gs^(i-1) * (x-1)^(i-1)
  Int binom = 1;            // C(m, i)
  for (int i = 1; i <= m; ++i) {
    binom = binom * (m - i + 1) / i;  // exact: consecutive binomials
    out = out + term * Poly(std::vector<Int>{binom});
    if (i < m) term = term * factor;
  }
  return out;
}

Poly reduce_cyclic(const Poly& p, int n) {
  if (n < 1) throw std::out_of_range("reduce_cyclic: modulus must be >= 1");
  std::vector<Int> out(static_cast<size_t>(n), Int(0));
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); ++i) out[i % static_cast<size_t>(n)] += c[i];
  return Poly(std::move(out));
}

RingElement to_group_ring(const Poly& p, const GroupTable* G, CoeffRing ring, int a) {
  int n = G->element_order(a);
  Poly r = reduce_cyclic(p, n);
  RingElement out(G, ring);
  for (int i = 0; i <= r.degree(); ++i) {
    Int c = r.coeff(i);
    if (c == 0) continue;
    int g = G->power(a, i);
    out.set_coeff(g, out.coeff(g) + c);
  }
  return out;
}

bool nonvanishing_check(int n, int k, int j, int l, int s, SignPattern pattern) {
  if (n < 2 || k < 1 || k >= n) throw std::out_of_range("nonvanishing_check: k out of range");
  if (j < 0 || l < 0 || s < 0) throw std::out_of_range("nonvanishing_check: negative exponent");
  int first = pattern == SignPattern::MinusPlus ? -k : k;
  int second = pattern == SignPattern::MinusPlus ? k : -k;
  Poly x_minus_1(std::vector<Int>{Int(-1), Int(1)});
  Poly prod = geometric_sum(n, first).pow(j) * geometric_sum(n, second).pow(l) * x_minus_1.pow(s);
  std::vector<Int> v = reduce_cyclic(prod, n).padded(n);
  // Equal to beta*(1 + x + ... + x^(n-1)) for some integer beta (including 0)
  // exactly when all canonical coefficients coincide.
  for (const Int& c : v) {
    if (c != v.front()) return true;
  }
  return false;
}

SweepSummary power_identity_sweep(int n_max, const PowerPolyProvider& provider) {
  PowerPolyProvider f = provider ? provider : power_transfer_poly;
  Poly x_minus_1(std::vector<Int>{Int(-1), Int(1)});
  SweepSummary out;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = 1; m <= n; ++m) {
        for (int step : {k, -k}) {
          ++out.checked;
          int stride = step > 0 ? step : n + step;
          Poly lhs = Poly::one() + f(n, m, step) * geometric_sum(n, step) * x_minus_1;
          Poly rhs = Poly::monomial(stride * m);
          if (!(reduce_cyclic(lhs, n) == reduce_cyclic(rhs, n))) {
            out.failures.push_back({n, k, m, 0, 0, 0,
                                    "power identity failed for step " + std::to_string(step)});
          }
        }
      }
    }
  }
  return out;
}

SweepSummary nonvanishing_sweep(int n_max, int j_max, int l_max, int s_max) {
  SweepSummary out;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int j = 0; j <= j_max; ++j) {
        for (int l = 0; l <= l_max; ++l) {
          for (int s = 0; s <= s_max; ++s) {
            for (SignPattern pat : {SignPattern::MinusPlus, SignPattern::PlusMinus}) {
              ++out.checked;
              if (!nonvanishing_check(n, k, j, l, s, pat)) {
                out.failures.push_back({n, k, 0, j, l, s, "reduced product vanished or matched a constant vector"});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace gring
