#include "gring/ring_element.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace gring {

RingElement RingElement::basis(const GroupTable* g, CoeffRing r, int element, Int coeff) {
  RingElement out(g, r);
  out.set_coeff(element, std::move(coeff));
  return out;
}

Int RingElement::coeff(int element) const {
  auto it = coeffs_.find(element);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void RingElement::set_coeff(int element, Int value) {
  if (element < 0 || element >= group_->order()) {
    throw std::out_of_range("element index out of range");
  }
  value = ring_.normalize(std::move(value));
  if (value == 0) {
    coeffs_.erase(element);
  } else {
    coeffs_[element] = std::move(value);
  }
}

bool RingElement::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == group_->identity() &&
         coeffs_.begin()->second == 1;
}

void RingElement::check_compatible(const RingElement& rhs) const {
  if (group_ != rhs.group_) throw std::invalid_argument("group mismatch");
  if (!(ring_ == rhs.ring_)) throw std::invalid_argument("coefficient ring mismatch");
}

RingElement RingElement::operator+(const RingElement& rhs) const {
  check_compatible(rhs);
  RingElement out = *this;
  for (const auto& [g, c] : rhs.coeffs_) {
    out.set_coeff(g, out.coeff(g) + c);
  }
  return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const {
  check_compatible(rhs);
  RingElement out = *this;
  for (const auto& [g, c] : rhs.coeffs_) {
    out.set_coeff(g, out.coeff(g) - c);
  }
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out(group_, ring_);
  for (const auto& [g, c] : coeffs_) out.set_coeff(g, -c);
  return out;
}

RingElement RingElement::operator*(const RingElement& rhs) const {
  check_compatible(rhs);
  RingElement out(group_, ring_);
  for (const auto& [g, cg] : coeffs_) {
    for (const auto& [h, ch] : rhs.coeffs_) {
      int k = group_->mul(g, h);
      out.set_coeff(k, out.coeff(k) + cg * ch);
    }
  }
  return out;
}

RingElement RingElement::scaled(const Int& c) const {
  RingElement out(group_, ring_);
  for (const auto& [g, v] : coeffs_) out.set_coeff(g, v * c);
  return out;
}

bool RingElement::operator==(const RingElement& rhs) const {
  return group_ == rhs.group_ && ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_;
}

Int RingElement::augmentation() const {
  Int s = 0;
  for (const auto& [g, c] : coeffs_) s += c;
  return ring_.normalize(std::move(s));
}

Int RingElement::trace() const { return coeff(group_->identity()); }

std::string RingElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : coeffs_) {
    if (!first) out << " + ";
    out << c << "*" << group_->label(g);
    first = false;
  }
  return out.str();
}

RingElement hat_element(const GroupTable* G, CoeffRing ring, int a) {
  RingElement out(G, ring);
  int j = G->identity();
  out.set_coeff(j, out.coeff(j) + 1);
  j = G->mul(j, a);
  while (j != G->identity()) {
    out.set_coeff(j, out.coeff(j) + 1);
    j = G->mul(j, a);
  }
  return out;
}

AnnihilatorCheck check_annihilator(const GroupTable& G, int a, const RingElement& x) {
  if (x.group() != &G) throw std::invalid_argument("check_annihilator: group mismatch");
  AnnihilatorCheck out;

  RingElement one = RingElement::one(&G, x.ring());
  out.annihilates = true;
  Subset A = cyclic_subgroup(G, a);
  for (int h : A.elements()) {
    if (h == G.identity()) continue;
    if (!(x * (RingElement::basis(&G, x.ring(), h) - one)).is_zero()) {
      out.annihilates = false;
      break;
    }
  }

  // x lies in KG*hat(a) iff its coefficients agree on every left coset g<a>.
  out.hat_multiple = true;
  std::vector<bool> visited(static_cast<size_t>(G.order()), false);
  const auto powers = A.elements();
  for (const auto& [g, c] : x.coeffs()) {
    if (visited[static_cast<size_t>(g)]) continue;
    for (int h : powers) {
      int member = G.mul(g, h);
      visited[static_cast<size_t>(member)] = true;
      if (x.coeff(member) != c) {
        out.hat_multiple = false;
        break;
      }
    }
    if (!out.hat_multiple) break;
  }
  return out;
}

nlohmann::json ring_element_to_json(const RingElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [g, c] : x.coeffs()) {
    out.push_back({{"element", x.group()->label(g)}, {"coeff", c.str()}});
  }
  return out;
}

RingElement ring_element_from_json(const GroupTable* G, CoeffRing ring, const nlohmann::json& j) {
  RingElement out(G, ring);
  for (const auto& entry : j) {
    int g = G->element_index(entry.at("element").get<std::string>());
    if (g < 0) throw std::invalid_argument("unknown element label");
    Int c(entry.at("coeff").get<std::string>());
    out.set_coeff(g, out.coeff(g) + c);
  }
  return out;
}

}  // namespace gring
