#include "gring/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gring {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw std::invalid_argument("permutation degree mismatch");
  }
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) {
    img[static_cast<size_t>(x)] = images_[static_cast<size_t>(rhs(x))];
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) {
    img[static_cast<size_t>(images_[static_cast<size_t>(x)])] = x;
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[static_cast<size_t>(x)] != x) return false;
  }
  return true;
}

long long Permutation::order() const {
  long long result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    long long len = 0;
    int j = start;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = images_[static_cast<size_t>(j)];
      ++len;
    } while (j != start);
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::embedded(int offset, int new_degree) const {
  if (offset < 0 || offset + degree() > new_degree) {
    throw std::invalid_argument("embedding window out of range");
  }
  Permutation out = identity(new_degree);
  for (int x = 0; x < degree(); ++x) {
    out.images_[static_cast<size_t>(offset + x)] = offset + images_[static_cast<size_t>(x)];
  }
  return out;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing input after identity");
    return identity(degree);
  }
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("expected point or ')' in cycle");
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) throw std::invalid_argument("cycle point out of range");
      cycle.push_back(v - 1);
    }
    for (size_t p = 0; p < cycle.size(); ++p) {
      for (size_t q = p + 1; q < cycle.size(); ++q) {
        if (cycle[p] == cycle[q]) throw std::invalid_argument("repeated point in cycle");
      }
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  // Juxtaposition composes like operator*: the rightmost cycle acts first.
  Permutation result = identity(degree);
  for (const auto& c : cycles) {
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (size_t p = 0; p < c.size(); ++p) {
      img[static_cast<size_t>(c[p])] = c[(p + 1) % c.size()];
    }
    result = result * Permutation(std::move(img));
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool wrote = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || images_[static_cast<size_t>(start)] == start) {
      continue;
    }
    out << '(';
    int j = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      seen[static_cast<size_t>(j)] = true;
      j = images_[static_cast<size_t>(j)];
    } while (j != start);
    out << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return out.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gring
