#include "gring/group.hpp"

#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace gring {

GroupTable GroupTable::closure(const std::vector<Permutation>& generators,
                               const BuildLimits& limits) {
  int degree = generators.empty() ? 1 : generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  if (degree > limits.max_degree) throw std::invalid_argument("degree exceeds maximum");
  if (limits.max_order < 1 || limits.max_order > 4096) {
    throw std::invalid_argument("max_order must be in [1, 4096]");
  }

  std::vector<Permutation> elems;
  std::unordered_map<Permutation, int, PermutationHash> index;
  auto push = [&](const Permutation& p) -> bool {
    if (index.contains(p)) return false;
    if (static_cast<int>(elems.size()) >= limits.max_order) {
      throw std::runtime_error("group closure exceeds maximum order");
    }
    index.emplace(p, static_cast<int>(elems.size()));
    elems.push_back(p);
    return true;
  };

  push(Permutation::identity(degree));
  size_t frontier = 0;
  while (frontier < elems.size()) {
    Permutation cur = elems[frontier++];
    for (const auto& g : generators) {
      push(cur * g);
    }
  }

  GroupTable t;
  t.degree_ = degree;
  t.order_ = static_cast<int>(elems.size());
  t.perms_ = std::move(elems);
  t.generators_ = generators;
  t.identity_ = 0;

  const size_t n = static_cast<size_t>(t.order_);
  t.mul_.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      t.mul_[i * n + j] = static_cast<uint16_t>(index.at(t.perms_[i] * t.perms_[j]));
    }
  }
  t.inv_.resize(n);
  t.element_order_.resize(n);
  t.labels_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    t.inv_[i] = static_cast<uint16_t>(index.at(t.perms_[i].inverse()));
    t.labels_[i] = t.perms_[i].cycle_string();
    int d = 1;
    int j = static_cast<int>(i);
    while (j != t.identity_) {
      j = t.mul(j, static_cast<int>(i));
      ++d;
    }
    t.element_order_[i] = d;
    t.exponent_ = std::lcm(t.exponent_, static_cast<long long>(d));
  }
  return t;
}

int GroupTable::power(int g, long long e) const {
  int base = g;
  if (e < 0) {
    base = inv(g);
    e = -e;
  }
  int acc = identity_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int GroupTable::element_index(const Permutation& p) const {
  for (int i = 0; i < order_; ++i) {
    if (perms_[static_cast<size_t>(i)] == p) return i;
  }
  return -1;
}

int GroupTable::element_index(const std::string& cycles) const {
  return element_index(Permutation::parse_cycles(cycles, degree_));
}

GroupTable build_group(const std::vector<Permutation>& generators, const BuildLimits& limits) {
  return GroupTable::closure(generators, limits);
}

namespace {

BuildLimits widened(BuildLimits limits, int degree) {
  limits.max_degree = std::max(limits.max_degree, degree);
  return limits;
}

}  // namespace

GroupTable cyclic_group(int n, const BuildLimits& limits) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  if (n == 1) return build_group({}, limits);
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
  return build_group({Permutation(std::move(img))}, widened(limits, n));
}

GroupTable dihedral_group(int n, const BuildLimits& limits) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
  if (n == 1) return build_group({Permutation::parse_cycles("(1 2)", 2)}, limits);
  if (n == 2) {
    return build_group(
        {Permutation::parse_cycles("(1 2)", 4), Permutation::parse_cycles("(3 4)", 4)}, limits);
  }
  std::vector<int> rot(static_cast<size_t>(n));
  std::vector<int> ref(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<size_t>(i)] = (i + 1) % n;
    ref[static_cast<size_t>(i)] = (n - i) % n;
  }
  return build_group({Permutation(std::move(rot)), Permutation(std::move(ref))}, widened(limits, n));
}

GroupTable symmetric_group(int n, const BuildLimits& limits) {
  if (n < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
  if (n == 1) return build_group({}, limits);
  if (n == 2) return build_group({Permutation::parse_cycles("(1 2)", 2)}, limits);
  std::vector<int> cyc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % n;
  return build_group({Permutation(std::move(cyc)), Permutation::parse_cycles("(1 2)", n)},
                     widened(limits, n));
}

GroupTable alternating_group(int n, const BuildLimits& limits) {
  if (n < 1) throw std::invalid_argument("alternating group degree must be >= 1");
  if (n <= 2) return build_group({}, limits);
  if (n == 3) return build_group({Permutation::parse_cycles("(1 2 3)", 3)}, limits);
  Permutation three = Permutation::parse_cycles("(1 2 3)", n);
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;  // full n-cycle, even
  } else {
    for (int i = 1; i < n; ++i) img[static_cast<size_t>(i)] = 1 + (i % (n - 1));  // (2 3 ... n)
  }
  return build_group({three, Permutation(std::move(img))}, widened(limits, n));
}

GroupTable quaternion_group() {
  // Regular action of Q8 = {1,-1,i,-i,j,-j,k,-k} on itself, generated by
  // left multiplication by i and j.
  return build_group({Permutation::parse_cycles("(1 3 2 4)(5 7 6 8)", 8),
                      Permutation::parse_cycles("(1 5 2 6)(3 8 4 7)", 8)});
}

GroupTable direct_product(const GroupTable& lhs, const GroupTable& rhs, const BuildLimits& limits) {
  int degree = lhs.degree() + rhs.degree();
  std::vector<Permutation> gens;
  auto add_side = [&](const GroupTable& side, int offset) {
    const auto& source = side.generators().empty()
                             ? std::vector<Permutation>{Permutation::identity(side.degree())}
                             : side.generators();
    for (const auto& g : source) gens.push_back(g.embedded(offset, degree));
  };
  add_side(lhs, 0);
  add_side(rhs, lhs.degree());
  BuildLimits l = limits;
  l.max_degree = std::max(l.max_degree, degree);
  return build_group(gens, l);
}

Subset Subset::full(int universe) {
  Subset s(universe);
  for (int i = 0; i < universe; ++i) s.add(i);
  return s;
}

int Subset::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count()));
  for (int i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Subset cyclic_subgroup(const GroupTable& G, int g) {
  Subset s(G.order());
  int j = G.identity();
  s.add(j);
  j = G.mul(j, g);
  while (j != G.identity()) {
    s.add(j);
    j = G.mul(j, g);
  }
  return s;
}

bool is_subgroup(const GroupTable& G, const Subset& H) {
  if (H.universe() != G.order() || !H.contains(G.identity())) return false;
  const auto elems = H.elements();
  for (int h : elems) {
    if (!H.contains(G.inv(h))) return false;
    for (int g : elems) {
      if (!H.contains(G.mul(h, g))) return false;
    }
  }
  return true;
}

Subset conjugate_subset(const GroupTable& G, const Subset& H, int g) {
  Subset out(G.order());
  int gi = G.inv(g);
  for (int h : H.elements()) out.add(G.mul(G.mul(g, h), gi));
  return out;
}

Subset normalizer(const GroupTable& G, const Subset& H) {
  if (!is_subgroup(G, H)) throw std::invalid_argument("normalizer: H is not a subgroup");
  Subset out(G.order());
  const auto elems = H.elements();
  for (int g = 0; g < G.order(); ++g) {
    int gi = G.inv(g);
    bool ok = true;
    for (int h : elems) {
      if (!H.contains(G.mul(G.mul(g, h), gi))) {
        ok = false;
        break;
      }
    }
    if (ok) out.add(g);
  }
  return out;
}

bool is_normal_subgroup(const GroupTable& G, const Subset& H) {
  return normalizer(G, H).count() == G.order();
}

void validate_table(const GroupTable& G, const TableCheckOptions& opts) {
  const int n = G.order();
  for (int g = 0; g < n; ++g) {
    if (G.mul(G.identity(), g) != g || G.mul(g, G.identity()) != g) {
      throw std::logic_error("identity law violated");
    }
    if (G.mul(g, G.inv(g)) != G.identity() || G.mul(G.inv(g), g) != G.identity()) {
      throw std::logic_error("inverse law violated");
    }
  }
  auto check_assoc = [&](int a, int b, int c) {
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
      throw std::logic_error("associativity violated");
    }
  };
  if (n <= opts.exhaustive_assoc_bound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_assoc(a, b, c);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int s = 0; s < opts.assoc_samples; ++s) check_assoc(dist(rng), dist(rng), dist(rng));
  }
  long long expected_exponent = 1;
  for (int g = 0; g < n; ++g) {
    expected_exponent = std::lcm(expected_exponent, static_cast<long long>(G.element_order(g)));
  }
  if (expected_exponent != G.exponent()) throw std::logic_error("exponent mismatch");
}

}  // namespace gring
