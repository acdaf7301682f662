#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gring/group.hpp"

using namespace gring;

namespace {

// Independent closure oracle: breadth-first over plain image tables, with its
// own composition routine (left-to-right over the vectors, matching
// Permutation::operator*).
int closure_size_oracle(const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  int degree = gens.empty() ? 1 : gens.front().degree();
  std::vector<int> id(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> queue{id};
  seen.insert(id);
  while (!queue.empty()) {
    std::vector<int> cur = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<int> prod(cur.size());
      for (size_t x = 0; x < cur.size(); ++x) {
        prod[x] = cur[static_cast<size_t>(g(static_cast<int>(x)))];
      }
      if (seen.insert(prod).second) queue.push_back(prod);
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("closure of S3 generators") {
  GroupTable g = build_group(
      {Permutation::parse_cycles("(1 2 3)", 3), Permutation::parse_cycles("(1 2)", 3)});
  CHECK(g.order() == 6);
  CHECK(g.exponent() == 6);
  validate_table(g);
}

TEST_CASE("empty generator list gives the trivial group") {
  GroupTable g = build_group({});
  CHECK(g.order() == 1);
  CHECK(g.identity() == 0);
  CHECK(g.exponent() == 1);
}

TEST_CASE("closure of a 4-cycle and a diagonal reflection is dihedral of order 8") {
  std::vector<Permutation> gens{Permutation::parse_cycles("(1 2 3 4)", 4),
                                Permutation::parse_cycles("(1 3)", 4)};
  GroupTable g = build_group(gens);
  CHECK(g.order() == 8);
  CHECK(g.order() == closure_size_oracle(gens));
  validate_table(g);
}

TEST_CASE("degree mismatch and order cap are rejected") {
  CHECK_THROWS_AS(build_group({Permutation::parse_cycles("(1 2)", 2),
                               Permutation::parse_cycles("(1 2 3)", 3)}),
                  std::invalid_argument);
  BuildLimits tight;
  tight.max_order = 5;
  CHECK_THROWS_AS(build_group({Permutation::parse_cycles("(1 2 3)", 3),
                               Permutation::parse_cycles("(1 2)", 3)},
                              tight),
                  std::runtime_error);
}

TEST_CASE("element orders") {
  GroupTable s3 = symmetric_group(3);
  CHECK(s3.element_order(s3.identity()) == 1);
  CHECK(s3.element_order(s3.element_index("(1 2 3)")) == 3);

  GroupTable p = direct_product(symmetric_group(3), symmetric_group(3));
  int mixed = p.element_index("(1 2 3)(4 5)");
  REQUIRE(mixed >= 0);
  // lcm of the cycle lengths, computed on the permutation itself
  CHECK(p.permutation(mixed).order() == 6);
  CHECK(p.element_order(mixed) == 6);
}

TEST_CASE("power handles negative exponents") {
  GroupTable c6 = cyclic_group(6);
  int a = c6.element_index("(1 2 3 4 5 6)");
  CHECK(c6.power(a, 0) == c6.identity());
  CHECK(c6.power(a, 6) == c6.identity());
  CHECK(c6.power(a, -1) == c6.inv(a));
  CHECK(c6.power(a, 7) == a);
  CHECK(c6.power(a, -7) == c6.inv(a));
}

TEST_CASE("normalizer examples in S3") {
  GroupTable s3 = symmetric_group(3);

  Subset whole = Subset::full(s3.order());
  CHECK(normalizer(s3, whole) == whole);

  int t = s3.element_index("(1 2)");
  Subset h = cyclic_subgroup(s3, t);
  Subset n = normalizer(s3, h);
  CHECK(n.count() == 2);
  CHECK(n.contains(s3.identity()));
  CHECK(n.contains(t));

  int r = s3.element_index("(1 2 3)");
  Subset a3 = cyclic_subgroup(s3, r);
  CHECK(normalizer(s3, a3).count() == 6);  // normal of index 2
  CHECK(is_normal_subgroup(s3, a3));
}

TEST_CASE("normalizer agrees with an exhaustive conjugation oracle") {
  GroupTable g = symmetric_group(4);
  for (int a : {g.element_index("(1 2)"), g.element_index("(1 2 3)"),
                g.element_index("(1 2 3 4)"), g.element_index("(1 2)(3 4)")}) {
    REQUIRE(a >= 0);
    Subset h = cyclic_subgroup(g, a);
    Subset n = normalizer(g, h);
    for (int x = 0; x < g.order(); ++x) {
      bool keeps = conjugate_subset(g, h, x) == h;
      CHECK(n.contains(x) == keeps);
    }
    CHECK(is_subgroup(g, n));
    for (int h_elem : h.elements()) CHECK(n.contains(h_elem));
  }
}

TEST_CASE("normalizer rejects non-subgroups") {
  GroupTable s3 = symmetric_group(3);
  Subset bad(s3.order());
  bad.add(s3.element_index("(1 2)"));  // no identity
  CHECK_THROWS_AS(normalizer(s3, bad), std::invalid_argument);
}

TEST_CASE("conjugation preserves element order") {
  GroupTable g = symmetric_group(4);
  for (int x = 0; x < g.order(); x += 3) {
    for (int h = 0; h < g.order(); h += 5) {
      int conj = g.mul(g.mul(x, h), g.inv(x));
      CHECK(g.element_order(conj) == g.element_order(h));
    }
  }
}

TEST_CASE("named families have the expected size and structure") {
  CHECK(cyclic_group(12).order() == 12);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(dihedral_group(2).order() == 4);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(4).exponent() == 12);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);

  GroupTable q8 = quaternion_group();
  CHECK(q8.order() == 8);
  CHECK(q8.exponent() == 4);
  validate_table(q8);
  // Q8 has a unique element of order 2 and every cyclic subgroup is normal.
  int order2 = 0;
  for (int g = 0; g < q8.order(); ++g) {
    if (q8.element_order(g) == 2) ++order2;
    CHECK(is_normal_subgroup(q8, cyclic_subgroup(q8, g)));
  }
  CHECK(order2 == 1);

  GroupTable p = direct_product(symmetric_group(3), symmetric_group(3));
  CHECK(p.order() == 36);
  CHECK(p.degree() == 6);
  CHECK(p.exponent() == 6);
  validate_table(p);
}

TEST_CASE("element labels are canonical cycle strings") {
  GroupTable s3 = symmetric_group(3);
  CHECK(s3.label(s3.identity()) == "()");
  int t = s3.element_index("(2 1)");
  REQUIRE(t >= 0);
  CHECK(s3.label(t) == "(1 2)");
  std::set<std::string> labels;
  for (int g = 0; g < s3.order(); ++g) labels.insert(s3.label(g));
  CHECK(labels.size() == 6);
}

TEST_CASE("validate_table samples associativity above the exhaustive bound") {
  GroupTable g = symmetric_group(4);
  TableCheckOptions opts;
  opts.exhaustive_assoc_bound = 8;  // force the sampling path
  validate_table(g, opts);
}
