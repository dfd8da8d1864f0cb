#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quandles/classify.hpp"
#include "quandles/extension.hpp"
#include "quandles/quandle.hpp"

using namespace quandles;

namespace {

WeightedDigraph two_vertex_z3() {
  WeightedDigraph w(2, AbelianGroup::cyclic(3));
  w.set_rank(0, 1, 1);
  w.set_rank(1, 0, 1);
  return w;
}

// Order-6 example whose vertices differ by out-degree (2, 1, 0).
WeightedDigraph profile_210() {
  WeightedDigraph w(3, AbelianGroup::cyclic(2));
  w.set_rank(0, 1, 1);
  w.set_rank(1, 0, 1);
  w.set_rank(0, 2, 1);
  return w;
}

std::vector<std::vector<int>> table_of(int n, auto f) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = f(x, y);
  return t;
}

Quandle subquandle(const Quandle& q, const std::vector<int>& points) {
  std::vector<int> index(static_cast<std::size_t>(q.order()), -1);
  for (std::size_t i = 0; i < points.size(); ++i) index[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  const int k = static_cast<int>(points.size());
  auto t = table_of(k, [&](int x, int y) {
    return index[static_cast<std::size_t>(q(points[static_cast<std::size_t>(x)], points[static_cast<std::size_t>(y)]))];
  });
  auto v = check_axioms(t);
  REQUIRE(std::holds_alternative<Quandle>(v));
  return std::get<Quandle>(v);
}

// Quandles from random weighted digraphs with order in [lo, hi].
std::vector<Quandle> constructed(std::mt19937& rng, int count, int lo, int hi) {
  std::vector<Quandle> out;
  std::uniform_int_distribution<int> pick(0, 8);
  const std::vector<AbelianGroup> groups{AbelianGroup(), AbelianGroup::cyclic(2), AbelianGroup::cyclic(3),
                                         AbelianGroup::cyclic(4), AbelianGroup({2, 2}), AbelianGroup::cyclic(5),
                                         AbelianGroup::cyclic(6)};
  while (static_cast<int>(out.size()) < count) {
    const auto& g = groups[static_cast<std::size_t>(pick(rng)) % groups.size()];
    const int m = 1 + pick(rng) % 5;
    const int n = m * static_cast<int>(g.order());
    if (n < lo || n > hi) continue;
    out.push_back(build(oracle::random_digraph(rng, m, g, false)));
  }
  return out;
}

}  // namespace

TEST_CASE("axiom checks") {
  CHECK(std::holds_alternative<Quandle>(check_axioms(table_of(4, [](int, int y) { return y; }))));
  CHECK(std::holds_alternative<Quandle>(check_axioms(table_of(3, [](int x, int y) { return ((2 * x - y) % 3 + 3) % 3; }))));

  auto q1 = check_axioms({{1, 0}, {0, 1}});
  REQUIRE(std::holds_alternative<AxiomViolation>(q1));
  CHECK(std::get<AxiomViolation>(q1).axiom == 1);
  CHECK(std::get<AxiomViolation>(q1).witness == std::vector<int>{0});

  auto q2 = check_axioms({{0, 0, 0}, {0, 1, 2}, {0, 1, 2}});
  REQUIRE(std::holds_alternative<AxiomViolation>(q2));
  CHECK(std::get<AxiomViolation>(q2).axiom == 2);

  // rows are permutations fixing the diagonal, but not self-distributive
  auto q3 = check_axioms({{0, 2, 1}, {2, 1, 0}, {0, 1, 2}});
  REQUIRE(std::holds_alternative<AxiomViolation>(q3));
  CHECK(std::get<AxiomViolation>(q3).axiom == 3);
  CHECK(std::get<AxiomViolation>(q3).witness.size() == 3);

  CHECK_THROWS_AS(check_axioms({{0, 1}, {0}}), ContractViolation);
  CHECK_THROWS_AS(check_axioms({{0, 5}, {0, 1}}), ContractViolation);
}

TEST_CASE("symmetries") {
  CHECK(symmetry(Quandle::trivial(4), 2).is_identity());
  CHECK(symmetry(Quandle::dihedral(3), 0) == Permutation::from_cycles(3, {{1, 2}}));
  const Quandle q = build(two_vertex_z3());
  // points 0..2 are vertex 0, 3..5 are vertex 1
  CHECK(symmetry(q, 0) == Permutation::from_cycles(6, {{3, 4, 5}}));
}

TEST_CASE("inner automorphism groups") {
  CHECK(inner_group(Quandle::trivial(5)).order() == 1);
  const auto dih = inner_group(Quandle::dihedral(3));
  CHECK(dih.order() == 6);
  CHECK_FALSE(is_abelian(dih));
  const auto inn = inner_group(build(two_vertex_z3()));
  CHECK(inn.order() == 9);
  CHECK(is_abelian(inn));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Quandle::trivial(1)));
  CHECK(is_connected(Quandle::dihedral(3)));
  CHECK_FALSE(is_connected(build(two_vertex_z3())));
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> m(2, 4);
    CHECK_FALSE(is_connected(build(oracle::random_digraph(rng, m(rng), AbelianGroup::cyclic(3), false))));
  }
}

TEST_CASE("homogeneity examples") {
  for (int n = 1; n <= 9; ++n) CHECK(is_homogeneous(Quandle::trivial(n)));
  for (const auto& e : classify_order(6).entries) CHECK(is_homogeneous(build(e.digraph)));
  CHECK_FALSE(is_homogeneous(build(profile_210())));
  CHECK(is_homogeneous(Quandle::dihedral(5)));
}

TEST_CASE("homogeneity search respects its budget") {
  // trivial symmetries, so each target needs a multi-node search
  CHECK_THROWS_AS(is_homogeneous(Quandle::trivial(3), SearchBudget{1}), BudgetExceeded);
  CHECK(is_homogeneous(Quandle::trivial(3), SearchBudget{100}));
}

TEST_CASE("isomorphism examples") {
  const Quandle q = build(two_vertex_z3());
  auto self = quandle_isomorphic(q, q);
  REQUIRE(self);
  CHECK(is_homomorphism(q, q, *self));

  const Permutation swap = Permutation::from_cycles(2, {{0, 1}});
  const Quandle swapped = build(relabel(two_vertex_z3(), swap));
  auto iso = quandle_isomorphic(q, swapped);
  REQUIRE(iso);
  CHECK(is_homomorphism(q, swapped, *iso));

  WeightedDigraph a(3, AbelianGroup::cyclic(2)), b(3, AbelianGroup::cyclic(2));
  for (int x = 0; x < 3; ++x) {
    a.set_rank((x + 1) % 3, x, 1);  // list (1, 0)
    b.set_rank((x + 1) % 3, x, 1);  // list (1, 1)
    b.set_rank((x + 2) % 3, x, 1);
  }
  CHECK_FALSE(quandle_isomorphic(build(a), build(b)));
  CHECK_FALSE(quandle_isomorphic(Quandle::trivial(3), Quandle::dihedral(3)));
  CHECK_FALSE(quandle_isomorphic(Quandle::trivial(3), Quandle::trivial(4)));
}

TEST_CASE("every symmetry is an automorphism") {
  std::mt19937 rng(17);
  auto qs = constructed(rng, 60, 1, 30);
  qs.push_back(Quandle::dihedral(7));
  qs.push_back(Quandle::dihedral(9));
  for (const auto& q : qs) {
    for (int x = 0; x < q.order(); ++x) CHECK(is_homomorphism(q, q, symmetry(q, x)));
  }
}

TEST_CASE("orbits of abelian-Inn quandles") {
  std::mt19937 rng(23);
  for (const auto& q : constructed(rng, 60, 2, 30)) {
    const auto inn = inner_group(q);
    REQUIRE(is_abelian(inn));
    for (const auto& orbit : orbits(inn)) {
      // symmetries coincide within an orbit
      for (int a : orbit) CHECK(symmetry(q, a) == symmetry(q, orbit[0]));
      const Quandle sub = subquandle(q, orbit);
      CHECK(sub == Quandle::trivial(sub.order()));
      CHECK(is_homogeneous(sub));
    }
  }
  // a connected example: the whole quandle is one orbit
  const Quandle d = Quandle::dihedral(5);
  CHECK(is_homogeneous(subquandle(d, orbits(inner_group(d))[0])));
}

TEST_CASE("homogeneous abelian-Inn quandles of prime order are trivial") {
  for (int n : {2, 3}) {
    for (const auto& q : oracle::all_quandles(n)) {
      if (is_abelian(inner_group(q)) && is_homogeneous(q)) CHECK(q == Quandle::trivial(n));
    }
  }
  for (int p : {2, 3, 5, 7, 11, 13}) {
    const auto catalog = classify_order(p);
    REQUIRE(catalog.count() == 1);
    CHECK(build(catalog.entries[0].digraph) == Quandle::trivial(p));
  }
}

TEST_CASE("homogeneity agrees with the all-bijections oracle") {
  std::vector<Quandle> qs;
  for (int n = 1; n <= 4; ++n) {
    auto all = oracle::all_quandles(n);
    qs.insert(qs.end(), all.begin(), all.end());
  }
  std::mt19937 rng(29);
  auto more = constructed(rng, 40, 5, 8);
  qs.insert(qs.end(), more.begin(), more.end());
  qs.push_back(Quandle::dihedral(5));
  qs.push_back(Quandle::dihedral(7));
  qs.push_back(Quandle::dihedral(6));
  qs.push_back(Quandle::dihedral(8));
  for (const auto& q : qs) CHECK(is_homogeneous(q) == oracle::homogeneous_by_bijections(q));
}

TEST_CASE("found automorphisms are automorphisms") {
  const Quandle q = build(two_vertex_z3());
  for (int t = 0; t < q.order(); ++t) {
    auto f = find_automorphism(q, 0, t);
    REQUIRE(f);
    CHECK((*f)(0) == t);
    CHECK(is_homomorphism(q, q, *f));
  }
}
