#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quandles/classify.hpp"
#include "quandles/wdigraph.hpp"

using namespace quandles;

namespace {

WeightedDigraph list5(std::vector<int> values) {
  return shift_invariant_digraph(5, AbelianGroup::cyclic(2), WeightList{std::move(values)});
}

WeightedDigraph two_vertex_z3() {
  WeightedDigraph w(2, AbelianGroup::cyclic(3));
  w.set_rank(0, 1, 1);
  w.set_rank(1, 0, 1);
  return w;
}

Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

FlipAssignment random_flip(std::mt19937& rng, const WeightedDigraph& w) {
  std::uniform_int_distribution<std::size_t> pick(0, w.table().automorphism_count() - 1);
  FlipAssignment s(static_cast<std::size_t>(w.vertex_count()));
  for (auto& v : s) v = pick(rng);
  return s;
}

std::size_t automorphism_index(const AbelianGroup& g, const Permutation& p) {
  const auto& auts = group_table(g)->automorphisms();
  return static_cast<std::size_t>(std::find(auts.begin(), auts.end(), p) - auts.begin());
}

WeakIso compose(const WeakIso& second, const WeakIso& first, const GroupTable& t) {
  WeakIso out{second.f * first.f, {}};
  for (int y = 0; y < first.f.degree(); ++y) {
    out.sigma.push_back(t.compose_automorphisms(second.sigma[static_cast<std::size_t>(first.f(y))],
                                                first.sigma[static_cast<std::size_t>(y)]));
  }
  return out;
}

WeakIso invert(const WeakIso& iso, const GroupTable& t) {
  WeakIso out{iso.f.inverse(), FlipAssignment(iso.sigma.size())};
  for (int y = 0; y < iso.f.degree(); ++y) {
    out.sigma[static_cast<std::size_t>(iso.f(y))] = t.inverse_automorphism(iso.sigma[static_cast<std::size_t>(y)]);
  }
  return out;
}

// Vertex permutations that extend to a weak automorphism, by brute force.
std::set<std::vector<int>> projections_by_brute_force(const WeightedDigraph& w) {
  const int m = w.vertex_count();
  const auto& auts = w.table().automorphisms();
  std::set<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(m));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int y = 0; y < m && ok; ++y) {
      bool column = false;
      for (const auto& s : auts) {
        bool all = true;
        for (int x = 0; x < m && all; ++x) all = w.rank(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]) == s(w.rank(x, y));
        column = column || all;
      }
      ok = column;
    }
    if (ok) out.insert(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

oracle::Edges edges_of(const WeightedDigraph& w) { return support_graph(w); }

}  // namespace

TEST_CASE("support graphs") {
  CHECK(support_graph(WeightedDigraph(4, AbelianGroup::cyclic(3))).empty());
  CHECK(support_graph(two_vertex_z3()) == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(two_vertex_z3()));
  WeightedDigraph w(3, AbelianGroup::cyclic(4));
  w.set_rank(0, 1, 1);
  w.set_rank(1, 2, 1);
  w.set_rank(2, 0, 2);
  CHECK_FALSE(is_indecomposable(w));
  w.set_rank(1, 0, 1);
  CHECK(is_indecomposable(w));
  CHECK(is_indecomposable(WeightedDigraph(3, AbelianGroup())));
}

TEST_CASE("diagonal must stay zero") {
  WeightedDigraph w(2, AbelianGroup::cyclic(3));
  CHECK_THROWS_AS(w.set_rank(1, 1, 1), ContractViolation);
  CHECK_THROWS_AS(w.set_rank(0, 1, 3), ContractViolation);
}

TEST_CASE("flip examples") {
  const AbelianGroup z5 = AbelianGroup::cyclic(5);
  WeightedDigraph w(2, z5);
  w.set_rank(0, 1, 1);
  CHECK(flip(w, {0, 0}) == w);
  const auto times2 = automorphism_index(z5, Permutation({0, 2, 4, 1, 3}));
  CHECK(flip(w, {0, times2}).rank(0, 1) == 2);
  const GroupTable& t = w.table();
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto v = oracle::random_digraph(rng, 4, z5, false);
    const auto s = random_flip(rng, v);
    FlipAssignment inv;
    for (auto a : s) inv.push_back(t.inverse_automorphism(a));
    CHECK(flip(flip(v, s), inv) == v);
  }
}

TEST_CASE("flip is a group action") {
  std::mt19937 rng(2);
  for (const auto& g : {AbelianGroup::cyclic(5), AbelianGroup({2, 2}), AbelianGroup::cyclic(8)}) {
    for (int i = 0; i < 40; ++i) {
      const auto w = oracle::random_digraph(rng, 3, g, false);
      const auto s = random_flip(rng, w), t = random_flip(rng, w);
      FlipAssignment ts;
      for (std::size_t y = 0; y < s.size(); ++y) ts.push_back(w.table().compose_automorphisms(t[y], s[y]));
      CHECK(flip(flip(w, s), t) == flip(w, ts));
    }
  }
}

TEST_CASE("weak isomorphism examples") {
  const auto w = list5({1, 0, 1, 1});
  auto self = weak_isomorphism(w, w);
  REQUIRE(self);
  CHECK(is_weak_isomorphism(w, w, *self));
  auto iso = weak_isomorphism(list5({1, 0, 1, 1}), list5({1, 1, 0, 1}));
  REQUIRE(iso);
  CHECK(is_weak_isomorphism(list5({1, 0, 1, 1}), list5({1, 1, 0, 1}), *iso));
  CHECK_FALSE(weak_isomorphism(list5({1, 0, 0, 0}), list5({1, 1, 1, 1})));
  CHECK_FALSE(weak_isomorphism(WeightedDigraph(2, AbelianGroup::cyclic(3)), WeightedDigraph(3, AbelianGroup::cyclic(3))));
}

TEST_CASE("weak isomorphism is an equivalence on the n = 10 catalog") {
  const auto catalog = classify_order(10);
  std::mt19937 rng(4);
  std::vector<WeightedDigraph> pool;
  for (const auto& e : catalog.entries) {
    pool.push_back(e.digraph);
    for (int i = 0; i < 3; ++i) {
      const auto& w = e.digraph;
      pool.push_back(flip(relabel(w, random_permutation(rng, w.vertex_count())), random_flip(rng, w)));
    }
  }
  std::vector<std::vector<int>> keys;
  for (const auto& w : pool) keys.push_back(weak_canonical_form(w).key);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      auto ab = weak_isomorphism(a, b);
      const bool same = a.vertex_count() == b.vertex_count() && a.group() == b.group() && keys[i] == keys[j];
      CHECK(ab.has_value() == same);
      if (!ab) continue;
      const GroupTable& t = a.table();
      CHECK(is_weak_isomorphism(a, b, *ab));
      CHECK(is_weak_isomorphism(b, a, invert(*ab, t)));
      for (const auto& c : pool) {
        if (auto bc = weak_isomorphism(b, c)) CHECK(is_weak_isomorphism(a, c, compose(*bc, *ab, t)));
      }
    }
  }
}

TEST_CASE("weak isomorphism agrees with the brute-force oracle") {
  std::mt19937 rng(6);
  for (const auto& g : {AbelianGroup::cyclic(3), AbelianGroup::cyclic(4), AbelianGroup({2, 2}), AbelianGroup::cyclic(5)}) {
    for (int i = 0; i < 60; ++i) {
      const auto a = oracle::random_digraph(rng, 4, g, false, 0.5);
      const auto b = i % 2 ? flip(relabel(a, random_permutation(rng, 4)), random_flip(rng, a))
                           : oracle::random_digraph(rng, 4, g, false, 0.5);
      const bool expected = oracle::weakly_isomorphic_by_brute_force(a, b);
      CHECK(weak_isomorphism(a, b).has_value() == expected);
      CHECK((weak_canonical_form(a).key == weak_canonical_form(b).key) == expected);
    }
  }
}

TEST_CASE("over Z2 weak isomorphism is support isomorphism") {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  auto from_mask = [&](int m, std::uint32_t mask) {
    WeightedDigraph w(m, z2);
    int bit = 0;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (x != y && (mask >> bit++ & 1u)) w.set_rank(x, y, 1);
    return w;
  };
  for (int m = 1; m <= 3; ++m) {
    const std::uint32_t total = 1u << (m * (m - 1));
    for (std::uint32_t a = 0; a < total; ++a) {
      for (std::uint32_t b = 0; b < total; ++b) {
        const auto wa = from_mask(m, a), wb = from_mask(m, b);
        CHECK(weak_isomorphism(wa, wb).has_value() == oracle::digraphs_isomorphic(m, edges_of(wa), edges_of(wb)));
      }
    }
  }
  std::mt19937 rng(8);
  for (int m : {4, 5}) {
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (m * (m - 1))) - 1);
    for (int i = 0; i < 150; ++i) {
      const auto wa = from_mask(m, mask(rng));
      const auto wb = i % 3 == 0 ? relabel(wa, random_permutation(rng, m)) : from_mask(m, mask(rng));
      CHECK(weak_isomorphism(wa, wb).has_value() == oracle::digraphs_isomorphic(m, edges_of(wa), edges_of(wb)));
    }
  }
}

TEST_CASE("weak automorphism projections") {
  CHECK(weak_automorphism_projections(WeightedDigraph(4, AbelianGroup::cyclic(3))).order() == 24);
  CHECK(weak_automorphism_projections(two_vertex_z3()).order() == 2);
  std::mt19937 rng(9);
  for (const auto& g : {AbelianGroup::cyclic(2), AbelianGroup::cyclic(5), AbelianGroup({2, 2})}) {
    for (int i = 0; i < 30; ++i) {
      const auto w = oracle::random_digraph(rng, 5, g, false, 0.4);
      const auto proj = weak_automorphism_projections(w);
      const auto expected = projections_by_brute_force(w);
      std::set<std::vector<int>> got;
      for (const auto& p : proj.elements()) got.insert({p.images().begin(), p.images().end()});
      CHECK(got == expected);
      for (const auto& a : proj.elements()) {
        CHECK(proj.contains(a.inverse()));
        for (const auto& b : proj.generators()) CHECK(expected.count(oracle::compose(
            {a.images().begin(), a.images().end()}, {b.images().begin(), b.images().end()})) == 1);
      }
    }
  }
}

TEST_CASE("flip homogeneity") {
  CHECK(is_flip_homogeneous(two_vertex_z3()));
  CHECK_FALSE(is_flip_homogeneous([] {
    WeightedDigraph w(3, AbelianGroup::cyclic(2));
    w.set_rank(0, 1, 1);
    w.set_rank(1, 0, 1);
    w.set_rank(0, 2, 1);
    return w;
  }()));
  WeightedDigraph decomposable(2, AbelianGroup::cyclic(3));
  decomposable.set_rank(0, 1, 1);
  CHECK_THROWS_AS(is_flip_homogeneous(decomposable), ContractViolation);
}

TEST_CASE("A-automorphisms") {
  CHECK(a_automorphisms(WeightedDigraph(4, AbelianGroup::cyclic(2))).order() == 24);
  CHECK(a_automorphisms(two_vertex_z3()).order() == 2);
  WeightedDigraph w(2, AbelianGroup::cyclic(3));
  w.set_rank(0, 1, 1);
  w.set_rank(1, 0, 2);
  CHECK(a_automorphisms(w).order() == 1);
  CHECK(weak_automorphism_projections(w).order() == 2);
  std::mt19937 rng(10);
  for (int i = 0; i < 30; ++i) {
    const auto v = oracle::random_digraph(rng, 5, AbelianGroup::cyclic(3), false, 0.4);
    const auto proj = weak_automorphism_projections(v);
    const auto strict = a_automorphisms(v);
    for (const auto& g : strict.elements()) {
      CHECK(relabel(v, g) == v);
      CHECK(proj.contains(g));
    }
  }
}

TEST_CASE("canonical forms") {
  std::mt19937 rng(12);
  for (const auto& g : {AbelianGroup::cyclic(3), AbelianGroup::cyclic(6), AbelianGroup({2, 2})}) {
    for (int i = 0; i < 40; ++i) {
      const auto w = oracle::random_digraph(rng, 5, g, false);
      const auto c = weak_canonical_form(w);
      CHECK(weak_isomorphism(w, c.representative).has_value());
      const auto v = flip(relabel(w, random_permutation(rng, 5)), random_flip(rng, w));
      CHECK(weak_canonical_form(v).key == c.key);
      CHECK(weak_canonical_form(v).representative == c.representative);
    }
  }
}

TEST_CASE("circulant canonical forms") {
  CHECK(circulant_canonical({}, 5).empty());
  CHECK(circulant_canonical({1, 3}, 5) == circulant_canonical({2, 1}, 5));
  CHECK(circulant_canonical({1, 3}, 5) == circulant_canonical({1, 2}, 5));
  CHECK_THROWS_AS(circulant_canonical({1}, 6), ContractViolation);
  for (int p : {3, 5, 7}) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << (p - 1)); ++mask) {
      std::vector<int> s;
      for (int v = 1; v < p; ++v)
        if (mask >> (v - 1) & 1) s.push_back(v);
      subsets.push_back(s);
    }
    std::vector<oracle::Edges> canon;
    for (const auto& s : subsets) canon.push_back(oracle::canonical_digraph(p, oracle::circulant(p, s)));
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = 0; b < subsets.size(); ++b)
        CHECK((circulant_canonical(subsets[a], p) == circulant_canonical(subsets[b], p)) == (canon[a] == canon[b]));
  }
}

TEST_CASE("vertex-transitive digraphs") {
  CHECK(vertex_transitive_digraphs(2).size() == 2);
  CHECK(vertex_transitive_digraphs(3).size() == 3);
  for (int m = 1; m <= 4; ++m) {
    std::set<oracle::Edges> got;
    for (const auto& e : vertex_transitive_digraphs(m)) got.insert(oracle::canonical_digraph(m, e));
    CHECK(got == oracle::vertex_transitive_by_brute_force(m));
    CHECK(got.size() == vertex_transitive_digraphs(m).size());
  }
  const auto six = vertex_transitive_digraphs(6);
  CHECK(six.size() == 22);
  std::set<oracle::Edges> distinct;
  for (const auto& e : six) {
    CHECK(is_transitive(digraph_automorphisms(6, e)));
    distinct.insert(oracle::canonical_digraph(6, e));
  }
  CHECK(distinct.size() == six.size());
  CHECK_THROWS_AS(vertex_transitive_digraphs(7), UnsupportedSize);
}

TEST_CASE("digraph automorphisms") {
  CHECK(digraph_automorphisms(3, {{0, 1}, {1, 2}, {2, 0}}).order() == 3);
  CHECK(digraph_automorphisms(3, {}).order() == 6);
  CHECK(digraph_automorphisms(4, oracle::circulant(4, {1, 3})).order() == 8);
}
