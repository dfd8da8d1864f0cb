#pragma once

// A-weighted digraphs d: X x X -> A with zero diagonal, flips and weak
// isomorphism. Weights are stored as element ranks (see AbelianGroup).

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "quandles/algebra.hpp"
#include "quandles/errors.hpp"

namespace quandles {

class WeightedDigraph {
 public:
  WeightedDigraph() : WeightedDigraph(0, AbelianGroup()) {}
  /// All-zero weights.
  WeightedDigraph(int m, AbelianGroup group);

  int vertex_count() const noexcept { return m_; }
  const AbelianGroup& group() const noexcept { return table_->group(); }
  const GroupTable& table() const noexcept { return *table_; }

  int rank(int x, int y) const { return weights_[static_cast<std::size_t>(x * m_ + y)]; }
  GroupElement weight(int x, int y) const { return group().element(static_cast<std::size_t>(rank(x, y))); }
  /// Throws ContractViolation for a nonzero diagonal entry or a bad rank.
  void set_rank(int x, int y, int rank);
  void set_weight(int x, int y, const GroupElement& a) {
    set_rank(x, y, static_cast<int>(group().rank_of(a)));
  }
  const std::vector<int>& ranks() const noexcept { return weights_; }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.m_ == b.m_ && a.group() == b.group() && a.weights_ == b.weights_;
  }

 private:
  int m_;
  std::shared_ptr<const GroupTable> table_;
  std::vector<int> weights_;
};

/// Per-vertex indices into group_automorphisms(A) (= GroupTable::automorphisms()).
using FlipAssignment = std::vector<std::size_t>;

struct WeakIso {
  Permutation f;
  FlipAssignment sigma;
};

/// Nonzero-weight pairs, sorted.
std::vector<std::pair<int, int>> support_graph(const WeightedDigraph& w);

/// Incoming weights generate A at every vertex.
bool is_indecomposable(const WeightedDigraph& w);

/// d^sigma(x, y) = sigma_y(d(x, y)).
WeightedDigraph flip(const WeightedDigraph& w, const FlipAssignment& sigma);

/// Relabels vertices: result(f x, f y) = w(x, y).
WeightedDigraph relabel(const WeightedDigraph& w, const Permutation& f);

/// to(f x, f y) = sigma_y(from(x, y)) for all x, y.
bool is_weak_isomorphism(const WeightedDigraph& from, const WeightedDigraph& to, const WeakIso& iso);

std::optional<WeakIso> weak_isomorphism(const WeightedDigraph& a, const WeightedDigraph& b,
                                        SearchBudget budget = SearchBudget::from_env());

/// Every vertex permutation that extends to a weak automorphism.
PermGroup weak_automorphism_projections(const WeightedDigraph& w,
                                        SearchBudget budget = SearchBudget::from_env());

/// Weak automorphism projections act transitively. Requires indecomposable input.
bool is_flip_homogeneous(const WeightedDigraph& w, SearchBudget budget = SearchBudget::from_env());

/// Vertex permutations preserving every weight exactly.
PermGroup a_automorphisms(const WeightedDigraph& w, SearchBudget budget = SearchBudget::from_env());

/// Canonical representative of the weak-isomorphism class. Two digraphs on
/// the same group are weakly isomorphic iff their keys are equal.
struct CanonicalForm {
  std::vector<int> key;
  WeightedDigraph representative;
};
CanonicalForm weak_canonical_form(const WeightedDigraph& w);

/// Lexicographically least sorted image of S under multiplication by units of Z_p.
std::vector<int> circulant_canonical(const std::vector<int>& s, int p);

/// Vertex-transitive loopless digraphs on m <= 6 vertices up to isomorphism.
/// Each digraph is a sorted edge list; the list is in a fixed order.
std::vector<std::vector<std::pair<int, int>>> vertex_transitive_digraphs(int m);

/// Automorphism group of a plain digraph given as an edge list.
PermGroup digraph_automorphisms(int m, const std::vector<std::pair<int, int>>& edges);

}  // namespace quandles
