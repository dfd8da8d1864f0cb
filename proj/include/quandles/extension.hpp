#pragma once

// X x_d A: s_(x,a)(y,b) = (y, b + d(x,y)), and the way back from a quandle
// with abelian Inn to a weighted digraph on its Inn-orbits.
//
// Points are encoded as x * |A| + rank(a).

#include <cstddef>
#include <vector>

#include "quandles/algebra.hpp"
#include "quandles/quandle.hpp"
#include "quandles/wdigraph.hpp"

namespace quandles {

inline constexpr std::size_t kDefaultQuandleCap = 10'000;

/// Q3 is re-checked when the order is at most this.
inline constexpr int kAxiomRecheckLimit = 200;

Quandle build(const WeightedDigraph& w, std::size_t cap = kDefaultQuandleCap);

inline int point_of(const WeightedDigraph& w, int x, int rank) {
  return x * w.table().order() + rank;
}

struct PresentationWitness {
  std::vector<std::vector<int>> orbits;
  std::vector<int> base_points;
  AbelianGroup group;
  /// fibers[x][rank] = quandle point phi_x(a).
  std::vector<std::vector<int>> fibers;
};

struct Presentation {
  WeightedDigraph digraph;
  PresentationWitness witness;
};

/// Throws NotInClass when Inn is not abelian, orbit sizes differ, or the
/// orbit groups are not isomorphic.
Presentation presentation(const Quandle& q);

/// alpha -> (x, phi_x^-1(alpha)) as a map Q -> build(p.digraph); verified on
/// all pairs, InternalConsistency on failure.
Permutation reconstruct_iso(const Quandle& q, const Presentation& p);

}  // namespace quandles
