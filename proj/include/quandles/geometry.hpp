#pragma once

// The icosidodecahedron skeleton and the order-150 quandle Q_ID built on it
// with A = Z5 and incoming weights 1, 2, 4, 3 around every vertex.

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "quandles/algebra.hpp"
#include "quandles/quandle.hpp"
#include "quandles/wdigraph.hpp"

namespace quandles {

struct OrientedGraph {
  std::vector<Eigen::Vector3d> positions;    // unit vectors
  std::vector<std::vector<int>> adjacency;   // sorted
  std::vector<std::array<int, 4>> rotation;  // cyclic neighbour order, starting at the smallest
  std::vector<std::array<int, 5>> pentagons; // cyclic order
  std::vector<std::array<int, 3>> triangles;

  int vertex_count() const { return static_cast<int>(positions.size()); }
  std::vector<std::pair<int, int>> edges() const;  // undirected, x < y
};

/// orientation = +1 orders neighbours counterclockwise seen from outside,
/// -1 clockwise.
OrientedGraph build_icosidodecahedron(int orientation = 1);

struct QidOptions {
  int orientation = 1;
  /// d(x_1, y) per vertex as a residue in 1..4; empty means all 1.
  std::vector<int> base_weights;
  /// Index into rotation[y] of x_1 per vertex; empty means all 0.
  std::vector<int> start_offsets;
};

struct Qid {
  OrientedGraph graph;
  WeightedDigraph digraph;
  Quandle quandle;
};

/// d(x_i, y) = 2^{i-1} d(x_1, y) for the neighbours x_1..x_4 of y in rotation order.
Qid build_qid(const QidOptions& options = {});

struct QidHomogeneityReport {
  bool homogeneous = false;
  std::size_t projection_order = 0;
  bool projections_transitive = false;
};

QidHomogeneityReport verify_qid_homogeneous(SearchBudget budget = SearchBudget::from_env());

struct RotationReport {
  Permutation rotation;
  std::size_t invariant_flips = 0;
  /// Invariant flips whose weight has a transitive A-automorphism group.
  std::size_t homogeneous_flips = 0;
  bool infeasible() const { return homogeneous_flips == 0; }
};

struct NoHomogeneousWeightReport {
  std::size_t graph_automorphisms = 0;
  std::size_t projection_order = 0;
  std::vector<RotationReport> rotations;
  bool holds() const;
};

/// Every flip sigma with d^sigma(rho x, rho y) = d^sigma(x, y), found by
/// fixing sigma on one vertex per rho-orbit and propagating around the orbit.
std::vector<FlipAssignment> rotation_invariant_flips(const WeightedDigraph& w, const Permutation& rho);

NoHomogeneousWeightReport verify_no_homogeneous_weight(int jobs = 1,
                                                       SearchBudget budget = SearchBudget::from_env());

}  // namespace quandles
