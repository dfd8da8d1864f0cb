#include "quandles/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Geometry>

#include "quandles/extension.hpp"
#include "quandles/parallel.hpp"

namespace quandles {

std::vector<std::pair<int, int>> OrientedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < vertex_count(); ++x) {
    for (int y : adjacency[static_cast<std::size_t>(x)]) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

OrientedGraph build_icosidodecahedron(int orientation) {
  if (orientation != 1 && orientation != -1) throw ContractViolation("orientation must be +1 or -1");
  const double phi = std::numbers::phi;
  std::vector<Eigen::Vector3d> ico;
  for (int a : {-1, 1}) {
    for (int b : {-1, 1}) {
      ico.emplace_back(0, a, b * phi);
      ico.emplace_back(a, b * phi, 0);
      ico.emplace_back(b * phi, 0, a);
    }
  }
  const int n = static_cast<int>(ico.size());
  auto is_edge = [&](int i, int j) {
    return std::abs((ico[static_cast<std::size_t>(i)] - ico[static_cast<std::size_t>(j)]).squaredNorm() - 4.0) < 1e-9;
  };
  std::map<std::pair<int, int>, int> edge_index;
  std::vector<std::pair<int, int>> ico_edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (is_edge(i, j)) {
        edge_index[{i, j}] = static_cast<int>(ico_edges.size());
        ico_edges.emplace_back(i, j);
      }
    }
  }
  auto edge_of = [&](int i, int j) { return edge_index.at({std::min(i, j), std::max(i, j)}); };

  OrientedGraph g;
  const auto m = ico_edges.size();
  g.adjacency.resize(m);
  for (const auto& [i, j] : ico_edges) {
    g.positions.push_back(((ico[static_cast<std::size_t>(i)] + ico[static_cast<std::size_t>(j)]) / 2).normalized());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!is_edge(i, j) || !is_edge(j, k) || !is_edge(i, k)) continue;
        std::array<int, 3> t{edge_of(i, j), edge_of(j, k), edge_of(i, k)};
        std::sort(t.begin(), t.end());
        g.triangles.push_back(t);
        for (int a : t) {
          for (int b : t) {
            if (a != b) g.adjacency[static_cast<std::size_t>(a)].push_back(b);
          }
        }
      }
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());

  g.rotation.resize(m);
  for (std::size_t v = 0; v < m; ++v) {
    const Eigen::Vector3d normal = g.positions[v];
    auto project = [&](int u) {
      const Eigen::Vector3d p = g.positions[static_cast<std::size_t>(u)];
      return Eigen::Vector3d(p - p.dot(normal) * normal);
    };
    const auto& adj = g.adjacency[v];
    const Eigen::Vector3d e1 = project(adj.front()).normalized();
    const Eigen::Vector3d e2 = normal.cross(e1);
    std::vector<std::pair<double, int>> by_angle;
    for (int u : adj) {
      const Eigen::Vector3d w = project(u);
      double angle = std::atan2(w.dot(e2), w.dot(e1));
      if (angle < -1e-12) angle += 2 * std::numbers::pi;
      by_angle.emplace_back(std::max(angle, 0.0), u);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t slot = orientation == 1 ? i : (4 - i) % 4;
      g.rotation[v][slot] = by_angle[i].second;
    }
  }

  for (int i = 0; i < n; ++i) {
    std::vector<int> around;
    for (int j = 0; j < n; ++j) {
      if (j != i && is_edge(i, j)) around.push_back(edge_of(i, j));
    }
    std::sort(around.begin(), around.end());
    std::array<int, 5> cycle{};
    cycle[0] = around.front();
    std::vector<char> used(m, 0);
    used[static_cast<std::size_t>(cycle[0])] = 1;
    for (std::size_t k = 1; k < 5; ++k) {
      for (int c : around) {
        const auto& adj = g.adjacency[static_cast<std::size_t>(cycle[k - 1])];
        if (!used[static_cast<std::size_t>(c)] && std::binary_search(adj.begin(), adj.end(), c)) {
          cycle[k] = c;
          used[static_cast<std::size_t>(c)] = 1;
          break;
        }
      }
    }
    g.pentagons.push_back(cycle);
  }
  return g;
}

Qid build_qid(const QidOptions& options) {
  OrientedGraph graph = build_icosidodecahedron(options.orientation);
  const int m = graph.vertex_count();
  if (!options.base_weights.empty() && options.base_weights.size() != static_cast<std::size_t>(m)) {
    throw ContractViolation("base_weights must have one entry per vertex");
  }
  if (!options.start_offsets.empty() && options.start_offsets.size() != static_cast<std::size_t>(m)) {
    throw ContractViolation("start_offsets must have one entry per vertex");
  }
  WeightedDigraph w(m, AbelianGroup::cyclic(5));
  for (int y = 0; y < m; ++y) {
    const auto uy = static_cast<std::size_t>(y);
    const int c = options.base_weights.empty() ? 1 : options.base_weights[uy];
    const int start = options.start_offsets.empty() ? 0 : options.start_offsets[uy];
    if (c % 5 == 0) throw ContractViolation("base weights must be nonzero in Z5");
    int value = ((c % 5) + 5) % 5;
    for (int i = 0; i < 4; ++i) {
      w.set_rank(graph.rotation[uy][static_cast<std::size_t>(((start + i) % 4 + 4) % 4)], y, value);
      value = value * 2 % 5;
    }
  }
  Quandle q = build(w);
  return Qid{std::move(graph), std::move(w), std::move(q)};
}

QidHomogeneityReport verify_qid_homogeneous(SearchBudget budget) {
  const Qid qid = build_qid();
  QidHomogeneityReport report;
  const PermGroup projections = weak_automorphism_projections(qid.digraph, budget);
  report.projection_order = projections.order();
  report.projections_transitive = is_transitive(projections);
  report.homogeneous = is_flip_homogeneous(qid.digraph, budget);
  return report;
}

std::vector<FlipAssignment> rotation_invariant_flips(const WeightedDigraph& w, const Permutation& rho) {
  const int m = w.vertex_count();
  if (rho.degree() != m) throw ContractViolation("rotation degree does not match the digraph");
  const GroupTable& t = w.table();
  // sigma_{rho y} is forced by sigma_y: it must send d(rho x, rho y) to sigma_y(d(x, y)).
  auto forced = [&](int y, std::size_t sigma_y) -> std::optional<std::size_t> {
    for (std::size_t tau = 0; tau < t.automorphism_count(); ++tau) {
      bool ok = true;
      for (int x = 0; x < m && ok; ++x) {
        ok = t.apply(tau, w.rank(rho(x), rho(y))) == t.apply(sigma_y, w.rank(x, y));
      }
      if (ok) return tau;
    }
    return std::nullopt;
  };
  std::vector<std::vector<std::vector<std::pair<int, std::size_t>>>> per_orbit;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    std::vector<std::vector<std::pair<int, std::size_t>>> options;
    for (std::size_t start = 0; start < t.automorphism_count(); ++start) {
      std::vector<std::pair<int, std::size_t>> chain{{r, start}};
      bool ok = true;
      for (int y = r;;) {
        auto next = forced(y, chain.back().second);
        if (!next) {
          ok = false;
          break;
        }
        y = rho(y);
        if (y == r) {
          ok = *next == start;
          break;
        }
        chain.emplace_back(y, *next);
      }
      if (ok) options.push_back(std::move(chain));
    }
    for (int y = r; !seen[static_cast<std::size_t>(y)]; y = rho(y)) seen[static_cast<std::size_t>(y)] = 1;
    per_orbit.push_back(std::move(options));
  }
  std::vector<FlipAssignment> out{FlipAssignment(static_cast<std::size_t>(m), 0)};
  for (const auto& options : per_orbit) {
    std::vector<FlipAssignment> next;
    for (const auto& partial : out) {
      for (const auto& chain : options) {
        FlipAssignment s = partial;
        for (const auto& [y, a] : chain) s[static_cast<std::size_t>(y)] = a;
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool NoHomogeneousWeightReport::holds() const {
  return rotations.size() == 24 &&
         std::all_of(rotations.begin(), rotations.end(), [](const RotationReport& r) { return r.infeasible(); });
}

NoHomogeneousWeightReport verify_no_homogeneous_weight(int jobs, SearchBudget budget) {
  const Qid qid = build_qid();
  const WeightedDigraph& w = qid.digraph;
  const int m = w.vertex_count();
  const PermGroup graph_group = digraph_automorphisms(m, support_graph(w));
  const PermGroup projections = weak_automorphism_projections(w, budget);
  NoHomogeneousWeightReport report;
  report.graph_automorphisms = graph_group.order();
  report.projection_order = projections.order();
  const auto rotations = elements_of_order(graph_group, 5);
  report.rotations.resize(rotations.size());
  // A-automorphisms of any flip of d are weak automorphisms of d, so they
  // lie among the projections.
  parallel_for(rotations.size(), jobs, [&](std::size_t i) {
    RotationReport r{rotations[i], 0, 0};
    const auto flips = rotation_invariant_flips(w, rotations[i]);
    r.invariant_flips = flips.size();
    for (const auto& sigma : flips) {
      const WeightedDigraph ws = flip(w, sigma);
      std::vector<Permutation> preserving;
      for (const auto& g : projections.elements()) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) {
          for (int y = 0; y < m && ok; ++y) ok = ws.rank(g(x), g(y)) == ws.rank(x, y);
        }
        if (ok) preserving.push_back(g);
      }
      if (is_transitive(PermGroup::from_elements(m, std::move(preserving)))) ++r.homogeneous_flips;
    }
    report.rotations[i] = std::move(r);
  });
  return report;
}

}  // namespace quandles
