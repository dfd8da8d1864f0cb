#include "quandles/extension.hpp"

#include <algorithm>
#include <variant>

namespace quandles {

Quandle build(const WeightedDigraph& w, std::size_t cap) {
  const int m = w.vertex_count();
  const GroupTable& t = w.table();
  const int k = t.order();
  const std::size_t n = static_cast<std::size_t>(m) * static_cast<std::size_t>(k);
  if (n > cap) {
    throw EnumerationTooLarge("quandle order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> table(n * n);
  for (int x = 0; x < m; ++x) {
    for (int a = 0; a < k; ++a) {
      const std::size_t row = static_cast<std::size_t>(x * k + a) * n;
      for (int y = 0; y < m; ++y) {
        const int d = w.rank(x, y);
        for (int b = 0; b < k; ++b) table[row + static_cast<std::size_t>(y * k + b)] = y * k + t.add(b, d);
      }
    }
  }
  Quandle q = Quandle::from_trusted_table(static_cast<int>(n), std::move(table));
  if (static_cast<int>(n) <= kAxiomRecheckLimit) {
    if (auto v = check_axioms(q.table()); std::holds_alternative<AxiomViolation>(v)) {
      throw InternalConsistency("build produced a non-quandle: " + std::get<AxiomViolation>(v).message());
    }
  }
  return q;
}

Presentation presentation(const Quandle& q) {
  const int n = q.order();
  PermGroup inn = inner_group(q);
  if (!is_abelian(inn)) throw NotInClass("inner automorphism group is not abelian");
  const auto orbs = orbits(inn);
  for (const auto& o : orbs) {
    if (o.size() != orbs.front().size()) throw NotInClass("Inn-orbits have different sizes");
  }
  const int m = static_cast<int>(orbs.size());

  PresentationWitness witness;
  witness.orbits = orbs;
  std::vector<int> fiber_rank(static_cast<std::size_t>(n), -1);
  std::vector<int> fiber_of(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < m; ++x) {
    const auto& orbit = orbs[static_cast<std::size_t>(x)];
    const int size = static_cast<int>(orbit.size());
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < size; ++i) local[static_cast<std::size_t>(orbit[static_cast<std::size_t>(i)])] = i;
    // Inn restricted to one orbit is abelian and transitive, hence regular.
    std::vector<Permutation> gens;
    for (const auto& g : inn.generators()) {
      std::vector<int> images(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) {
        images[static_cast<std::size_t>(i)] = local[static_cast<std::size_t>(g(orbit[static_cast<std::size_t>(i)]))];
      }
      gens.emplace_back(std::move(images));
    }
    const PermGroup restricted = closure(std::move(gens), size);
    if (restricted.order() != static_cast<std::size_t>(size)) {
      throw InternalConsistency("orbit group is not regular");
    }
    const AbelianStructure structure = abelian_invariants(restricted);
    if (x == 0) {
      witness.group = structure.group;
    } else if (!(structure.group == witness.group)) {
      throw NotInClass("orbit groups are not isomorphic: " + witness.group.name() + " vs " +
                       structure.group.name());
    }
    witness.base_points.push_back(orbit.front());
    std::vector<int> fiber(static_cast<std::size_t>(size));
    for (int r = 0; r < size; ++r) {
      const Permutation& g = structure.element_at(structure.group.element(static_cast<std::size_t>(r)));
      const int point = orbit[static_cast<std::size_t>(g(0))];
      fiber[static_cast<std::size_t>(r)] = point;
      fiber_rank[static_cast<std::size_t>(point)] = r;
      fiber_of[static_cast<std::size_t>(point)] = x;
    }
    witness.fibers.push_back(std::move(fiber));
  }

  WeightedDigraph w(m, witness.group);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int image = q(witness.base_points[static_cast<std::size_t>(x)], witness.base_points[static_cast<std::size_t>(y)]);
      w.set_rank(x, y, fiber_rank[static_cast<std::size_t>(image)]);
    }
  }
  if (!is_indecomposable(w)) throw InternalConsistency("extracted presentation is not indecomposable");
  return Presentation{std::move(w), std::move(witness)};
}

Permutation reconstruct_iso(const Quandle& q, const Presentation& p) {
  const Quandle built = build(p.digraph);
  if (built.order() != q.order()) throw InternalConsistency("presentation has the wrong order");
  const int k = p.digraph.table().order();
  std::vector<int> images(static_cast<std::size_t>(q.order()), -1);
  for (std::size_t x = 0; x < p.witness.fibers.size(); ++x) {
    for (std::size_t r = 0; r < p.witness.fibers[x].size(); ++r) {
      images[static_cast<std::size_t>(p.witness.fibers[x][r])] = static_cast<int>(x) * k + static_cast<int>(r);
    }
  }
  Permutation f;
  try {
    f = Permutation(std::move(images));
  } catch (const ContractViolation&) {
    throw InternalConsistency("witness fibers do not cover the quandle");
  }
  if (!is_homomorphism(q, built, f)) throw InternalConsistency("reconstructed map is not a homomorphism");
  return f;
}

}  // namespace quandles
