#include "quandles/quandle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace quandles {

Quandle Quandle::from_trusted_table(int n, std::vector<int> table) {
  if (n < 0 || table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ContractViolation("quandle table has the wrong size");
  }
  Quandle q;
  q.n_ = n;
  q.table_ = std::move(table);
  return q;
}

Quandle Quandle::trivial(int n) {
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = y;
  }
  return from_trusted_table(n, std::move(t));
}

Quandle Quandle::dihedral(int n) {
  if (n < 1) throw ContractViolation("dihedral quandle order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = ((2 * x - y) % n + n) % n;
  }
  return from_trusted_table(n, std::move(t));
}

std::vector<std::vector<int>> Quandle::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) out[static_cast<std::size_t>(x)].assign(row(x).begin(), row(x).end());
  return out;
}

std::string AxiomViolation::message() const {
  std::ostringstream out;
  out << "Q" << axiom << " violated";
  switch (axiom) {
    case 1: out << " at x=" << witness.at(0); break;
    case 2: out << ": row " << witness.at(0) << " is not a permutation"; break;
    case 3:
      out << " at x=" << witness.at(0) << " y=" << witness.at(1) << " z=" << witness.at(2);
      break;
    default: break;
  }
  return out.str();
}

std::variant<Quandle, AxiomViolation> check_axioms(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ContractViolation("quandle table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw ContractViolation("quandle table entry out of range");
      flat.push_back(v);
    }
  }
  Quandle q = Quandle::from_trusted_table(n, std::move(flat));
  for (int x = 0; x < n; ++x) {
    if (q(x, x) != x) return AxiomViolation{1, {x}};
  }
  for (int x = 0; x < n; ++x) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
      if (seen[static_cast<std::size_t>(q(x, y))]) return AxiomViolation{2, {x}};
      seen[static_cast<std::size_t>(q(x, y))] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = q(x, y);
      for (int z = 0; z < n; ++z) {
        if (q(x, q(y, z)) != q(xy, q(x, z))) return AxiomViolation{3, {x, y, z}};
      }
    }
  }
  return q;
}

Permutation symmetry(const Quandle& q, int x) {
  if (x < 0 || x >= q.order()) throw ContractViolation("symmetry: point out of range");
  return Permutation(std::vector<int>(q.row(x).begin(), q.row(x).end()));
}

PermGroup inner_group(const Quandle& q) {
  std::vector<Permutation> gens;
  gens.reserve(static_cast<std::size_t>(q.order()));
  for (int x = 0; x < q.order(); ++x) gens.push_back(symmetry(q, x));
  return PermGroup(q.order(), std::move(gens));
}

bool is_connected(const Quandle& q) { return is_transitive(inner_group(q)); }

bool is_homomorphism(const Quandle& from, const Quandle& to, const Permutation& f) {
  if (f.degree() != from.order()) return false;
  for (int x = 0; x < from.order(); ++x) {
    for (int y = 0; y < from.order(); ++y) {
      if (f(from(x, y)) != to(f(x), f(y))) return false;
    }
  }
  return true;
}

namespace {

// Per-point data preserved by isomorphisms: Inn-orbit size, fixed points of
// s_x, cycle type of s_x.
struct PointData {
  std::vector<int> orbit_id;
  std::vector<std::vector<int>> profile;
};

PointData point_data(const Quandle& q) {
  PointData data;
  const auto n = static_cast<std::size_t>(q.order());
  data.orbit_id.assign(n, 0);
  data.profile.resize(n);
  const auto orbs = orbits(inner_group(q));
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    for (int p : orbs[i]) data.orbit_id[static_cast<std::size_t>(p)] = static_cast<int>(i);
  }
  for (int x = 0; x < q.order(); ++x) {
    const Permutation s = symmetry(q, x);
    auto& prof = data.profile[static_cast<std::size_t>(x)];
    prof.push_back(static_cast<int>(orbs[static_cast<std::size_t>(data.orbit_id[static_cast<std::size_t>(x)])].size()));
    prof.push_back(static_cast<int>(s.fixed_points()));
    const auto ct = s.cycle_type();
    prof.insert(prof.end(), ct.begin(), ct.end());
  }
  return data;
}

class IsoSearch {
 public:
  IsoSearch(const Quandle& a, const Quandle& b, NodeCounter& counter)
      : a_(a), b_(b), da_(point_data(a)), db_(point_data(b)), counter_(counter) {}

  const PointData& source_data() const { return da_; }
  const PointData& target_data() const { return db_; }

  std::optional<Permutation> run(std::optional<std::pair<int, int>> first) {
    State s = initial();
    if (first) {
      if (!assign(s, first->first, first->second)) return std::nullopt;
    }
    if (!dfs(s)) return std::nullopt;
    return Permutation(std::move(result_));
  }

 private:
  struct State {
    std::vector<int> f, finv, orbit_map, orbit_inv, assigned;
  };

  State initial() const {
    const auto n = static_cast<std::size_t>(a_.order());
    const auto orbit_count =
        static_cast<std::size_t>(1 + *std::max_element(da_.orbit_id.begin(), da_.orbit_id.end()));
    return State{std::vector<int>(n, -1), std::vector<int>(n, -1),
                 std::vector<int>(orbit_count, -1), std::vector<int>(orbit_count, -1), {}};
  }

  bool assign(State& s, int p0, int q0) const {
    std::deque<std::pair<int, int>> queue{{p0, q0}};
    while (!queue.empty()) {
      const auto [p, q] = queue.front();
      queue.pop_front();
      const auto up = static_cast<std::size_t>(p);
      const auto uq = static_cast<std::size_t>(q);
      if (s.f[up] == q) continue;
      if (s.f[up] != -1 || s.finv[uq] != -1) return false;
      if (da_.profile[up] != db_.profile[uq]) return false;
      const auto oa = static_cast<std::size_t>(da_.orbit_id[up]);
      const auto ob = static_cast<std::size_t>(db_.orbit_id[uq]);
      if (s.orbit_map[oa] != -1 && s.orbit_map[oa] != static_cast<int>(ob)) return false;
      if (s.orbit_inv[ob] != -1 && s.orbit_inv[ob] != static_cast<int>(oa)) return false;
      s.orbit_map[oa] = static_cast<int>(ob);
      s.orbit_inv[ob] = static_cast<int>(oa);
      s.f[up] = q;
      s.finv[uq] = p;
      s.assigned.push_back(p);
      for (int r : s.assigned) {
        const int fr = s.f[static_cast<std::size_t>(r)];
        queue.emplace_back(a_(p, r), b_(q, fr));
        queue.emplace_back(a_(r, p), b_(fr, q));
      }
    }
    return true;
  }

  int next_point(const State& s) const {
    int best = -1;
    int best_score = -1;
    for (int p = 0; p < a_.order(); ++p) {
      if (s.f[static_cast<std::size_t>(p)] != -1) continue;
      int score = 0;
      for (int r : s.assigned) score += a_(r, p) != p;
      if (score > best_score) {
        best = p;
        best_score = score;
      }
    }
    return best;
  }

  bool dfs(const State& s) {
    counter_.tick();
    if (s.assigned.size() == static_cast<std::size_t>(a_.order())) {
      result_ = s.f;
      return true;
    }
    const int p = next_point(s);
    const auto up = static_cast<std::size_t>(p);
    for (int q = 0; q < b_.order(); ++q) {
      const auto uq = static_cast<std::size_t>(q);
      if (s.finv[uq] != -1 || da_.profile[up] != db_.profile[uq]) continue;
      State next = s;
      if (!assign(next, p, q)) continue;
      if (dfs(next)) return true;
    }
    return false;
  }

  const Quandle& a_;
  const Quandle& b_;
  PointData da_;
  PointData db_;
  NodeCounter& counter_;
  std::vector<int> result_;
};

}  // namespace

std::optional<Permutation> find_automorphism(const Quandle& q, int source, int target,
                                             SearchBudget budget) {
  if (source < 0 || source >= q.order() || target < 0 || target >= q.order()) {
    throw ContractViolation("find_automorphism: point out of range");
  }
  NodeCounter counter(budget, "automorphism search");
  IsoSearch search(q, q, counter);
  return search.run(std::make_pair(source, target));
}

bool is_homogeneous(const Quandle& q, SearchBudget budget) {
  const int n = q.order();
  if (n <= 1) return true;
  NodeCounter counter(budget, "homogeneity search");
  IsoSearch search(q, q, counter);
  std::vector<Permutation> gens;
  for (int x = 0; x < n; ++x) {
    Permutation s = symmetry(q, x);
    if (!s.is_identity()) gens.push_back(std::move(s));
  }
  auto reached_set = [&] {
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    for (int p : orbit_of(PermGroup(n, gens), 0)) reached[static_cast<std::size_t>(p)] = 1;
    return reached;
  };
  std::vector<char> reached = reached_set();
  for (int t = 1; t < n; ++t) {
    if (reached[static_cast<std::size_t>(t)]) continue;
    auto f = search.run(std::make_pair(0, t));
    if (!f) return false;
    gens.push_back(std::move(*f));
    reached = reached_set();
  }
  return true;
}

std::optional<Permutation> quandle_isomorphic(const Quandle& a, const Quandle& b,
                                              SearchBudget budget) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 0) return Permutation::identity(0);
  NodeCounter counter(budget, "isomorphism search");
  IsoSearch search(a, b, counter);
  auto pa = search.source_data().profile;
  auto pb = search.target_data().profile;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return std::nullopt;
  return search.run(std::nullopt);
}

}  // namespace quandles
