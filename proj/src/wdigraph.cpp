#include "quandles/wdigraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace quandles {

WeightedDigraph::WeightedDigraph(int m, AbelianGroup group)
    : m_(m), table_(group_table(group)), weights_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0) {
  if (m < 0) throw ContractViolation("vertex count must be non-negative");
}

void WeightedDigraph::set_rank(int x, int y, int rank) {
  if (x < 0 || y < 0 || x >= m_ || y >= m_) throw ContractViolation("vertex out of range");
  if (rank < 0 || rank >= table_->order()) throw ContractViolation("weight out of range");
  if (x == y && rank != 0) throw ContractViolation("diagonal weights must be zero");
  weights_[static_cast<std::size_t>(x * m_ + y)] = rank;
}

std::vector<std::pair<int, int>> support_graph(const WeightedDigraph& w) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < w.vertex_count(); ++x) {
    for (int y = 0; y < w.vertex_count(); ++y) {
      if (w.rank(x, y) != 0) edges.emplace_back(x, y);
    }
  }
  return edges;
}

bool is_indecomposable(const WeightedDigraph& w) {
  std::vector<int> column;
  for (int y = 0; y < w.vertex_count(); ++y) {
    column.clear();
    for (int x = 0; x < w.vertex_count(); ++x) column.push_back(w.rank(x, y));
    if (!w.table().generates(column)) return false;
  }
  return true;
}

WeightedDigraph flip(const WeightedDigraph& w, const FlipAssignment& sigma) {
  if (sigma.size() != static_cast<std::size_t>(w.vertex_count())) {
    throw ContractViolation("flip assignment has the wrong length");
  }
  WeightedDigraph out(w.vertex_count(), w.group());
  for (int y = 0; y < w.vertex_count(); ++y) {
    const std::size_t s = sigma[static_cast<std::size_t>(y)];
    if (s >= w.table().automorphism_count()) throw ContractViolation("flip index out of range");
    for (int x = 0; x < w.vertex_count(); ++x) out.set_rank(x, y, w.table().apply(s, w.rank(x, y)));
  }
  return out;
}

WeightedDigraph relabel(const WeightedDigraph& w, const Permutation& f) {
  if (f.degree() != w.vertex_count()) throw ContractViolation("relabel: degree mismatch");
  WeightedDigraph out(w.vertex_count(), w.group());
  for (int x = 0; x < w.vertex_count(); ++x) {
    for (int y = 0; y < w.vertex_count(); ++y) out.set_rank(f(x), f(y), w.rank(x, y));
  }
  return out;
}

bool is_weak_isomorphism(const WeightedDigraph& from, const WeightedDigraph& to, const WeakIso& iso) {
  const int m = from.vertex_count();
  if (to.vertex_count() != m || !(from.group() == to.group())) return false;
  if (iso.f.degree() != m || iso.sigma.size() != static_cast<std::size_t>(m)) return false;
  for (int y = 0; y < m; ++y) {
    const std::size_t s = iso.sigma[static_cast<std::size_t>(y)];
    if (s >= from.table().automorphism_count()) return false;
    for (int x = 0; x < m; ++x) {
      if (to.rank(iso.f(x), iso.f(y)) != from.table().apply(s, from.rank(x, y))) return false;
    }
  }
  return true;
}

namespace {

// Weak-isomorphism invariant of a vertex: in/out degree, incoming column
// multiset minimized over Aut(A), multiset of Aut-classes of outgoing weights.
std::vector<int> vertex_invariant(const WeightedDigraph& w, int v) {
  const int m = w.vertex_count();
  const GroupTable& t = w.table();
  std::vector<int> inv;
  int in_degree = 0;
  int out_degree = 0;
  for (int x = 0; x < m; ++x) {
    in_degree += w.rank(x, v) != 0;
    out_degree += w.rank(v, x) != 0;
  }
  inv.push_back(in_degree);
  inv.push_back(out_degree);
  std::vector<int> best;
  for (std::size_t a = 0; a < t.automorphism_count(); ++a) {
    std::vector<int> column;
    for (int x = 0; x < m; ++x) column.push_back(t.apply(a, w.rank(x, v)));
    std::sort(column.begin(), column.end());
    if (best.empty() || column < best) best = std::move(column);
  }
  inv.insert(inv.end(), best.begin(), best.end());
  std::vector<int> out_classes;
  for (int y = 0; y < m; ++y) out_classes.push_back(t.automorphism_class(w.rank(v, y)));
  std::sort(out_classes.begin(), out_classes.end());
  inv.insert(inv.end(), out_classes.begin(), out_classes.end());
  return inv;
}

std::vector<std::vector<int>> vertex_invariants(const WeightedDigraph& w) {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < w.vertex_count(); ++v) out.push_back(vertex_invariant(w, v));
  return out;
}

// Backtracking over vertex images. For every source column y we keep the set
// of automorphisms still compatible with the pairs fixed so far; a column
// whose set empties kills the branch.
class WeakSearch {
 public:
  using Leaf = std::function<bool(const std::vector<int>&, const FlipAssignment&)>;

  WeakSearch(const WeightedDigraph& a, const WeightedDigraph& b, bool strict, NodeCounter& counter)
      : a_(a), b_(b), m_(a.vertex_count()), table_(a.table()), strict_(strict), counter_(counter) {
    const int order = table_.order();
    if (order > 1024) throw UnsupportedSize("weak isomorphism search supports |A| <= 1024");
    auts_ = table_.automorphism_count();
    words_ = (auts_ + 63) / 64;
    maps_to_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order) * words_, 0);
    for (std::size_t k = 0; k < auts_; ++k) {
      for (int r = 0; r < order; ++r) {
        const int s = table_.apply(k, r);
        maps_to_[(static_cast<std::size_t>(r) * static_cast<std::size_t>(order) + static_cast<std::size_t>(s)) * words_ + k / 64] |=
            std::uint64_t{1} << (k % 64);
      }
    }
    inv_a_ = vertex_invariants(a);
    inv_b_ = vertex_invariants(b);
  }

  bool compatible() const {
    auto sa = inv_a_;
    auto sb = inv_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  /// Calls leaf for each complete weak isomorphism until it returns true.
  /// Returns whether some leaf returned true.
  bool run(std::optional<std::pair<int, int>> first, const Leaf& leaf) {
    order_ = vertex_order(first ? first->first : 0);
    first_target_ = first ? first->second : -1;
    State s;
    s.f.assign(static_cast<std::size_t>(m_), -1);
    s.finv.assign(static_cast<std::size_t>(m_), -1);
    s.masks.assign(static_cast<std::size_t>(m_) * words_, 0);
    for (int y = 0; y < m_; ++y) {
      std::uint64_t* mask = &s.masks[static_cast<std::size_t>(y) * words_];
      if (strict_) {
        mask[0] = 1;
      } else {
        for (std::size_t k = 0; k < auts_; ++k) mask[k / 64] |= std::uint64_t{1} << (k % 64);
      }
    }
    return dfs(s, 0, leaf);
  }

 private:
  struct State {
    std::vector<int> f, finv;
    std::vector<std::uint64_t> masks;
  };

  std::vector<int> vertex_order(int start) const {
    std::vector<int> order;
    if (m_ == 0) return order;
    std::vector<char> placed(static_cast<std::size_t>(m_), 0);
    std::vector<int> links(static_cast<std::size_t>(m_), 0);
    int next = start;
    for (;;) {
      order.push_back(next);
      placed[static_cast<std::size_t>(next)] = 1;
      if (order.size() == static_cast<std::size_t>(m_)) break;
      for (int v = 0; v < m_; ++v) {
        links[static_cast<std::size_t>(v)] += (a_.rank(next, v) != 0) + (a_.rank(v, next) != 0);
      }
      next = -1;
      for (int v = 0; v < m_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (next == -1 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(next)]) next = v;
      }
    }
    return order;
  }

  bool restrict(State& s, int column, int from_rank, int to_rank) const {
    const std::uint64_t* allowed =
        &maps_to_[(static_cast<std::size_t>(from_rank) * static_cast<std::size_t>(table_.order()) +
                   static_cast<std::size_t>(to_rank)) * words_];
    std::uint64_t* mask = &s.masks[static_cast<std::size_t>(column) * words_];
    bool any = false;
    for (std::size_t i = 0; i < words_; ++i) {
      mask[i] &= allowed[i];
      any = any || mask[i] != 0;
    }
    return any;
  }

  bool assign(State& s, std::size_t depth, int x, int u) const {
    if (inv_a_[static_cast<std::size_t>(x)] != inv_b_[static_cast<std::size_t>(u)]) return false;
    s.f[static_cast<std::size_t>(x)] = u;
    s.finv[static_cast<std::size_t>(u)] = x;
    for (std::size_t i = 0; i <= depth; ++i) {
      const int y = order_[i];
      const int fy = s.f[static_cast<std::size_t>(y)];
      if (!restrict(s, y, a_.rank(x, y), b_.rank(u, fy))) return false;
      if (!restrict(s, x, a_.rank(y, x), b_.rank(fy, u))) return false;
    }
    return true;
  }

  bool dfs(const State& s, std::size_t depth, const Leaf& leaf) {
    counter_.tick();
    if (depth == static_cast<std::size_t>(m_)) {
      FlipAssignment sigma(static_cast<std::size_t>(m_));
      for (int y = 0; y < m_; ++y) {
        const std::uint64_t* mask = &s.masks[static_cast<std::size_t>(y) * words_];
        for (std::size_t i = 0; i < words_; ++i) {
          if (mask[i] != 0) {
            sigma[static_cast<std::size_t>(y)] = i * 64 + static_cast<std::size_t>(std::countr_zero(mask[i]));
            break;
          }
        }
      }
      return leaf(s.f, sigma);
    }
    const int x = order_[depth];
    for (int u = 0; u < m_; ++u) {
      if (depth == 0 && first_target_ >= 0 && u != first_target_) continue;
      if (s.finv[static_cast<std::size_t>(u)] != -1) continue;
      State next = s;
      if (!assign(next, depth, x, u)) continue;
      if (dfs(next, depth + 1, leaf)) return true;
    }
    return false;
  }

  const WeightedDigraph& a_;
  const WeightedDigraph& b_;
  int m_;
  const GroupTable& table_;
  bool strict_;
  NodeCounter& counter_;
  std::size_t auts_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> maps_to_;
  std::vector<std::vector<int>> inv_a_, inv_b_;
  std::vector<int> order_;
  int first_target_ = -1;
};

std::vector<Permutation> enumerate_projections(const WeightedDigraph& w, bool strict,
                                               SearchBudget budget, std::string_view what) {
  NodeCounter counter(budget, what);
  WeakSearch search(w, w, strict, counter);
  std::vector<Permutation> found;
  search.run(std::nullopt, [&](const std::vector<int>& f, const FlipAssignment&) {
    found.emplace_back(f);
    return false;
  });
  return found;
}

}  // namespace

std::optional<WeakIso> weak_isomorphism(const WeightedDigraph& a, const WeightedDigraph& b,
                                        SearchBudget budget) {
  if (a.vertex_count() != b.vertex_count() || !(a.group() == b.group())) return std::nullopt;
  NodeCounter counter(budget, "weak isomorphism search");
  WeakSearch search(a, b, false, counter);
  if (!search.compatible()) return std::nullopt;
  std::optional<WeakIso> result;
  search.run(std::nullopt, [&](const std::vector<int>& f, const FlipAssignment& sigma) {
    result = WeakIso{Permutation(f), sigma};
    return true;
  });
  return result;
}

PermGroup weak_automorphism_projections(const WeightedDigraph& w, SearchBudget budget) {
  return PermGroup::from_elements(w.vertex_count(),
                                  enumerate_projections(w, false, budget, "weak automorphism search"));
}

PermGroup a_automorphisms(const WeightedDigraph& w, SearchBudget budget) {
  return PermGroup::from_elements(w.vertex_count(),
                                  enumerate_projections(w, true, budget, "A-automorphism search"));
}

bool is_flip_homogeneous(const WeightedDigraph& w, SearchBudget budget) {
  if (!is_indecomposable(w)) throw ContractViolation("is_flip_homogeneous: weight is not indecomposable");
  const int m = w.vertex_count();
  if (m <= 1) return true;
  NodeCounter counter(budget, "flip homogeneity search");
  WeakSearch search(w, w, false, counter);
  std::vector<Permutation> gens;
  std::vector<char> reached(static_cast<std::size_t>(m), 0);
  reached[0] = 1;
  for (int t = 1; t < m; ++t) {
    if (reached[static_cast<std::size_t>(t)]) continue;
    std::optional<Permutation> hit;
    search.run(std::make_pair(0, t), [&](const std::vector<int>& f, const FlipAssignment&) {
      hit = Permutation(f);
      return true;
    });
    if (!hit) return false;
    gens.push_back(std::move(*hit));
    for (int p : orbit_of(PermGroup(m, gens), 0)) reached[static_cast<std::size_t>(p)] = 1;
  }
  return true;
}

CanonicalForm weak_canonical_form(const WeightedDigraph& w) {
  const int m = w.vertex_count();
  const GroupTable& t = w.table();
  if (support_graph(w).empty()) {
    std::vector<int> key(static_cast<std::size_t>(m * m + 1), 0);
    key[0] = m;
    return CanonicalForm{std::move(key), WeightedDigraph(m, w.group())};
  }
  const auto invariants = vertex_invariants(w);
  std::vector<int> base(static_cast<std::size_t>(m));
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](int a, int b) {
    return invariants[static_cast<std::size_t>(a)] < invariants[static_cast<std::size_t>(b)];
  });
  // cells: maximal runs of equal invariants in `base`
  std::vector<std::pair<int, int>> cells;
  double permutations = 1;
  for (int i = 0; i < m;) {
    int j = i + 1;
    while (j < m && invariants[static_cast<std::size_t>(base[static_cast<std::size_t>(j)])] ==
                        invariants[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
      ++j;
    }
    cells.emplace_back(i, j);
    for (int k = 2; k <= j - i; ++k) permutations *= k;
    i = j;
  }
  if (permutations > 1e7) throw UnsupportedSize("canonical form: too many vertex orderings");

  std::vector<int> best;
  std::vector<int> candidate(static_cast<std::size_t>(m * m));
  std::vector<int> column(static_cast<std::size_t>(m));
  std::vector<int> best_column(static_cast<std::size_t>(m));
  std::vector<int> perm = base;
  std::function<void(std::size_t)> walk = [&](std::size_t cell) {
    if (cell == cells.size()) {
      bool still_equal = !best.empty();
      for (int j = 0; j < m; ++j) {
        bool have = false;
        for (std::size_t a = 0; a < t.automorphism_count(); ++a) {
          for (int i = 0; i < m; ++i) {
            column[static_cast<std::size_t>(i)] =
                t.apply(a, w.rank(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
          }
          if (!have || column < best_column) {
            best_column = column;
            have = true;
          }
        }
        std::copy(best_column.begin(), best_column.end(), candidate.begin() + j * m);
        if (still_equal) {
          const auto cmp = std::lexicographical_compare_three_way(
              candidate.begin() + j * m, candidate.begin() + (j + 1) * m, best.begin() + j * m,
              best.begin() + (j + 1) * m);
          if (cmp > 0) return;  // already worse than the best
          if (cmp < 0) still_equal = false;
        }
      }
      if (best.empty() || candidate < best) best = candidate;
      return;
    }
    const auto [lo, hi] = cells[cell];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      walk(cell + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  walk(0);

  WeightedDigraph rep(m, w.group());
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) rep.set_rank(i, j, best[static_cast<std::size_t>(j * m + i)]);
  }
  std::vector<int> key{m};
  key.insert(key.end(), best.begin(), best.end());
  return CanonicalForm{std::move(key), std::move(rep)};
}

std::vector<int> circulant_canonical(const std::vector<int>& s, int p) {
  if (!is_prime(p)) throw ContractViolation("circulant_canonical: modulus is not prime");
  for (int v : s) {
    if (v <= 0 || v >= p) throw ContractViolation("circulant_canonical: elements must lie in 1..p-1");
  }
  std::vector<int> best;
  bool have = false;
  for (int k = 1; k < p; ++k) {
    std::vector<int> image;
    for (int v : s) image.push_back(v * k % p);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (!have || image < best) {
      best = std::move(image);
      have = true;
    }
  }
  return best;
}

PermGroup digraph_automorphisms(int m, const std::vector<std::pair<int, int>>& edges) {
  WeightedDigraph w(m, AbelianGroup::cyclic(2));
  for (const auto& [x, y] : edges) w.set_rank(x, y, 1);
  return a_automorphisms(w);
}

namespace {

std::vector<std::pair<int, int>> canonical_edges(int m, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool have = false;
  do {
    std::vector<std::pair<int, int>> image;
    for (const auto& [x, y] : edges) image.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
    std::sort(image.begin(), image.end());
    if (!have || image < best) {
      best = std::move(image);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Regular permutation representations: rows are the left translations of
// each group element, so Cayley digraphs are {(g, g*s)}.
std::vector<std::vector<int>> regular_groups_products(int m, int which) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  if (which == 0) {
    for (int g = 0; g < m; ++g)
      for (int s = 0; s < m; ++s) mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)] = (g + s) % m;
  } else if (which == 1) {  // Z2 x Z2
    for (int g = 0; g < m; ++g)
      for (int s = 0; s < m; ++s) mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)] = g ^ s;
  } else {  // S3 acting on itself
    std::vector<std::vector<int>> elems;
    std::vector<int> p{0, 1, 2};
    do elems.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (int g = 0; g < 6; ++g) {
      for (int s = 0; s < 6; ++s) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = elems[static_cast<std::size_t>(g)][static_cast<std::size_t>(elems[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)])];
        mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)] =
            static_cast<int>(std::find(elems.begin(), elems.end(), c) - elems.begin());
      }
    }
  }
  return mul;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> vertex_transitive_digraphs(int m) {
  if (m < 1 || m > 6) throw UnsupportedSize("vertex_transitive_digraphs supports 1 <= m <= 6");
  std::vector<int> kinds{0};
  if (m == 4) kinds.push_back(1);
  if (m == 6) kinds.push_back(2);
  std::set<std::pair<std::size_t, std::vector<std::pair<int, int>>>> found;
  for (int kind : kinds) {
    const auto mul = regular_groups_products(m, kind);
    // element 0 is the identity in all three labelings
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int s = 1; s < m; ++s) {
        if (!(mask >> (s - 1) & 1u)) continue;
        for (int g = 0; g < m; ++g) edges.emplace_back(g, mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)]);
      }
      auto canon = canonical_edges(m, edges);
      found.emplace(canon.size(), std::move(canon));
    }
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& [size, edges] : found) out.push_back(edges);
  return out;
}

}  // namespace quandles
