#pragma once

// Classification of homogeneous quandles with abelian Inn of small order,
// up to isomorphism, as weak-isomorphism classes of indecomposable
// flip-homogeneous weighted digraphs. Also the closed-form counts.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandles/algebra.hpp"
#include "quandles/parallel.hpp"
#include "quandles/wdigraph.hpp"

namespace quandles {

enum class Provenance { trivial, two_orbit, prime_list, brute, orbital };

std::string to_string(Provenance p);

struct CatalogEntry {
  WeightedDigraph digraph;  // canonical representative
  std::vector<int> key;     // weak_canonical_form key
  Provenance provenance;

  int vertex_count() const { return digraph.vertex_count(); }
  const AbelianGroup& group() const { return digraph.group(); }
};

struct ClassCatalog {
  int order = 0;
  std::vector<CatalogEntry> entries;

  std::size_t count() const { return entries.size(); }
};

struct ClassifyOptions {
  int jobs = 1;
  SearchBudget budget = SearchBudget::from_env();
};

inline constexpr int kMaxClassifyOrder = 15;

/// UnsupportedSize for n > 15.
ClassCatalog classify_order(int n, const ClassifyOptions& options = {});

/// Values (l_1, ..., l_{p-1}) with l_i = d(x_i, x_0), as ranks in A.
struct WeightList {
  std::vector<int> values;
};

/// d(x_a, x_b) = l_{a-b mod p}.
WeightedDigraph shift_invariant_digraph(int p, const AbelianGroup& group, const WeightList& list);

struct BurnsideSum {
  std::uint64_t sum = 0;
  std::uint64_t group_order = 0;
  /// Fixed-point counts per (k, u), k in Z_p^x outer, u in Z_q^x inner.
  std::vector<std::uint64_t> terms;

  std::uint64_t orbits() const { return sum / group_order; }
};

/// Z_p^x x Z_q^x acting on Z_q^{p-1}: indices by multiplication, values by scaling.
BurnsideSum burnside_fixed_points(int p, int q);
std::uint64_t burnside_count(int p, int q);

/// 1 + (1/(p-1)) sum_{i=1}^{p-1} 2^{gcd(p-1, i)}, for odd primes p.
std::uint64_t count_two_p(int p);

std::map<int, std::size_t> reproduce_table(int max_n, const ClassifyOptions& options = {});

}  // namespace quandles
