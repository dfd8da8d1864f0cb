#include "quandles/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

namespace quandles {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::trivial: return "trivial";
    case Provenance::two_orbit: return "two-orbit";
    case Provenance::prime_list: return "prime-list";
    case Provenance::brute: return "brute";
    case Provenance::orbital: return "orbital";
  }
  return "unknown";
}

WeightedDigraph shift_invariant_digraph(int p, const AbelianGroup& group, const WeightList& list) {
  if (list.values.size() != static_cast<std::size_t>(p - 1)) {
    throw ContractViolation("weight list must have p-1 entries");
  }
  WeightedDigraph w(p, group);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a != b) w.set_rank(a, b, list.values[static_cast<std::size_t>(((a - b) % p + p) % p - 1)]);
    }
  }
  return w;
}

namespace {

using Candidates = std::map<std::vector<int>, WeightedDigraph>;

void add_candidate(Candidates& out, const WeightedDigraph& w) {
  if (!is_indecomposable(w)) return;
  auto form = weak_canonical_form(w);
  out.try_emplace(std::move(form.key), std::move(form.representative));
}

// Splits [0, total) into chunks, canonicalizes each chunk's candidates on a
// worker, then merges. Keys determine representatives, so the merged map does
// not depend on scheduling.
template <class Make>
Candidates collect(std::uint64_t total, int jobs, Make make) {
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Candidates> parts(static_cast<std::size_t>(chunks));
  parallel_for(static_cast<std::size_t>(chunks), jobs, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min(total, lo + kChunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (auto w = make(i)) add_candidate(parts[c], *w);
    }
  });
  Candidates merged;
  for (auto& part : parts) merged.merge(part);
  return merged;
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Candidates prime_lists(int p, const AbelianGroup& group, int jobs) {
  const int k = static_cast<int>(group.order());
  const std::uint64_t total = power(static_cast<std::uint64_t>(k), p - 1);
  return collect(total, jobs, [&](std::uint64_t index) -> std::optional<WeightedDigraph> {
    WeightList list;
    for (int i = 0; i < p - 1; ++i) {
      list.values.push_back(static_cast<int>(index % static_cast<std::uint64_t>(k)));
      index /= static_cast<std::uint64_t>(k);
    }
    std::reverse(list.values.begin(), list.values.end());
    return shift_invariant_digraph(p, group, list);
  });
}

Candidates all_matrices(int m, const AbelianGroup& group, int jobs) {
  const int k = static_cast<int>(group.order());
  const int cells = m * (m - 1);
  if (cells * std::log2(static_cast<double>(k)) > 30) {
    throw UnsupportedSize("exhaustive weight enumeration is limited to 2^30 matrices");
  }
  const std::uint64_t total = power(static_cast<std::uint64_t>(k), cells);
  return collect(total, jobs, [&](std::uint64_t index) -> std::optional<WeightedDigraph> {
    WeightedDigraph w(m, group);
    for (int x = m - 1; x >= 0; --x) {
      for (int y = m - 1; y >= 0; --y) {
        if (x == y) continue;
        w.set_rank(x, y, static_cast<int>(index % static_cast<std::uint64_t>(k)));
        index /= static_cast<std::uint64_t>(k);
      }
    }
    return w;
  });
}

Candidates orbital_unions(int m, const AbelianGroup& group, int jobs) {
  const int k = static_cast<int>(group.order());
  Candidates merged;
  for (const auto& edges : vertex_transitive_digraphs(m)) {
    if (edges.empty()) continue;
    const double count = std::pow(static_cast<double>(k - 1), static_cast<double>(edges.size()));
    if (count > 1e8) throw UnsupportedSize("too many weight assignments on a vertex-transitive support");
    const std::uint64_t total = power(static_cast<std::uint64_t>(k - 1), static_cast<int>(edges.size()));
    auto part = collect(total, jobs, [&](std::uint64_t index) -> std::optional<WeightedDigraph> {
      WeightedDigraph w(m, group);
      for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        w.set_rank(it->first, it->second, 1 + static_cast<int>(index % static_cast<std::uint64_t>(k - 1)));
        index /= static_cast<std::uint64_t>(k - 1);
      }
      return w;
    });
    merged.merge(part);
  }
  return merged;
}

}  // namespace

ClassCatalog classify_order(int n, const ClassifyOptions& options) {
  if (n < 1) throw ContractViolation("classify_order: order must be positive");
  if (n > kMaxClassifyOrder) {
    throw UnsupportedSize("classify_order supports orders up to " + std::to_string(kMaxClassifyOrder));
  }
  ClassCatalog catalog;
  catalog.order = n;
  for (int m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    for (const AbelianGroup& group : abelian_groups_of_order(n / m)) {
      Candidates candidates;
      Provenance provenance;
      if (is_prime(m)) {
        candidates = prime_lists(m, group, options.jobs);
        provenance = m == 2 ? Provenance::two_orbit : Provenance::prime_list;
      } else if (m == 4) {
        candidates = all_matrices(m, group, options.jobs);
        provenance = Provenance::brute;
      } else if (m == 6) {
        candidates = orbital_unions(m, group, options.jobs);
        provenance = Provenance::orbital;
      } else {
        throw UnsupportedSize("no enumeration strategy for |X| = " + std::to_string(m));
      }
      std::vector<std::pair<std::vector<int>, WeightedDigraph>> list(candidates.begin(), candidates.end());
      std::vector<char> keep(list.size(), 0);
      parallel_for(list.size(), options.jobs, [&](std::size_t i) {
        keep[i] = is_flip_homogeneous(list[i].second, options.budget);
      });
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (keep[i]) catalog.entries.push_back(CatalogEntry{list[i].second, list[i].first, provenance});
      }
    }
  }
  // the trivial quandle: n isolated vertices, trivial group
  std::vector<int> key(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 1, 0);
  key[0] = n;
  catalog.entries.push_back(CatalogEntry{WeightedDigraph(n, AbelianGroup()), std::move(key), Provenance::trivial});
  return catalog;
}

BurnsideSum burnside_fixed_points(int p, int q) {
  if (!is_prime(p) || !is_prime(q)) throw ContractViolation("burnside_fixed_points: p and q must be prime");
  BurnsideSum out;
  out.group_order = static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(q - 1);
  for (int k = 1; k < p; ++k) {
    int t = 1;
    for (long long v = k; v % p != 1; v = v * k % p) ++t;
    const int cycles = (p - 1) / t;
    for (int u = 1; u < q; ++u) {
      long long ut = 1;
      for (int i = 0; i < t; ++i) ut = ut * u % q;
      const std::uint64_t per_cycle = ut == 1 ? static_cast<std::uint64_t>(q) : 1;
      const std::uint64_t term = power(per_cycle, cycles);
      out.terms.push_back(term);
      out.sum += term;
    }
  }
  if (out.sum % out.group_order != 0) throw InternalConsistency("Burnside sum is not divisible by the group order");
  return out;
}

std::uint64_t burnside_count(int p, int q) { return burnside_fixed_points(p, q).orbits(); }

std::uint64_t count_two_p(int p) {
  if (!is_prime(p) || p == 2) throw ContractViolation("count_two_p: p must be an odd prime");
  if (p > 61) throw UnsupportedSize("count_two_p: p > 61 overflows 64-bit arithmetic");
  std::uint64_t sum = 0;
  for (int i = 1; i < p; ++i) sum += std::uint64_t{1} << std::gcd(p - 1, i);
  if (sum % static_cast<std::uint64_t>(p - 1) != 0) throw InternalConsistency("count_two_p: sum not divisible");
  return 1 + sum / static_cast<std::uint64_t>(p - 1);
}

std::map<int, std::size_t> reproduce_table(int max_n, const ClassifyOptions& options) {
  if (max_n > kMaxClassifyOrder) {
    throw UnsupportedSize("reproduce_table supports orders up to " + std::to_string(kMaxClassifyOrder));
  }
  std::map<int, std::size_t> out;
  for (int n = 1; n <= max_n; ++n) out[n] = classify_order(n, options).count();
  return out;
}

}  // namespace quandles
