#include "quandles/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace quandles {

// ---------------------------------------------------------------------------
// SearchBudget

SearchBudget SearchBudget::from_env() {
  SearchBudget budget;
  if (const char* env = std::getenv("QUANDLE_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) budget.max_nodes = value;
  }
  return budget;
}

// ---------------------------------------------------------------------------
// Number theory helpers

std::size_t gcd_size(std::size_t a, std::size_t b) { return std::gcd(a, b); }
std::size_t lcm_size(std::size_t a, std::size_t b) { return a / std::gcd(a, b) * b; }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 2) throw ContractViolation("abelian group: moduli must be >= 2");
    if (i > 0 && moduli_[i] % moduli_[i - 1] != 0) {
      throw ContractViolation("abelian group: moduli must form a divisibility chain");
    }
    order_ *= static_cast<std::size_t>(moduli_[i]);
  }
}

AbelianGroup AbelianGroup::cyclic(int n) {
  if (n < 1) throw ContractViolation("cyclic group order must be positive");
  return n == 1 ? AbelianGroup() : AbelianGroup({n});
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<int>(rank(), 0)}; }

bool AbelianGroup::contains(const GroupElement& a) const {
  if (a.residues.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) return false;
  }
  return true;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    out.residues[i] = (a.residues[i] + b.residues[i]) % moduli_[i];
  }
  return out;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  GroupElement out = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    out.residues[i] = (moduli_[i] - a.residues[i]) % moduli_[i];
  }
  return out;
}

std::size_t AbelianGroup::rank_of(const GroupElement& a) const {
  if (!contains(a)) throw ContractViolation("element does not belong to " + name());
  std::size_t r = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    r = r * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(a.residues[i]);
  }
  return r;
}

GroupElement AbelianGroup::element(std::size_t r) const {
  if (r >= order_) throw ContractViolation("element rank out of range");
  GroupElement out = zero();
  for (std::size_t i = rank(); i-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    out.residues[i] = static_cast<int>(r % m);
    r /= m;
  }
  return out;
}

std::string AbelianGroup::name() const {
  if (moduli_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z' + std::to_string(moduli_[i]);
  }
  return out;
}

std::vector<AbelianGroup> abelian_groups_of_order(int order) {
  if (order < 1) throw ContractViolation("group order must be positive");
  std::vector<std::vector<int>> lists;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int previous) {
    if (remaining == 1) {
      lists.push_back(current);
      return;
    }
    for (int m = 2; m <= remaining; ++m) {
      if (remaining % m != 0 || m % previous != 0) continue;
      current.push_back(m);
      extend(remaining / m, m);
      current.pop_back();
    }
  };
  extend(order, 1);
  std::sort(lists.begin(), lists.end());
  std::vector<AbelianGroup> groups;
  groups.reserve(lists.size());
  for (auto& moduli : lists) groups.emplace_back(std::move(moduli));
  return groups;
}

std::vector<GroupElement> group_elements(const AbelianGroup& group, std::size_t cap) {
  if (group.order() > cap) {
    throw EnumerationTooLarge("group " + group.name() + " has more than " + std::to_string(cap) +
                              " elements");
  }
  std::vector<GroupElement> out;
  out.reserve(group.order());
  for (std::size_t r = 0; r < group.order(); ++r) out.push_back(group.element(r));
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw ContractViolation("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images.at(static_cast<std::size_t>(cycle[i])) = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (int length : cycle_type()) result = lcm_size(result, static_cast<std::size_t>(length));
  return result;
}

std::size_t Permutation::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<int>(i);
  return count;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw ContractViolation("composing permutations of different degree");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) {
    p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  }
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Cache {
  std::once_flag once;
  std::vector<Permutation> elements;
};

namespace {

std::vector<Permutation> close_under(const std::vector<Permutation>& generators, int degree,
                                     std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> list;
  list.push_back(Permutation::identity(degree));
  seen.insert(list.back());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& g : generators) {
      Permutation h = g * list[i];
      if (seen.insert(h).second) {
        if (list.size() >= cap) {
          throw EnumerationTooLarge("permutation group has more than " + std::to_string(cap) +
                                    " elements");
        }
        list.push_back(std::move(h));
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), cap_(cap), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw ContractViolation("generator degree does not match group degree");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });
  generators_ = std::move(generators);
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup group(degree, elements, std::max<std::size_t>(elements.size(), 1));
  std::call_once(group.cache_->once, [&] { group.cache_->elements = std::move(elements); });
  return group;
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::call_once(cache_->once, [this] { cache_->elements = close_under(generators_, degree_, cap_); });
  return cache_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), p);
}

PermGroup closure(std::vector<Permutation> generators, int degree, std::size_t cap) {
  PermGroup group(degree, std::move(generators), cap);
  group.elements();
  return group;
}

std::vector<int> orbit_of(const PermGroup& group, int point) {
  std::vector<char> seen(static_cast<std::size_t>(group.degree()), 0);
  std::vector<int> orbit{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : group.generators()) {
      const int image = g(orbit[i]);
      if (!seen[static_cast<std::size_t>(image)]) {
        seen[static_cast<std::size_t>(image)] = 1;
        orbit.push_back(image);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<int>> orbits(const PermGroup& group) {
  std::vector<std::vector<int>> out;
  std::vector<char> assigned(static_cast<std::size_t>(group.degree()), 0);
  for (int p = 0; p < group.degree(); ++p) {
    if (assigned[static_cast<std::size_t>(p)]) continue;
    auto orbit = orbit_of(group, p);
    for (int q : orbit) assigned[static_cast<std::size_t>(q)] = 1;
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const PermGroup& group) {
  if (group.degree() == 0) return true;
  return orbit_of(group, 0).size() == static_cast<std::size_t>(group.degree());
}

bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      for (int p = 0; p < group.degree(); ++p) {
        if (gens[i](gens[j](p)) != gens[j](gens[i](p))) return false;
      }
    }
  }
  return true;
}

PermGroup stabilizer(const PermGroup& group, int point) {
  if (point < 0 || point >= group.degree()) throw ContractViolation("stabilizer point out of range");
  std::vector<Permutation> fixing;
  for (const auto& g : group.elements()) {
    if (g(point) == point) fixing.push_back(g);
  }
  return PermGroup::from_elements(group.degree(), std::move(fixing));
}

std::vector<Permutation> elements_of_order(const PermGroup& group, std::size_t k) {
  std::vector<Permutation> out;
  for (const auto& g : group.elements()) {
    if (g.order() == k) out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Abelian structure recovery

const GroupElement& AbelianStructure::coordinates_of(const Permutation& g) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) throw ContractViolation("permutation is not in the group");
  return coordinates[static_cast<std::size_t>(it - elements.begin())];
}

const Permutation& AbelianStructure::element_at(const GroupElement& a) const {
  const GroupElement& wanted = a;
  // coordinates are a bijection onto the group; look the vector up directly.
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (coordinates[i] == wanted) return elements[i];
  }
  throw ContractViolation("residue vector is not in the group");
}

namespace {

// Invariant factors of an abelian group from its element orders: for each
// prime p, the number of elements killed by p^j determines the p-primary
// exponents, which are then recombined largest-with-largest.
std::vector<int> invariant_factors_from_orders(const std::vector<std::size_t>& orders,
                                               std::size_t group_order) {
  std::map<std::size_t, std::vector<int>> exponents_by_prime;
  std::size_t rest = group_order;
  for (std::size_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> log_counts{0};
    for (std::size_t power = p;; power *= p) {
      std::size_t killed = 0;
      for (std::size_t o : orders) killed += (power % o == 0);
      int log = 0;
      for (std::size_t c = killed; c > 1; c /= p) ++log;
      log_counts.push_back(log);
      if (killed == 0 || log == log_counts[log_counts.size() - 2]) break;
      if (power > group_order) break;
    }
    // number of cyclic p-factors with exponent >= j is log_counts[j] - log_counts[j-1]
    std::vector<int> at_least;
    for (std::size_t j = 1; j < log_counts.size(); ++j) {
      at_least.push_back(log_counts[j] - log_counts[j - 1]);
    }
    std::vector<int> exps;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int c = 0; c < at_least[j] - next; ++c) exps.push_back(static_cast<int>(j + 1));
    }
    std::sort(exps.rbegin(), exps.rend());
    exponents_by_prime[p] = std::move(exps);
  }
  std::size_t count = 0;
  for (const auto& [p, exps] : exponents_by_prime) count = std::max(count, exps.size());
  std::vector<int> factors(count, 1);
  for (const auto& [p, exps] : exponents_by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int e = 0; e < exps[i]; ++e) factors[i] *= static_cast<int>(p);
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

AbelianStructure abelian_invariants(const PermGroup& group) {
  if (!is_abelian(group)) throw ContractViolation("abelian_invariants: group is not abelian");
  const auto& elements = group.elements();
  const std::size_t n = elements.size();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);

  std::vector<std::size_t> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = elements[i].order();
  const std::vector<int> factors = invariant_factors_from_orders(orders, n);
  AbelianGroup abstract(factors);

  // Pick generators from the largest factor down; each new generator must
  // meet the span of the previous ones trivially. Backtracks if stuck.
  const std::size_t k = factors.size();
  std::vector<std::size_t> chosen(k);
  std::function<bool(std::size_t, std::vector<char>&)> choose =
      [&](std::size_t slot_from_top, std::vector<char>& span) -> bool {
    if (slot_from_top == k) return true;
    const std::size_t slot = k - 1 - slot_from_top;
    const auto wanted = static_cast<std::size_t>(factors[slot]);
    for (std::size_t c = 0; c < n; ++c) {
      if (orders[c] != wanted) continue;
      // <span> ∩ <c> trivial?
      bool meets = false;
      std::vector<std::size_t> powers{index.at(Permutation::identity(group.degree()))};
      Permutation power = elements[c];
      for (std::size_t j = 1; j < wanted; ++j) {
        const std::size_t idx = index.at(power);
        if (span[idx]) {
          meets = true;
          break;
        }
        powers.push_back(idx);
        power = elements[c] * power;
      }
      if (meets) continue;
      std::vector<char> extended(n, 0);
      for (std::size_t s = 0; s < n; ++s) {
        if (!span[s]) continue;
        for (std::size_t idx : powers) extended[index.at(elements[s] * elements[idx])] = 1;
      }
      chosen[slot] = c;
      if (choose(slot_from_top + 1, extended)) return true;
    }
    return false;
  };
  std::vector<char> span(n, 0);
  span[index.at(Permutation::identity(group.degree()))] = 1;
  if (!choose(0, span)) throw InternalConsistency("abelian_invariants: no basis found");

  AbelianStructure out{abstract, std::vector<GroupElement>(n), elements};
  for (std::size_t r = 0; r < abstract.order(); ++r) {
    GroupElement a = abstract.element(r);
    Permutation g = Permutation::identity(group.degree());
    for (std::size_t i = 0; i < k; ++i) {
      for (int e = 0; e < a.residues[i]; ++e) g = elements[chosen[i]] * g;
    }
    out.coordinates[index.at(g)] = std::move(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms of an abelian group

std::vector<Permutation> group_automorphisms(const AbelianGroup& group, std::size_t cap) {
  const auto elements = group_elements(group, cap);
  const std::size_t k = group.rank();
  // image candidates for basis vector i: elements killed by m_i
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < elements.size(); ++r) {
      bool killed = true;
      for (std::size_t j = 0; j < k; ++j) {
        if ((elements[r].residues[j] * group.moduli()[i]) % group.moduli()[j] != 0) killed = false;
      }
      if (killed) candidates[i].push_back(r);
    }
  }
  std::vector<Permutation> out;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    std::vector<int> images(elements.size());
    std::vector<char> hit(elements.size(), 0);
    bool bijective = true;
    for (std::size_t r = 0; r < elements.size() && bijective; ++r) {
      GroupElement image = group.zero();
      for (std::size_t i = 0; i < k; ++i) {
        const GroupElement& basis_image = elements[candidates[i][pick[i]]];
        for (std::size_t j = 0; j < k; ++j) {
          image.residues[j] =
              (image.residues[j] + elements[r].residues[i] * basis_image.residues[j]) %
              group.moduli()[j];
        }
      }
      const std::size_t ir = group.rank_of(image);
      if (hit[ir]) bijective = false;
      hit[ir] = 1;
      images[r] = static_cast<int>(ir);
    }
    if (bijective) out.emplace_back(std::move(images));

    std::size_t i = 0;
    while (i < k && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(const AbelianGroup& group)
    : group_(group), order_(static_cast<int>(group.order())) {
  if (group.order() > 4096) {
    throw UnsupportedSize("group tables are limited to groups of order <= 4096");
  }
  const auto n = static_cast<std::size_t>(order_);
  const auto elements = group_elements(group);
  sum_.resize(n * n);
  neg_.resize(n);
  element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      sum_[a * n + b] = static_cast<int>(group.rank_of(group.add(elements[a], elements[b])));
    }
    neg_[a] = static_cast<int>(group.rank_of(group.negate(elements[a])));
  }
  for (std::size_t a = 0; a < n; ++a) {
    int order = 1;
    for (int x = static_cast<int>(a); x != 0; x = add(x, static_cast<int>(a))) ++order;
    element_order_[a] = order;
  }
  automorphisms_ = group_automorphisms(group);
  aut_class_.assign(n, -1);
  int next_class = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (aut_class_[a] >= 0) continue;
    for (const auto& aut : automorphisms_) aut_class_[static_cast<std::size_t>(aut(static_cast<int>(a)))] = next_class;
    ++next_class;
  }
}

std::size_t GroupTable::inverse_automorphism(std::size_t automorphism) const {
  const Permutation inv = automorphisms_[automorphism].inverse();
  const auto it = std::lower_bound(automorphisms_.begin(), automorphisms_.end(), inv);
  return static_cast<std::size_t>(it - automorphisms_.begin());
}

std::size_t GroupTable::compose_automorphisms(std::size_t a, std::size_t b) const {
  const Permutation c = automorphisms_[a] * automorphisms_[b];
  const auto it = std::lower_bound(automorphisms_.begin(), automorphisms_.end(), c);
  return static_cast<std::size_t>(it - automorphisms_.begin());
}

int GroupTable::span_size(std::span<const int> generators) const {
  std::vector<char> in(static_cast<std::size_t>(order_), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : generators) {
      const int s = add(members[i], g);
      if (!in[static_cast<std::size_t>(s)]) {
        in[static_cast<std::size_t>(s)] = 1;
        members.push_back(s);
      }
    }
  }
  return static_cast<int>(members.size());
}

std::shared_ptr<const GroupTable> group_table(const AbelianGroup& group) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::shared_ptr<const GroupTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[group.moduli()];
  if (!slot) slot = std::make_shared<const GroupTable>(group);
  return slot;
}

}  // namespace quandles
