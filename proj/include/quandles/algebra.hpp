#pragma once

// Finite abelian groups, permutations and small permutation groups.
//
// Abelian groups are given by invariant factors m_1 | m_2 | ... | m_k and
// their elements by residue vectors. Every element also has a canonical
// rank: its position in lexicographic residue order. Most of the library
// works on ranks and uses GroupTable for arithmetic.
//
// Permutation groups are held by generators; the full element set is
// materialized lazily, once, on first request. Orbits, transitivity and
// commutativity only look at generators, so they also work for groups far
// too large to enumerate.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandles/errors.hpp"

namespace quandles {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;
inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

struct GroupElement {
  std::vector<int> residues;

  auto operator<=>(const GroupElement&) const = default;
};

class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;
  /// Throws ContractViolation unless every modulus is >= 2 and divides the next.
  explicit AbelianGroup(std::vector<int> moduli);

  /// Z_n; the trivial group for n == 1.
  static AbelianGroup cyclic(int n);

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  bool is_trivial() const noexcept { return moduli_.empty(); }
  bool is_cyclic() const noexcept { return moduli_.size() <= 1; }

  GroupElement zero() const;
  bool contains(const GroupElement& a) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;

  std::size_t rank_of(const GroupElement& a) const;
  GroupElement element(std::size_t rank) const;

  /// "1", "Z6", "Z2xZ2".
  std::string name() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }
  friend auto operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ <=> b.moduli_;
  }

 private:
  std::vector<int> moduli_;
  std::size_t order_ = 1;
};

/// Every abelian group of the given order, as invariant factors, in
/// lexicographic order of the moduli list.
std::vector<AbelianGroup> abelian_groups_of_order(int order);

/// All elements in lexicographic residue order (index = canonical rank).
std::vector<GroupElement> group_elements(const AbelianGroup& group,
                                         std::size_t cap = kDefaultElementCap);

class Permutation {
 public:
  Permutation() = default;
  /// Throws ContractViolation unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Cycle notation, e.g. from_cycles(5, {{0, 1, 2}}).
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::size_t fixed_points() const;
  /// Sorted cycle lengths, including fixed points.
  std::vector<int> cycle_type() const;
  /// Cycle notation without fixed points; "()" for the identity.
  std::string to_string() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::size_t cap = kDefaultClosureCap);

  /// Group whose element set is already known to be closed; generators are
  /// taken to be the elements themselves.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Sorted element list, computed on first use. Throws EnumerationTooLarge
  /// when the group is bigger than the cap.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;

 private:
  struct Cache;
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::size_t cap_ = kDefaultClosureCap;
  std::shared_ptr<Cache> cache_;
};

/// Breadth-first closure; the returned group has its elements materialized.
PermGroup closure(std::vector<Permutation> generators, int degree,
                  std::size_t cap = kDefaultClosureCap);

bool is_transitive(const PermGroup& group);
bool is_abelian(const PermGroup& group);

/// Orbits sorted ascending, ordered by minimum element.
std::vector<std::vector<int>> orbits(const PermGroup& group);
std::vector<int> orbit_of(const PermGroup& group, int point);

PermGroup stabilizer(const PermGroup& group, int point);

std::vector<Permutation> elements_of_order(const PermGroup& group, std::size_t k);

/// Invariant-factor decomposition of an abelian permutation group together
/// with an explicit isomorphism. `coordinates[i]` is the residue vector of
/// `group.elements()[i]`.
struct AbelianStructure {
  AbelianGroup group;
  std::vector<GroupElement> coordinates;
  std::vector<Permutation> elements;

  const GroupElement& coordinates_of(const Permutation& g) const;
  const Permutation& element_at(const GroupElement& a) const;
};

AbelianStructure abelian_invariants(const PermGroup& group);

/// Every automorphism of the group, written as a permutation of element
/// ranks. Sorted by image array, so the identity comes first.
std::vector<Permutation> group_automorphisms(const AbelianGroup& group,
                                             std::size_t cap = kDefaultElementCap);

/// Rank-level arithmetic for one abelian group, computed once and shared.
class GroupTable {
 public:
  explicit GroupTable(const AbelianGroup& group);

  const AbelianGroup& group() const noexcept { return group_; }
  int order() const noexcept { return order_; }
  int add(int a, int b) const { return sum_[static_cast<std::size_t>(a * order_ + b)]; }
  int negate(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const { return element_order_[static_cast<std::size_t>(a)]; }

  const std::vector<Permutation>& automorphisms() const noexcept { return automorphisms_; }
  std::size_t automorphism_count() const noexcept { return automorphisms_.size(); }
  int apply(std::size_t automorphism, int a) const {
    return automorphisms_[automorphism](a);
  }
  /// Index of the identity automorphism.
  static constexpr std::size_t identity_automorphism = 0;
  std::size_t inverse_automorphism(std::size_t automorphism) const;
  /// Index of a ∘ b.
  std::size_t compose_automorphisms(std::size_t a, std::size_t b) const;

  /// Id of the Aut(A)-orbit containing a; ids are ordered by smallest member.
  int automorphism_class(int a) const { return aut_class_[static_cast<std::size_t>(a)]; }

  /// Size of the subgroup generated by the given ranks.
  int span_size(std::span<const int> generators) const;
  bool generates(std::span<const int> generators) const {
    return span_size(generators) == order_;
  }

 private:
  AbelianGroup group_;
  int order_;
  std::vector<int> sum_;
  std::vector<int> neg_;
  std::vector<int> element_order_;
  std::vector<Permutation> automorphisms_;
  std::vector<int> aut_class_;
};

/// Shared table for a group (cached per invariant-factor list).
std::shared_ptr<const GroupTable> group_table(const AbelianGroup& group);

std::size_t gcd_size(std::size_t a, std::size_t b);
std::size_t lcm_size(std::size_t a, std::size_t b);
bool is_prime(long long n);

}  // namespace quandles
