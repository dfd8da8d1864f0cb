#pragma once

// Finite quandles stored as Cayley tables: table[x][y] = s_x(y).

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "quandles/algebra.hpp"
#include "quandles/errors.hpp"

namespace quandles {

class Quandle {
 public:
  Quandle() = default;

  /// Wraps a row-major table without checking the axioms. Only for callers
  /// that guarantee them by construction; everyone else uses check_axioms.
  static Quandle from_trusted_table(int n, std::vector<int> table);

  static Quandle trivial(int n);
  /// s_x(y) = 2x - y mod n.
  static Quandle dihedral(int n);

  int order() const noexcept { return n_; }
  int operator()(int x, int y) const { return table_[static_cast<std::size_t>(x * n_ + y)]; }
  std::span<const int> row(int x) const {
    return std::span<const int>(table_).subspan(static_cast<std::size_t>(x * n_),
                                                static_cast<std::size_t>(n_));
  }
  std::vector<std::vector<int>> table() const;

  bool operator==(const Quandle&) const = default;

 private:
  int n_ = 0;
  std::vector<int> table_;
};

struct AxiomViolation {
  int axiom = 0;             // 1, 2 or 3
  std::vector<int> witness;  // x for Q1; x for Q2; x, y, z for Q3
  std::string message() const;
};

/// Throws ContractViolation if the table is not square or has entries
/// outside [0, n).
std::variant<Quandle, AxiomViolation> check_axioms(const std::vector<std::vector<int>>& table);

Permutation symmetry(const Quandle& q, int x);

/// Generated by the distinct point symmetries.
PermGroup inner_group(const Quandle& q);

bool is_connected(const Quandle& q);

/// f(s_x(y)) = s'_{f(x)}(f(y)) for all x, y.
bool is_homomorphism(const Quandle& from, const Quandle& to, const Permutation& f);

/// An automorphism with f(source) = target, if one exists.
std::optional<Permutation> find_automorphism(const Quandle& q, int source, int target,
                                             SearchBudget budget = SearchBudget::from_env());

/// Aut(Q) transitive. One search per target not already reached by Inn and
/// the automorphisms found so far.
bool is_homogeneous(const Quandle& q, SearchBudget budget = SearchBudget::from_env());

std::optional<Permutation> quandle_isomorphic(const Quandle& a, const Quandle& b,
                                              SearchBudget budget = SearchBudget::from_env());

}  // namespace quandles
