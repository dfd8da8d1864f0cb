#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quandles {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration (group elements, closure, quandle order) would exceed its cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

/// A backtracking search ran out of nodes. Never a wrong answer, only no answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The quandle is outside the class handled here (non-abelian Inn, uneven orbits).
class NotInClass : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Indicates a bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

inline constexpr std::uint64_t kDefaultSearchNodes = 100'000'000;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultSearchNodes;

  /// Default budget, overridden by the QUANDLE_BUDGET environment variable.
  static SearchBudget from_env();
};

// Counts search nodes against a budget; throws BudgetExceeded when spent.
class NodeCounter {
 public:
  NodeCounter(SearchBudget budget, std::string_view what)
      : limit_(budget.max_nodes), what_(what) {}

  void tick() {
    if (++used_ > limit_) {
      throw BudgetExceeded(std::string(what_) + ": search budget of " + std::to_string(limit_) +
                           " nodes exceeded");
    }
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string_view what_;
};

}  // namespace quandles
