#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge with a repeated or out-of-range endpoint.
class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed formulas, partial assignments, colorings that violate a
/// precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The solver ran out of decisions before reaching a verdict. This is never
/// an UNSAT answer.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(int n, std::uint64_t budget)
      : Error("decision budget of " + std::to_string(budget) + " exceeded at n = " +
              std::to_string(n)),
        n_(n),
        budget_(budget) {}

  int n() const noexcept { return n_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  int n_;
  std::uint64_t budget_;
};

/// A bounded search exhausted its range without finding an answer.
class NotFoundBelowError : public Error {
 public:
  explicit NotFoundBelowError(int bound, const std::string& what)
      : Error(what), bound_(bound) {}

  int bound() const noexcept { return bound_; }

 private:
  int bound_;
};

/// Raised when a constructed coloring fails its own verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey
