#pragma once

#include <cstdint>

#include "ramsey/cnf.hpp"

namespace ramsey {

inline constexpr std::uint64_t kDefaultDecisionBudget = 10'000'000;

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  Assignment model;  // total over num_vars when status == Sat, empty otherwise
  SolveStats stats;
};

/// Complete, deterministic DPLL: unit propagation over two watched literals,
/// chronological backtracking, branching on the lowest unassigned variable
/// with true tried first. More than `budget` decisions yields
/// BudgetExceeded. Throws InvalidInputError for a malformed formula.
SolveResult solve(const CnfFormula& f, std::uint64_t budget = kDefaultDecisionBudget);

}  // namespace ramsey
