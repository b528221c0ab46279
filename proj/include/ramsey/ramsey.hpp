#pragma once

// Desk-scale Ramsey computations built on the CNF encoder and the DPLL
// solver: Ramsey numbers, the single-edge-deletion construction, and the
// minimal number of deletions that makes K_p colorable.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/cnf.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

/// Forbidden clique sizes: no red K_s, no blue K_t.
struct RamseyQuery {
  int s = 3;
  int t = 3;

  /// Throws InvalidParameterError unless s, t >= 1.
  void validate() const;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultDecisionBudget;  // per solver call
  /// Applied only to deletion-free instances.
  bool degree_ordering = false;
};

struct RamseyResult {
  int p = 0;
  /// Good coloring of K_{p-1}; absent when p == 1.
  std::optional<EdgeColoring> witness;
};

struct DeletionResult {
  int e = 0;
  std::vector<EdgePair> deleted;
  EdgeColoring coloring;
};

/// encode -> solve -> decode, with the decoded coloring re-verified. nullopt
/// means UNSAT. Throws BudgetExceededError (naming n) when the solver gives up.
std::optional<EdgeColoring> good_coloring(int n, int s, int t, std::span<const EdgePair> deleted = {},
                                          const SearchOptions& options = {});

/// Smallest n <= n_max such that K_n has no good coloring. Throws
/// NotFoundBelowError when every n <= n_max is colorable.
RamseyResult ramsey_number(const RamseyQuery& q, int n_max, const SearchOptions& options = {});

/// Vertex duplication. Adds vertex p-1 as a twin of `duplicated`: every new
/// edge (twin, Q) copies the color of (duplicated, Q), and the edge between the
/// twin and `duplicated` is deleted. Every clique of the result avoids one of
/// the twins, so it lies inside a copy of the input and the result is good
/// whenever the input is. The output is re-verified; a failure throws
/// InternalError.
///
/// Throws InvalidInputError when the input has deletions or is not good for
/// (s, t), InvalidParameterError when `duplicated` is not a vertex.
EdgeColoring extend_coloring(const EdgeColoring& coloring, VertexId duplicated, int s, int t);

/// Fewest deleted edges that make K_p colorable, searching k = 0..k_max and,
/// for each k, the k-subsets of edge indices in lexicographic order. The first
/// success is returned. Throws NotFoundBelowError past k_max.
DeletionResult min_deletions(const RamseyQuery& q, int p, int k_max, const SearchOptions& options = {});

/// 1 <= e <= p - 1, the range that holds when p is the Ramsey number.
bool deletion_bound_check(const RamseyQuery& q, const DeletionResult& result, int p);

}  // namespace ramsey
