#pragma once

// Good-coloring existence as propositional CNF. One variable per present edge,
// numbered by the edge's position among the present edges (var 1 is the first
// present edge); a true variable means the edge is red.

#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

struct Literal {
  int var = 1;
  bool negated = false;

  static constexpr Literal positive(int v) noexcept { return Literal{v, false}; }
  static constexpr Literal negative(int v) noexcept { return Literal{v, true}; }

  constexpr Literal operator~() const noexcept { return Literal{var, !negated}; }
  constexpr int dimacs() const noexcept { return negated ? -var : var; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  /// var_map[v - 1] is the edge behind variable v. Variables past
  /// var_map.size() are auxiliary (symmetry-breaking counters).
  std::vector<EdgePair> var_map;

  int edge_var_count() const noexcept { return static_cast<int>(var_map.size()); }
};

struct EncodeOptions {
  /// Require non-increasing red degree along the vertex order. Only sound on
  /// deletion-free graphs, where every vertex permutation is an automorphism.
  bool degree_ordering = false;
};

/// Red-blocking clauses for every s-clique (in k_subsets order), then
/// blue-blocking clauses for every t-clique. Subsets spanning a deleted edge
/// contribute nothing. s == 1 or t == 1 emits empty clauses verbatim.
CnfFormula encode(const DeletedEdgeGraph& g, int s, int t, const EncodeOptions& options = {});

/// assignment[v - 1] is the value of variable v.
using Assignment = std::vector<bool>;

/// Red iff the edge's variable is true. Extra (auxiliary) entries are ignored;
/// a short assignment throws InvalidInputError.
EdgeColoring decode(const Assignment& assignment, const DeletedEdgeGraph& g);

bool satisfies(const CnfFormula& f, const Assignment& assignment);

/// Throws InvalidInputError for out-of-range variables, repeated variables
/// in a clause, or a var_map that does not fit num_vars.
void validate(const CnfFormula& f);

/// DIMACS CNF text with "c var" comments documenting the edge map. LF line
/// endings, byte-deterministic.
std::string export_dimacs(const CnfFormula& f);

}  // namespace ramsey
