#include "ramsey/ramsey.hpp"

#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

void RamseyQuery::validate() const {
  if (s < 1 || t < 1) {
    throw InvalidParameterError("Ramsey query needs s, t >= 1 (got s=" + std::to_string(s) +
                                ", t=" + std::to_string(t) + ")");
  }
}

std::optional<EdgeColoring> good_coloring(int n, int s, int t, std::span<const EdgePair> deleted,
                                          const SearchOptions& options) {
  if (n < 1) throw InvalidParameterError("n must be at least 1");
  RamseyQuery{s, t}.validate();
  DeletedEdgeGraph g(n, {deleted.begin(), deleted.end()});
  EncodeOptions encoding;
  encoding.degree_ordering = options.degree_ordering && !g.has_deletions();
  const CnfFormula f = encode(g, s, t, encoding);
  SolveResult r = solve(f, options.budget);
  switch (r.status) {
    case SolveStatus::Unsat:
      return std::nullopt;
    case SolveStatus::BudgetExceeded:
      throw BudgetExceededError(n, options.budget);
    case SolveStatus::Sat:
      break;
  }
  EdgeColoring coloring = decode(r.model, g);
  // s == 1 or t == 1 always yields an empty clause, so a model here implies
  // s, t >= 2 and the verifier applies.
  if (const Verdict v = is_good(coloring, s, t); !v.good) {
    throw InternalError("solver model decodes to a coloring with a monochromatic clique");
  }
  return coloring;
}

RamseyResult ramsey_number(const RamseyQuery& q, int n_max, const SearchOptions& options) {
  q.validate();
  if (n_max < 1) throw InvalidParameterError("n_max must be at least 1");
  std::optional<EdgeColoring> previous;
  for (int n = 1; n <= n_max; ++n) {
    auto coloring = good_coloring(n, q.s, q.t, {}, options);
    if (!coloring) return RamseyResult{n, std::move(previous)};
    previous = std::move(coloring);
  }
  throw NotFoundBelowError(n_max, "r(" + std::to_string(q.s) + "," + std::to_string(q.t) + ") > " +
                                      std::to_string(n_max));
}

EdgeColoring extend_coloring(const EdgeColoring& coloring, VertexId duplicated, int s, int t) {
  const DeletedEdgeGraph& base = coloring.graph();
  if (base.has_deletions()) throw InvalidInputError("extend_coloring needs a coloring of a complete graph");
  const int old_p = base.vertex_count();
  if (duplicated < 0 || duplicated >= old_p) {
    throw InvalidParameterError("vertex " + std::to_string(duplicated) + " is not in K_" + std::to_string(old_p));
  }
  if (!is_good(coloring, s, t).good) throw InvalidInputError("input coloring is not good");

  const int p = old_p + 1;
  const VertexId twin = old_p;
  DeletedEdgeGraph g(p, {EdgePair::canonical(duplicated, twin)});

  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(g.present_edge_count()));
  for (const EdgePair& e : g.present_edges()) {
    if (e.v != twin) {
      colors.push_back(*coloring.color(e));
    } else {
      colors.push_back(*coloring.color(EdgePair::canonical(duplicated, e.u)));
    }
  }
  EdgeColoring out(std::move(g), std::move(colors));
  if (const Verdict v = is_good(out, s, t); !v.good) {
    throw InternalError("vertex duplication produced a " + std::string(to_string(v.witness->color)) +
                        " clique; the construction is broken");
  }
  return out;
}

DeletionResult min_deletions(const RamseyQuery& q, int p, int k_max, const SearchOptions& options) {
  q.validate();
  if (p < 2) throw InvalidParameterError("p must be at least 2");
  const int m = edge_count(p);
  if (k_max < 0 || k_max > m) {
    throw InvalidParameterError("k_max must lie in [0, " + std::to_string(m) + "]");
  }
  for (int k = 0; k <= k_max; ++k) {
    for (SubsetEnumerator it(m, k); !it.done(); it.advance()) {
      std::vector<EdgePair> deleted;
      deleted.reserve(static_cast<std::size_t>(k));
      for (int index : it.current()) deleted.push_back(index_to_edge(index, p));
      if (auto coloring = good_coloring(p, q.s, q.t, deleted, options)) {
        return DeletionResult{k, std::move(deleted), std::move(*coloring)};
      }
    }
  }
  throw NotFoundBelowError(k_max, "no deletion set of size <= " + std::to_string(k_max) + " makes K_" +
                                      std::to_string(p) + " colorable");
}

bool deletion_bound_check(const RamseyQuery& q, const DeletionResult& result, int p) {
  q.validate();
  return result.e >= 1 && result.e <= p - 1;
}

}  // namespace ramsey
