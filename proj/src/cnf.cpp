#include "ramsey/cnf.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void add_blocking_clauses(CnfFormula& f, const DeletedEdgeGraph& g, int k, bool block_red) {
  const int p = g.vertex_count();
  for (SubsetEnumerator it(p, k); !it.done(); it.advance()) {
    const auto& subset = it.current();
    if (!subset_is_clique(g, subset)) continue;
    Clause clause;
    clause.reserve(subset.size() * (subset.size() - 1) / 2);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        const int var = g.present_rank(EdgePair{subset[i], subset[j]}) + 1;
        clause.push_back(block_red ? Literal::negative(var) : Literal::positive(var));
      }
    }
    f.clauses.push_back(std::move(clause));
  }
}

// Sequential counter per vertex: count[i][j] <=> at least j+1 of the first
// i+1 incident edges are red. The final row is then chained across vertices so
// red degree never increases with the vertex index.
void add_degree_ordering(CnfFormula& f, const DeletedEdgeGraph& g) {
  const int p = g.vertex_count();
  const int d = p - 1;
  std::vector<std::vector<int>> totals(static_cast<std::size_t>(p));

  for (int v = 0; v < p; ++v) {
    std::vector<int> incident;
    for (int w = 0; w < p; ++w) {
      if (w != v) incident.push_back(g.present_rank(EdgePair::canonical(v, w)) + 1);
    }
    std::vector<int> prev;  // row i-1; prev[j] is "at least j+1"
    for (int i = 0; i < d; ++i) {
      const int x = incident[static_cast<std::size_t>(i)];
      std::vector<int> row(static_cast<std::size_t>(i + 1));
      for (int j = 0; j <= i; ++j) {
        const int cur = ++f.num_vars;
        row[static_cast<std::size_t>(j)] = cur;
        const bool has_same = j < i;   // prev[j] exists
        const bool has_lower = j > 0;  // prev[j-1] exists; otherwise it is constant true
        const auto same = has_same ? prev[static_cast<std::size_t>(j)] : 0;
        const auto lower = has_lower ? prev[static_cast<std::size_t>(j - 1)] : 0;

        // cur <= same
        if (has_same) f.clauses.push_back({Literal::negative(same), Literal::positive(cur)});
        // cur <= lower & x
        if (has_lower) {
          f.clauses.push_back({Literal::negative(lower), Literal::negative(x), Literal::positive(cur)});
        } else {
          f.clauses.push_back({Literal::negative(x), Literal::positive(cur)});
        }
        // cur => same | x
        if (has_same) {
          f.clauses.push_back({Literal::negative(cur), Literal::positive(same), Literal::positive(x)});
        } else {
          f.clauses.push_back({Literal::negative(cur), Literal::positive(x)});
        }
        // cur => same | lower
        if (has_lower) {
          if (has_same) {
            f.clauses.push_back({Literal::negative(cur), Literal::positive(same), Literal::positive(lower)});
          } else {
            f.clauses.push_back({Literal::negative(cur), Literal::positive(lower)});
          }
        }
      }
      prev = std::move(row);
    }
    totals[static_cast<std::size_t>(v)] = std::move(prev);
  }

  for (int v = 0; v + 1 < p; ++v) {
    for (int j = 0; j < d; ++j) {
      f.clauses.push_back({Literal::negative(totals[static_cast<std::size_t>(v + 1)][static_cast<std::size_t>(j)]),
                           Literal::positive(totals[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)])});
    }
  }
}

}  // namespace

CnfFormula encode(const DeletedEdgeGraph& g, int s, int t, const EncodeOptions& options) {
  if (s < 1 || t < 1) {
    throw InvalidParameterError("clique sizes must be at least 1 (got s=" + std::to_string(s) +
                                ", t=" + std::to_string(t) + ")");
  }
  if (g.vertex_count() < 1) throw InvalidParameterError("graph needs at least one vertex");
  if (options.degree_ordering && g.has_deletions()) {
    throw InvalidParameterError("degree ordering is only sound on graphs without deleted edges");
  }

  CnfFormula f;
  f.var_map = g.present_edges();
  f.num_vars = static_cast<int>(f.var_map.size());
  add_blocking_clauses(f, g, s, /*block_red=*/true);
  add_blocking_clauses(f, g, t, /*block_red=*/false);
  if (options.degree_ordering && g.vertex_count() > 1) add_degree_ordering(f, g);
  return f;
}

EdgeColoring decode(const Assignment& assignment, const DeletedEdgeGraph& g) {
  const int m = g.present_edge_count();
  if (static_cast<int>(assignment.size()) < m) {
    throw InvalidInputError("assignment covers " + std::to_string(assignment.size()) + " of " +
                            std::to_string(m) + " edge variables");
  }
  std::vector<Color> colors(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    colors[static_cast<std::size_t>(i)] = assignment[static_cast<std::size_t>(i)] ? Color::Red : Color::Blue;
  }
  return EdgeColoring(g, std::move(colors));
}

bool satisfies(const CnfFormula& f, const Assignment& assignment) {
  if (static_cast<int>(assignment.size()) < f.num_vars) {
    throw InvalidInputError("assignment is not total over the formula's variables");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return assignment[static_cast<std::size_t>(l.var - 1)] != l.negated;
    });
  });
}

void validate(const CnfFormula& f) {
  if (f.num_vars < 0) throw InvalidInputError("negative variable count");
  if (f.edge_var_count() > f.num_vars) throw InvalidInputError("var_map larger than num_vars");
  std::vector<int> seen(static_cast<std::size_t>(f.num_vars) + 1, -1);
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    for (const Literal& l : f.clauses[ci]) {
      if (l.var < 1 || l.var > f.num_vars) {
        throw InvalidInputError("clause " + std::to_string(ci) + " uses variable " + std::to_string(l.var) +
                                " outside [1, " + std::to_string(f.num_vars) + "]");
      }
      auto& mark = seen[static_cast<std::size_t>(l.var)];
      if (mark == static_cast<int>(ci)) {
        throw InvalidInputError("clause " + std::to_string(ci) + " repeats variable " + std::to_string(l.var));
      }
      mark = static_cast<int>(ci);
    }
  }
}

std::string export_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  for (int v = 1; v <= f.edge_var_count(); ++v) {
    const EdgePair& e = f.var_map[static_cast<std::size_t>(v - 1)];
    out << "c var " << v << " = edge (" << e.u << ',' << e.v << ")\n";
  }
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << l.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace ramsey
