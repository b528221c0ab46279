#include <doctest.h>

#include <random>

#include "ramsey/errors.hpp"
#include "ramsey/solver.hpp"
#include "support/oracles.hpp"

using namespace ramsey;

TEST_CASE("solve examples") {
  const SolveResult k5 = solve(encode(DeletedEdgeGraph::complete(5), 3, 3));
  REQUIRE(k5.status == SolveStatus::Sat);
  CHECK(k5.model.size() == 10);
  CHECK(is_good(decode(k5.model, DeletedEdgeGraph::complete(5)), 3, 3).good);

  CHECK(solve(encode(DeletedEdgeGraph::complete(6), 3, 3)).status == SolveStatus::Unsat);

  const SolveResult k2 = solve(encode(DeletedEdgeGraph::complete(2), 3, 3));
  CHECK(k2.status == SolveStatus::Sat);
  CHECK(k2.model == Assignment{true});

  CHECK(solve(encode(DeletedEdgeGraph::complete(1), 1, 2)).status == SolveStatus::Unsat);
}

TEST_CASE("solve rejects malformed formulas") {
  CnfFormula f;
  f.num_vars = 1;
  f.clauses = {{Literal::positive(2)}};
  CHECK_THROWS_AS(solve(f), InvalidInputError);
}

TEST_CASE("budget exhaustion is reported separately from UNSAT") {
  const CnfFormula f = encode(DeletedEdgeGraph::complete(9), 3, 4);
  const SolveResult starved = solve(f, 3);
  CHECK(starved.status == SolveStatus::BudgetExceeded);
  CHECK(starved.model.empty());
  CHECK(starved.stats.decisions == 3);

  const SolveResult full = solve(f);
  CHECK(full.status == SolveStatus::Unsat);
  CHECK(full.stats.decisions > 3);
  // A budget of exactly the decisions needed is enough.
  CHECK(solve(f, full.stats.decisions).status == SolveStatus::Unsat);
  CHECK(solve(f, full.stats.decisions - 1).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("unit clauses and propagation at the root") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{Literal::negative(1)}, {Literal::positive(1), Literal::positive(2)}, {Literal::negative(2), Literal::negative(3)}};
  const SolveResult r = solve(f);
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(r.model == Assignment{false, true, false});
  CHECK(r.stats.decisions == 0);

  f.clauses.push_back({Literal::positive(3)});
  CHECK(solve(f).status == SolveStatus::Unsat);
}

TEST_CASE("branching tries the lowest variable true first") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{Literal::negative(1), Literal::negative(2)}};
  const SolveResult r = solve(f);
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(r.model == Assignment{true, false, true});
}

TEST_CASE("solver agrees with exhaustive enumeration on random CNFs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 600; ++trial) {
    CnfFormula f;
    f.num_vars = 3 + trial % 8;
    const int clauses = 2 + static_cast<int>(rng() % static_cast<unsigned>(5 * f.num_vars));
    for (int c = 0; c < clauses; ++c) {
      const int width = 1 + static_cast<int>(rng() % 3);
      Clause clause;
      std::vector<int> vars;
      while (static_cast<int>(vars.size()) < std::min(width, f.num_vars)) {
        const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(f.num_vars));
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) continue;
        vars.push_back(v);
        clause.push_back(Literal{v, (rng() & 1U) != 0U});
      }
      f.clauses.push_back(clause);
    }
    const SolveResult r = solve(f);
    REQUIRE(r.status != SolveStatus::BudgetExceeded);
    REQUIRE((r.status == SolveStatus::Sat) == ramsey::testing::enumerate_sat(f));
    if (r.status == SolveStatus::Sat) CHECK(satisfies(f, r.model));
  }
}

TEST_CASE("solver agrees with the brute-force coloring oracle") {
  const std::vector<std::vector<EdgePair>> deletion_sets{{}, {{0, 1}}, {{0, 1}, {2, 3}}, {{0, 1}, {1, 2}}, {{0, 5}}};
  for (int p = 1; p <= 6; ++p) {
    for (const auto& deleted : deletion_sets) {
      if (!deleted.empty() && deleted.back().v >= p) continue;
      const DeletedEdgeGraph g(p, deleted);
      for (int s = 2; s <= 4; ++s) {
        for (int t = 2; t <= 4; ++t) {
          const SolveResult r = solve(encode(g, s, t));
          const auto oracle = brute_force_good_coloring(g, s, t);
          REQUIRE((r.status == SolveStatus::Sat) == oracle.has_value());
          if (r.status == SolveStatus::Sat) CHECK(is_good(decode(r.model, g), s, t).good);
        }
      }
    }
  }
}

TEST_CASE("solve is deterministic") {
  for (int p = 4; p <= 9; ++p) {
    const CnfFormula f = encode(DeletedEdgeGraph::complete(p), 3, 4);
    const SolveResult a = solve(f);
    const SolveResult b = solve(f);
    CHECK(a.status == b.status);
    CHECK(a.model == b.model);
    CHECK(a.stats.decisions == b.stats.decisions);
    CHECK(a.stats.propagations == b.stats.propagations);
  }
}

TEST_CASE("deleting more edges keeps a satisfiable instance satisfiable") {
  const std::vector<EdgePair> order{{0, 1}, {2, 3}, {4, 5}, {1, 2}, {0, 6}};
  for (auto [p, s, t] : {std::tuple{6, 3, 3}, std::tuple{7, 3, 3}, std::tuple{8, 3, 4}, std::tuple{9, 3, 4}}) {
    bool was_sat = false;
    std::vector<EdgePair> deleted;
    for (std::size_t k = 0; k <= order.size(); ++k) {
      if (k > 0) {
        if (order[k - 1].v >= p) continue;
        deleted.push_back(order[k - 1]);
      }
      const DeletedEdgeGraph g(p, deleted);
      const bool sat = solve(encode(g, s, t)).status == SolveStatus::Sat;
      if (was_sat) CHECK(sat);
      was_sat = was_sat || sat;
    }
  }
}

TEST_CASE("degree ordering preserves satisfiability") {
  for (int p = 1; p <= 6; ++p) {
    const auto g = DeletedEdgeGraph::complete(p);
    for (int s = 2; s <= 4; ++s) {
      for (int t = 2; t <= 4; ++t) {
        EncodeOptions options;
        options.degree_ordering = true;
        const CnfFormula f = encode(g, s, t, options);
        CHECK(f.edge_var_count() == g.present_edge_count());
        const SolveResult r = solve(f);
        REQUIRE((r.status == SolveStatus::Sat) == brute_force_good_coloring(g, s, t).has_value());
        if (r.status != SolveStatus::Sat) continue;
        const EdgeColoring c = decode(r.model, g);
        CHECK(is_good(c, s, t).good);
        std::vector<int> red_degree(static_cast<std::size_t>(p), 0);
        for (const EdgePair& e : g.present_edges()) {
          if (c.color(e) == Color::Red) {
            ++red_degree[static_cast<std::size_t>(e.u)];
            ++red_degree[static_cast<std::size_t>(e.v)];
          }
        }
        CHECK(std::is_sorted(red_degree.rbegin(), red_degree.rend()));
      }
    }
  }
  EncodeOptions options;
  options.degree_ordering = true;
  CHECK(solve(encode(DeletedEdgeGraph::complete(8), 3, 4, options)).status == SolveStatus::Sat);
  CHECK(solve(encode(DeletedEdgeGraph::complete(9), 3, 4, options)).status == SolveStatus::Unsat);
  CHECK_THROWS_AS(encode(DeletedEdgeGraph(4, {{0, 1}}), 3, 3, options), InvalidParameterError);
}
