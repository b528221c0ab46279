#include <doctest.h>

#include <algorithm>
#include <set>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

TEST_CASE("edge_index follows lexicographic order") {
  CHECK(edge_index({0, 1}, 6) == 0);
  CHECK(edge_index({2, 3}, 4) == 5);
  CHECK(edge_index({0, 5}, 6) == 4);
  CHECK(edge_index({4, 5}, 6) == 14);
}

TEST_CASE("index_to_edge inverts edge_index") {
  CHECK(index_to_edge(0, 6) == EdgePair{0, 1});
  CHECK(index_to_edge(4, 6) == EdgePair{0, 5});
  CHECK(index_to_edge(5, 4) == EdgePair{2, 3});

  for (int p = 2; p <= 12; ++p) {
    const int m = edge_count(p);
    CHECK(m == p * (p - 1) / 2);
    EdgePair previous{-1, -1};
    for (int i = 0; i < m; ++i) {
      const EdgePair e = index_to_edge(i, p);
      REQUIRE(edge_index(e, p) == i);
      CHECK(e.u < e.v);
      CHECK(previous < e);
      previous = e;
    }
  }
}

TEST_CASE("edge indexing rejects invalid edges") {
  CHECK_THROWS_AS(edge_index({0, 6}, 6), InvalidEdgeError);
  CHECK_THROWS_AS(edge_index({3, 3}, 6), InvalidEdgeError);
  CHECK_THROWS_AS(edge_index({4, 2}, 6), InvalidEdgeError);
  CHECK_THROWS_AS(index_to_edge(15, 6), InvalidEdgeError);
  CHECK_THROWS_AS(index_to_edge(-1, 6), InvalidEdgeError);
  CHECK_THROWS_AS(EdgePair::canonical(2, 2), InvalidEdgeError);
  CHECK(EdgePair::canonical(5, 3) == EdgePair{3, 5});
}

TEST_CASE("k_subsets examples") {
  CHECK(k_subsets(3, 2) == std::vector<std::vector<VertexId>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(k_subsets(4, 4) == std::vector<std::vector<VertexId>>{{0, 1, 2, 3}});
  CHECK(k_subsets(5, 3).size() == 10);
  CHECK(k_subsets(3, 4).empty());
  CHECK(k_subsets(3, 0) == std::vector<std::vector<VertexId>>{{}});
}

TEST_CASE("k_subsets emits C(p,k) distinct sorted subsets in lexicographic order") {
  for (int p = 0; p <= 9; ++p) {
    for (int k = 0; k <= p + 1; ++k) {
      const auto subsets = k_subsets(p, k);
      REQUIRE(subsets.size() == binomial(p, k));
      CHECK(std::is_sorted(subsets.begin(), subsets.end()));
      CHECK(std::set<std::vector<VertexId>>(subsets.begin(), subsets.end()).size() == subsets.size());
      for (const auto& s : subsets) {
        CHECK(std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end());
        CHECK((s.empty() || s.back() < p));
      }
    }
  }
}

TEST_CASE("DeletedEdgeGraph keeps a sorted duplicate-free deletion set") {
  const DeletedEdgeGraph g(6, {{2, 4}, {0, 5}, {2, 4}});
  CHECK(g.deleted() == std::vector<EdgePair>{{0, 5}, {2, 4}});
  CHECK(g.present_edge_count() == 13);
  CHECK(g.present_edges().size() == 13);
  CHECK(g.is_deleted({0, 5}));
  CHECK_FALSE(g.contains({0, 5}));
  CHECK(g.contains({0, 4}));
  CHECK(g.present_rank({0, 5}) == -1);
  CHECK(g.present_rank({1, 2}) == 4);  // (0,1)..(0,4), then (1,2)
  CHECK(g.present_rank({4, 5}) == 12);

  const auto edges = g.present_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) CHECK(g.present_rank(edges[i]) == static_cast<int>(i));

  CHECK_THROWS_AS(DeletedEdgeGraph(4, {{1, 4}}), InvalidEdgeError);
  CHECK_THROWS_AS(DeletedEdgeGraph(4, {{2, 1}}), InvalidEdgeError);
}

TEST_CASE("subset_is_clique excludes subsets spanning a deleted edge") {
  const DeletedEdgeGraph g(6, {{0, 5}});
  CHECK_FALSE(subset_is_clique(g, std::vector<VertexId>{0, 1, 5}));
  CHECK(subset_is_clique(g, std::vector<VertexId>{1, 2, 3}));

  const auto k5 = DeletedEdgeGraph::complete(5);
  for (int k = 0; k <= 5; ++k) {
    for (const auto& s : k_subsets(5, k)) CHECK(subset_is_clique(k5, s));
  }
}

TEST_CASE("subset_is_clique is monotone under removing deletions") {
  const std::vector<EdgePair> all{{0, 1}, {1, 2}, {2, 4}, {0, 5}};
  for (std::size_t mask = 0; mask < (1U << all.size()); ++mask) {
    std::vector<EdgePair> larger;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (1U << i)) larger.push_back(all[i]);
    }
    for (std::size_t drop = 0; drop < larger.size(); ++drop) {
      auto smaller = larger;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      const DeletedEdgeGraph big(6, larger);
      const DeletedEdgeGraph small(6, smaller);
      for (int k = 2; k <= 4; ++k) {
        for (const auto& s : k_subsets(6, k)) {
          if (subset_is_clique(big, s)) CHECK(subset_is_clique(small, s));
        }
      }
    }
  }
}
