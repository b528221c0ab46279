#pragma once

// Complete graphs with optional deleted edges. Vertices are dense integers
// 0..p-1 and edges are ordered lexicographically by (u, v) with u < v; that
// order fixes variable numbering and every serialized artifact.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

using VertexId = int;

struct EdgePair {
  VertexId u = 0;
  VertexId v = 1;

  /// Orders the endpoints; throws InvalidEdgeError on a loop or a negative
  /// endpoint.
  static EdgePair canonical(VertexId a, VertexId b);

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

std::uint64_t binomial(int n, int k);

/// C(p, 2).
int edge_count(int p);

/// Position of e in the lexicographic edge order of K_p.
int edge_index(EdgePair e, int p);

/// Inverse of edge_index.
EdgePair index_to_edge(int index, int p);

/// Lexicographic k-combinations of {0, ..., n-1}.
///
///   for (SubsetEnumerator it(n, k); !it.done(); it.advance()) use(it.current());
///
/// k == 0 yields the empty subset once; k > n yields nothing.
class SubsetEnumerator {
 public:
  SubsetEnumerator(int n, int k);

  bool done() const noexcept { return done_; }
  const std::vector<int>& current() const noexcept { return current_; }
  void advance();

 private:
  int n_;
  int k_;
  bool done_;
  std::vector<int> current_;
};

std::vector<std::vector<VertexId>> k_subsets(int p, int k);

/// K_p minus a set of deleted edges. Immutable after construction.
class DeletedEdgeGraph {
 public:
  DeletedEdgeGraph() = default;

  /// Duplicate deletions collapse; endpoints outside [0, p) throw
  /// InvalidEdgeError.
  explicit DeletedEdgeGraph(int p, std::vector<EdgePair> deleted = {});

  static DeletedEdgeGraph complete(int p) { return DeletedEdgeGraph(p); }

  int vertex_count() const noexcept { return p_; }
  const std::vector<EdgePair>& deleted() const noexcept { return deleted_; }
  bool has_deletions() const noexcept { return !deleted_.empty(); }
  bool is_deleted(EdgePair e) const;
  bool contains(EdgePair e) const;

  int present_edge_count() const noexcept { return edge_count(p_) - static_cast<int>(deleted_.size()); }

  /// Present edges in lexicographic order.
  std::vector<EdgePair> present_edges() const;

  /// Position of a present edge among the present edges; -1 when e is deleted.
  int present_rank(EdgePair e) const;

  friend bool operator==(const DeletedEdgeGraph&, const DeletedEdgeGraph&) = default;

 private:
  int p_ = 0;
  std::vector<EdgePair> deleted_;
};

/// True iff no pair inside the subset is a deleted edge, i.e. the subset spans
/// a complete subgraph. A deleted edge's endpoints never lie in one clique.
bool subset_is_clique(const DeletedEdgeGraph& g, std::span<const VertexId> subset);

}  // namespace ramsey
