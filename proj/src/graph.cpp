#include "ramsey/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Keeps C(p, 2) comfortably inside an int.
constexpr int kMaxVertices = 1 << 15;

std::string edge_text(EdgePair e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void check_vertex_count(int p) {
  if (p < 0 || p > kMaxVertices) {
    throw InvalidParameterError("vertex count " + std::to_string(p) + " out of range");
  }
}

}  // namespace

EdgePair EdgePair::canonical(VertexId a, VertexId b) {
  if (a < 0 || b < 0) {
    throw InvalidEdgeError("negative endpoint in edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  if (a == b) {
    throw InvalidEdgeError("loop edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: result * (n - k + i) is divisible by i.
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

int edge_count(int p) {
  check_vertex_count(p);
  return static_cast<int>(binomial(p, 2));
}

int edge_index(EdgePair e, int p) {
  check_vertex_count(p);
  if (e.u < 0 || e.v >= p || e.u >= e.v) {
    throw InvalidEdgeError("edge " + edge_text(e) + " is not a canonical edge of K_" + std::to_string(p));
  }
  // Rows 0..u-1 contribute (p-1) + (p-2) + ... + (p-u) edges.
  const int before = e.u * (2 * p - e.u - 1) / 2;
  return before + (e.v - e.u - 1);
}

EdgePair index_to_edge(int index, int p) {
  const int m = edge_count(p);
  if (index < 0 || index >= m) {
    throw InvalidEdgeError("edge index " + std::to_string(index) + " out of range [0, " +
                           std::to_string(m) + ")");
  }
  int u = 0;
  int row = p - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return EdgePair{u, u + 1 + index};
}

SubsetEnumerator::SubsetEnumerator(int n, int k) : n_(n), k_(k), done_(k < 0 || k > n) {
  if (!done_) {
    current_.resize(static_cast<std::size_t>(k));
    std::iota(current_.begin(), current_.end(), 0);
  }
}

void SubsetEnumerator::advance() {
  if (done_) return;
  // Rightmost position that can still move up.
  int i = k_ - 1;
  while (i >= 0 && current_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++current_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k_; ++j) {
    current_[static_cast<std::size_t>(j)] = current_[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<std::vector<VertexId>> k_subsets(int p, int k) {
  std::vector<std::vector<VertexId>> out;
  for (SubsetEnumerator it(p, k); !it.done(); it.advance()) out.push_back(it.current());
  return out;
}

DeletedEdgeGraph::DeletedEdgeGraph(int p, std::vector<EdgePair> deleted) : p_(p), deleted_(std::move(deleted)) {
  check_vertex_count(p);
  for (const EdgePair& e : deleted_) {
    if (e.u < 0 || e.v >= p || e.u >= e.v) {
      throw InvalidEdgeError("deleted edge " + edge_text(e) + " is not an edge of K_" + std::to_string(p));
    }
  }
  std::sort(deleted_.begin(), deleted_.end());
  deleted_.erase(std::unique(deleted_.begin(), deleted_.end()), deleted_.end());
}

bool DeletedEdgeGraph::is_deleted(EdgePair e) const {
  return std::binary_search(deleted_.begin(), deleted_.end(), e);
}

bool DeletedEdgeGraph::contains(EdgePair e) const {
  return e.u >= 0 && e.u < e.v && e.v < p_ && !is_deleted(e);
}

std::vector<EdgePair> DeletedEdgeGraph::present_edges() const {
  std::vector<EdgePair> out;
  out.reserve(static_cast<std::size_t>(present_edge_count()));
  auto next_deleted = deleted_.begin();
  for (int u = 0; u < p_; ++u) {
    for (int v = u + 1; v < p_; ++v) {
      const EdgePair e{u, v};
      if (next_deleted != deleted_.end() && *next_deleted == e) {
        ++next_deleted;
        continue;
      }
      out.push_back(e);
    }
  }
  return out;
}

int DeletedEdgeGraph::present_rank(EdgePair e) const {
  const int index = edge_index(e, p_);
  const auto lower = std::lower_bound(deleted_.begin(), deleted_.end(), e);
  if (lower != deleted_.end() && *lower == e) return -1;
  return index - static_cast<int>(lower - deleted_.begin());
}

bool subset_is_clique(const DeletedEdgeGraph& g, std::span<const VertexId> subset) {
  if (!g.has_deletions()) return true;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] == subset[j]) continue;
      if (g.is_deleted(EdgePair::canonical(subset[i], subset[j]))) return false;
    }
  }
  return true;
}

}  // namespace ramsey
