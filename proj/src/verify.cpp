#include "ramsey/verify.hpp"

#include <string>

#include "color_matrix.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace detail {

ColorMatrix::ColorMatrix(const EdgeColoring& coloring) : ColorMatrix(coloring.vertex_count()) {
  const auto edges = coloring.graph().present_edges();
  const auto colors = coloring.colors();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    set(edges[i].u, edges[i].v, static_cast<std::int8_t>(colors[i]));
  }
}

bool ColorMatrix::find_clique(Color c, int k, std::vector<VertexId>& out) const {
  out.clear();
  return extend(static_cast<std::int8_t>(c), k, 0, out);
}

// Depth-first extension in increasing vertex order. Every prefix of a
// monochromatic clique is one too, so the first hit is the lexicographic
// minimum of the naive subset scan.
bool ColorMatrix::extend(std::int8_t c, int k, int start, std::vector<VertexId>& chosen) const {
  const int depth = static_cast<int>(chosen.size());
  if (depth == k) return true;
  for (int v = start; v <= p_ - (k - depth); ++v) {
    bool fits = true;
    for (VertexId u : chosen) {
      if (at(u, v) != c) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    chosen.push_back(v);
    if (extend(c, k, v + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

EdgeColoring::EdgeColoring(DeletedEdgeGraph graph, std::vector<Color> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != graph_.present_edge_count()) {
    throw InvalidInputError("coloring has " + std::to_string(colors_.size()) + " colors for " +
                            std::to_string(graph_.present_edge_count()) + " present edges");
  }
}

EdgeColoring EdgeColoring::uniform(DeletedEdgeGraph graph, Color c) {
  std::vector<Color> colors(static_cast<std::size_t>(graph.present_edge_count()), c);
  return EdgeColoring(std::move(graph), std::move(colors));
}

EdgeColoring EdgeColoring::with_red_edges(DeletedEdgeGraph graph, std::span<const EdgePair> red) {
  std::vector<Color> colors(static_cast<std::size_t>(graph.present_edge_count()), Color::Blue);
  for (const EdgePair& e : red) {
    const int rank = graph.present_rank(e);
    if (rank < 0) throw InvalidEdgeError("cannot color a deleted edge");
    colors[static_cast<std::size_t>(rank)] = Color::Red;
  }
  return EdgeColoring(std::move(graph), std::move(colors));
}

std::optional<Color> EdgeColoring::color(EdgePair e) const {
  const int rank = graph_.present_rank(e);
  if (rank < 0) return std::nullopt;
  return colors_[static_cast<std::size_t>(rank)];
}

EdgeColoring EdgeColoring::swapped() const {
  std::vector<Color> colors(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) colors[i] = opposite(colors_[i]);
  return EdgeColoring(graph_, std::move(colors));
}

std::optional<std::vector<VertexId>> find_mono_clique(const EdgeColoring& coloring, Color c, int k) {
  if (k < 1) throw InvalidParameterError("clique size must be at least 1, got " + std::to_string(k));
  const detail::ColorMatrix matrix(coloring);
  std::vector<VertexId> out;
  if (!matrix.find_clique(c, k, out)) return std::nullopt;
  return out;
}

Verdict is_good(const EdgeColoring& coloring, int s, int t) {
  if (s < 2 || t < 2) {
    throw InvalidParameterError("verifier requires s, t >= 2 (got s=" + std::to_string(s) +
                                ", t=" + std::to_string(t) + ")");
  }
  const detail::ColorMatrix matrix(coloring);
  std::vector<VertexId> clique;
  if (matrix.find_clique(Color::Red, s, clique)) return Verdict{false, MonoClique{Color::Red, clique}};
  if (matrix.find_clique(Color::Blue, t, clique)) return Verdict{false, MonoClique{Color::Blue, clique}};
  return Verdict{};
}

std::optional<EdgeColoring> brute_force_good_coloring(const DeletedEdgeGraph& g, int s, int t) {
  if (s < 2 || t < 2) {
    throw InvalidParameterError("brute force requires s, t >= 2");
  }
  const auto edges = g.present_edges();
  const int m = static_cast<int>(edges.size());
  if (m > kBruteForceMaxEdges) {
    throw BudgetExceededError(g.vertex_count(), std::uint64_t{1} << kBruteForceMaxEdges);
  }

  detail::ColorMatrix matrix(g.vertex_count());
  for (const EdgePair& e : edges) matrix.set(e.u, e.v, static_cast<std::int8_t>(Color::Blue));

  std::vector<VertexId> scratch;
  const std::uint32_t end = std::uint32_t{1} << m;
  for (std::uint32_t mask = 0;; ++mask) {
    if (!matrix.find_clique(Color::Red, s, scratch) && !matrix.find_clique(Color::Blue, t, scratch)) {
      std::vector<Color> colors(edges.size());
      for (int i = 0; i < m; ++i) colors[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) ? Color::Red : Color::Blue;
      return EdgeColoring(g, std::move(colors));
    }
    if (mask + 1 == end) break;
    // Only the bits flipped by the increment need rewriting.
    const std::uint32_t changed = mask ^ (mask + 1);
    for (int i = 0; i < m && ((changed >> i) != 0U); ++i) {
      if ((changed >> i) & 1U) {
        const auto color = (((mask + 1) >> i) & 1U) ? Color::Red : Color::Blue;
        matrix.set(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v, static_cast<std::int8_t>(color));
      }
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
