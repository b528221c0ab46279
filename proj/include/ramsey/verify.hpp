#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

constexpr Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr std::string_view to_string(Color c) noexcept { return c == Color::Red ? "red" : "blue"; }

/// Total red/blue assignment over the present edges of a graph. Colors are
/// stored in the lexicographic order of the present edges.
class EdgeColoring {
 public:
  EdgeColoring(DeletedEdgeGraph graph, std::vector<Color> colors);

  static EdgeColoring uniform(DeletedEdgeGraph graph, Color c);

  /// Red on the listed edges, blue on every other present edge.
  static EdgeColoring with_red_edges(DeletedEdgeGraph graph, std::span<const EdgePair> red);

  const DeletedEdgeGraph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }
  std::span<const Color> colors() const noexcept { return colors_; }

  /// Color of a present edge; nullopt for a deleted one.
  std::optional<Color> color(EdgePair e) const;

  /// Red and blue exchanged on every edge.
  EdgeColoring swapped() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  DeletedEdgeGraph graph_;
  std::vector<Color> colors_;
};

struct MonoClique {
  Color color = Color::Red;
  std::vector<VertexId> vertices;

  friend bool operator==(const MonoClique&, const MonoClique&) = default;
};

struct Verdict {
  bool good = true;
  std::optional<MonoClique> witness;  // present iff !good
};

/// Lexicographically first k-subset that spans a clique of the graph with
/// every internal edge colored c. k == 1 gives {0}. Throws
/// InvalidParameterError for k < 1.
std::optional<std::vector<VertexId>> find_mono_clique(const EdgeColoring& coloring, Color c, int k);

/// Good iff there is no red K_s and no blue K_t. When both exist the red
/// witness is reported. Requires s, t >= 2.
Verdict is_good(const EdgeColoring& coloring, int s, int t);

inline constexpr int kBruteForceMaxEdges = 24;

/// Exhaustive oracle: tries all 2^m colorings in increasing binary order (bit
/// i is the color of the i-th present edge, 1 = red) and returns the first
/// good one. Throws BudgetExceededError when m > kBruteForceMaxEdges.
std::optional<EdgeColoring> brute_force_good_coloring(const DeletedEdgeGraph& g, int s, int t);

}  // namespace ramsey
