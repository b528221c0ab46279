#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/verify.hpp"

namespace ramsey::detail {

// Dense symmetric p x p table of edge colors. Deleted edges and the diagonal
// hold kNoEdge.
class ColorMatrix {
 public:
  static constexpr std::int8_t kNoEdge = -1;

  explicit ColorMatrix(int p) : p_(p), cells_(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), kNoEdge) {}

  explicit ColorMatrix(const EdgeColoring& coloring);

  int size() const noexcept { return p_; }

  std::int8_t at(int u, int v) const noexcept { return cells_[index(u, v)]; }

  void set(int u, int v, std::int8_t value) noexcept {
    cells_[index(u, v)] = value;
    cells_[index(v, u)] = value;
  }

  /// Lexicographically first k-clique in the given color, written to out.
  bool find_clique(Color c, int k, std::vector<VertexId>& out) const;

 private:
  std::size_t index(int u, int v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(v);
  }

  bool extend(std::int8_t c, int k, int start, std::vector<VertexId>& chosen) const;

  int p_;
  std::vector<std::int8_t> cells_;
};

}  // namespace ramsey::detail
