#pragma once

// JSON and DOT serialization of colorings.
//
// A coloring document is a single-line JSON object with sorted keys:
//
//   {"blue":[[0,2],...],"deleted_edges":[],"n":5,"red":[[0,1],...]}
//
// red, blue and deleted_edges partition the edges of K_n; every pair is
// canonical (u < v) and each list is sorted.

#include <string>
#include <string_view>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

/// A document that fails to parse or breaks one of the schema invariants.
/// The message names the violated invariant.
class DocumentError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

struct ColoringDocument {
  int n = 0;
  std::vector<EdgePair> deleted_edges;
  std::vector<EdgePair> red;
  std::vector<EdgePair> blue;

  friend bool operator==(const ColoringDocument&, const ColoringDocument&) = default;
};

ColoringDocument to_document(const EdgeColoring& coloring);

/// Checks every schema invariant; throws DocumentError.
void validate(const ColoringDocument& doc);

EdgeColoring to_coloring(const ColoringDocument& doc);

ColoringDocument parse_document(std::string_view json_text);

/// Compact JSON, sorted keys, trailing LF.
std::string serialize(const ColoringDocument& doc);

/// Undirected Graphviz graph: vertices 0..n-1, then present edges in
/// lexicographic order styled by color. Deleted edges are omitted.
std::string export_dot(const ColoringDocument& doc);

}  // namespace ramsey
