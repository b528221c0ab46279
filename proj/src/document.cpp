#include "ramsey/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ramsey {

using nlohmann::json;

namespace {

std::string pair_text(EdgePair e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

json edges_to_json(const std::vector<EdgePair>& edges) {
  json out = json::array();
  for (const EdgePair& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

std::vector<EdgePair> edges_from_json(const json& value, const char* key) {
  if (!value.is_array()) throw DocumentError(std::string("'") + key + "' must be an array of [u,v] pairs");
  std::vector<EdgePair> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw DocumentError(std::string("'") + key + "' must contain only [u,v] integer pairs");
    }
    const auto u = item[0].get<long long>();
    const auto v = item[1].get<long long>();
    if (u < 0 || v < 0 || u > (1 << 15) || v > (1 << 15)) {
      throw DocumentError(std::string("'") + key + "' has an endpoint out of range");
    }
    out.push_back(EdgePair{static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return out;
}

void check_list(const std::vector<EdgePair>& edges, int n, const char* key) {
  for (const EdgePair& e : edges) {
    if (e.u >= e.v) {
      throw DocumentError(std::string("pairs must be canonical (u < v): ") + pair_text(e) + " in '" + key + "'");
    }
    if (e.v >= n) {
      throw DocumentError(std::string("edge ") + pair_text(e) + " in '" + key + "' has an endpoint >= n");
    }
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i - 1] < edges[i])) {
      throw DocumentError(std::string("'") + key + "' must be sorted lexicographically without duplicates");
    }
  }
}

}  // namespace

ColoringDocument to_document(const EdgeColoring& coloring) {
  ColoringDocument doc;
  doc.n = coloring.vertex_count();
  doc.deleted_edges = coloring.graph().deleted();
  const auto edges = coloring.graph().present_edges();
  const auto colors = coloring.colors();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    (colors[i] == Color::Red ? doc.red : doc.blue).push_back(edges[i]);
  }
  return doc;
}

void validate(const ColoringDocument& doc) {
  if (doc.n < 1) throw DocumentError("n must be a positive integer");
  check_list(doc.deleted_edges, doc.n, "deleted_edges");
  check_list(doc.red, doc.n, "red");
  check_list(doc.blue, doc.n, "blue");

  // 0 = unseen; otherwise the list that claimed the edge.
  std::vector<int> owner(static_cast<std::size_t>(edge_count(doc.n)), 0);
  const char* names[] = {"", "deleted_edges", "red", "blue"};
  int list_id = 0;
  for (const auto* list : {&doc.deleted_edges, &doc.red, &doc.blue}) {
    ++list_id;
    for (const EdgePair& e : *list) {
      auto& slot = owner[static_cast<std::size_t>(edge_index(e, doc.n))];
      if (slot != 0) {
        throw DocumentError("edges must not overlap: " + pair_text(e) + " appears in both '" + names[slot] +
                            "' and '" + names[list_id] + "'");
      }
      slot = list_id;
    }
  }
  const auto gap = std::find(owner.begin(), owner.end(), 0);
  if (gap != owner.end()) {
    const EdgePair e = index_to_edge(static_cast<int>(gap - owner.begin()), doc.n);
    throw DocumentError("edges must cover K_n: " + pair_text(e) + " is in none of 'red', 'blue', 'deleted_edges'");
  }
}

EdgeColoring to_coloring(const ColoringDocument& doc) {
  validate(doc);
  return EdgeColoring::with_red_edges(DeletedEdgeGraph(doc.n, doc.deleted_edges), doc.red);
}

ColoringDocument parse_document(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("document must be a JSON object");
  for (const char* key : {"blue", "deleted_edges", "n", "red"}) {
    if (!root.contains(key)) throw DocumentError(std::string("missing key '") + key + "'");
  }
  for (const auto& item : root.items()) {
    if (item.key() != "blue" && item.key() != "deleted_edges" && item.key() != "n" && item.key() != "red") {
      throw DocumentError("unknown key '" + item.key() + "'");
    }
  }
  const json& n = root["n"];
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > (1 << 15)) {
    throw DocumentError("n must be a positive integer");
  }
  ColoringDocument doc;
  doc.n = n.get<int>();
  doc.deleted_edges = edges_from_json(root["deleted_edges"], "deleted_edges");
  doc.red = edges_from_json(root["red"], "red");
  doc.blue = edges_from_json(root["blue"], "blue");
  validate(doc);
  return doc;
}

std::string serialize(const ColoringDocument& doc) {
  json root;
  root["blue"] = edges_to_json(doc.blue);
  root["deleted_edges"] = edges_to_json(doc.deleted_edges);
  root["n"] = doc.n;
  root["red"] = edges_to_json(doc.red);
  return root.dump() + "\n";
}

std::string export_dot(const ColoringDocument& doc) {
  std::vector<std::pair<EdgePair, Color>> edges;
  edges.reserve(doc.red.size() + doc.blue.size());
  for (const EdgePair& e : doc.red) edges.emplace_back(e, Color::Red);
  for (const EdgePair& e : doc.blue) edges.emplace_back(e, Color::Blue);
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::ostringstream out;
  out << "graph coloring {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < doc.n; ++v) out << "  " << v << ";\n";
  for (const auto& [e, c] : edges) out << "  " << e.u << " -- " << e.v << " [color=" << to_string(c) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ramsey
