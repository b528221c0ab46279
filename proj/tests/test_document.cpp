#include <doctest.h>

#include <random>

#include "ramsey/document.hpp"
#include "support/oracles.hpp"

using namespace ramsey;

TEST_CASE("coloring documents serialize compactly with sorted keys") {
  const ColoringDocument doc = to_document(EdgeColoring::uniform(DeletedEdgeGraph(3, {{0, 2}}), Color::Red));
  CHECK(serialize(doc) == "{\"blue\":[],\"deleted_edges\":[[0,2]],\"n\":3,\"red\":[[0,1],[1,2]]}\n");
  CHECK(parse_document(serialize(doc)) == doc);
}

TEST_CASE("write, read, write is byte identical") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 1 + trial % 9;
    std::vector<EdgePair> deleted;
    for (int i = 0; i < edge_count(p); ++i) {
      if (rng() % 5 == 0) deleted.push_back(index_to_edge(i, p));
    }
    const EdgeColoring c = ramsey::testing::random_coloring(DeletedEdgeGraph(p, deleted), rng);
    const std::string first = serialize(to_document(c));
    const ColoringDocument parsed = parse_document(first);
    CHECK(serialize(parsed) == first);
    CHECK(to_coloring(parsed) == c);
  }
}

TEST_CASE("schema violations name the broken invariant") {
  const auto message = [](const char* text) {
    try {
      (void)parse_document(text);
    } catch (const DocumentError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message(R"({"blue":[[0,1]],"deleted_edges":[],"n":3,"red":[[0,1],[0,2],[1,2]]})").find("overlap") !=
        std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":3,"red":[[0,1],[1,2]]})").find("cover") != std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":3,"red":[[1,0],[0,2],[1,2]]})").find("canonical") !=
        std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":3,"red":[[0,2],[0,1],[1,2]]})").find("sorted") !=
        std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":2,"red":[[0,1],[1,2]]})").find("endpoint") !=
        std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"red":[]})").find("missing key 'n'") != std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":1,"red":[],"green":[]})").find("unknown key") !=
        std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":0,"red":[]})").find("positive") != std::string::npos);
  CHECK(message(R"({"blue":[[0]],"deleted_edges":[],"n":2,"red":[]})").find("pairs") != std::string::npos);
  CHECK(message("[1,2]").find("object") != std::string::npos);
  CHECK(message("{").find("JSON") != std::string::npos);
  CHECK(message(R"({"blue":[],"deleted_edges":[],"n":1,"red":[]})") == "accepted");
}

TEST_CASE("DOT export") {
  const std::string c5 = export_dot(to_document(ramsey::testing::c5_coloring()));
  const auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = c5.find(needle); pos != std::string::npos; pos = c5.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count("[color=red]") == 5);
  CHECK(count("[color=blue]") == 5);
  CHECK(c5.rfind("graph coloring {\n", 0) == 0);
  CHECK(c5.find("  0 -- 1 [color=red];\n  0 -- 2 [color=blue];\n") != std::string::npos);

  const std::string k3 = export_dot(to_document(EdgeColoring::uniform(DeletedEdgeGraph::complete(3), Color::Red)));
  CHECK(k3 ==
        "graph coloring {\n"
        "  node [shape=circle];\n"
        "  0;\n"
        "  1;\n"
        "  2;\n"
        "  0 -- 1 [color=red];\n"
        "  0 -- 2 [color=red];\n"
        "  1 -- 2 [color=red];\n"
        "}\n");

  const auto k6_minus = EdgeColoring::uniform(DeletedEdgeGraph(6, {{0, 5}}), Color::Blue);
  const std::string dot = export_dot(to_document(k6_minus));
  std::size_t edges = 0;
  for (auto pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 14);
  CHECK(dot.find("0 -- 5") == std::string::npos);
}
