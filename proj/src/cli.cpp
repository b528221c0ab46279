#include "ramsey/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ramsey/document.hpp"
#include "ramsey/ramsey.hpp"

namespace ramsey::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw InvalidParameterError("cannot write '" + path + "'");
}

std::string edge_flag(EdgePair e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// "u-v" in either order; throws InvalidEdgeError.
EdgePair parse_edge_flag(const std::string& text, int n) {
  const auto dash = text.find('-');
  int a = -1;
  int b = -1;
  const auto parse_part = [](std::string_view part, int& value) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    return ec == std::errc{} && ptr == part.data() + part.size() && !part.empty();
  };
  if (dash == std::string::npos || !parse_part(std::string_view(text).substr(0, dash), a) ||
      !parse_part(std::string_view(text).substr(dash + 1), b)) {
    throw InvalidEdgeError("edge '" + text + "' is not of the form u-v");
  }
  const EdgePair e = EdgePair::canonical(a, b);
  if (e.v >= n) throw InvalidEdgeError("edge '" + text + "' has an endpoint outside 0.." + std::to_string(n - 1));
  return e;
}

std::string vertex_set(const std::vector<VertexId>& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices[i]);
  }
  return out + "}";
}

std::string deletion_list(const std::vector<EdgePair>& edges) {
  if (edges.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    out += edge_flag(edges[i]);
  }
  return out;
}

struct NumberArgs {
  int s = 0;
  int t = 0;
  int max_n = 14;
  std::uint64_t budget = kDefaultDecisionBudget;
  std::string witness;
  bool symmetry_breaking = false;
};

struct SolveArgs {
  int n = 0;
  int s = 0;
  int t = 0;
  std::vector<std::string> deletions;
  std::string json_path;
  std::string dimacs_path;
  std::uint64_t budget = kDefaultDecisionBudget;
  bool symmetry_breaking = false;
};

struct VerifyArgs {
  std::string path;
  int s = 0;
  int t = 0;
};

struct ExtendArgs {
  std::string path;
  int vertex = 0;
  int s = 0;
  int t = 0;
  std::string out_path;
};

struct MinDeletionsArgs {
  int s = 0;
  int t = 0;
  int p = 0;
  std::optional<int> max_k;
  std::string json_path;
  std::uint64_t budget = kDefaultDecisionBudget;
};

struct DotArgs {
  std::string path;
  std::string out_path;
};

int cmd_number(const NumberArgs& a, std::ostream& out, std::ostream& err) {
  SearchOptions options;
  options.budget = a.budget;
  options.degree_ordering = a.symmetry_breaking;
  try {
    const RamseyResult r = ramsey_number(RamseyQuery{a.s, a.t}, a.max_n, options);
    out << "r(" << a.s << ',' << a.t << ") = " << r.p << '\n';
    if (!a.witness.empty()) {
      if (r.witness) {
        write_file(a.witness, serialize(to_document(*r.witness)));
      } else {
        err << "no witness: r = 1 leaves nothing to color\n";
      }
    }
    return kExitOk;
  } catch (const NotFoundBelowError&) {
    out << "r(" << a.s << ',' << a.t << ") > " << a.max_n << '\n';
    return kExitNotFound;
  }
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  std::vector<EdgePair> deleted;
  for (const std::string& flag : a.deletions) deleted.push_back(parse_edge_flag(flag, a.n));
  if (a.n < 1) throw InvalidParameterError("-n must be at least 1");
  RamseyQuery{a.s, a.t}.validate();

  const DeletedEdgeGraph g(a.n, deleted);
  EncodeOptions encoding;
  encoding.degree_ordering = a.symmetry_breaking && !g.has_deletions();
  const CnfFormula f = encode(g, a.s, a.t, encoding);
  if (!a.dimacs_path.empty()) write_file(a.dimacs_path, export_dimacs(f));

  const SolveResult r = solve(f, a.budget);
  switch (r.status) {
    case SolveStatus::Unsat:
      out << "UNSAT\n";
      return kExitNegative;
    case SolveStatus::BudgetExceeded:
      out << "UNKNOWN: decision budget of " << a.budget << " exceeded\n";
      return kExitBudget;
    case SolveStatus::Sat:
      break;
  }
  const EdgeColoring coloring = decode(r.model, g);
  if (!is_good(coloring, a.s, a.t).good) throw InternalError("solver model is not a good coloring");
  if (!a.json_path.empty()) write_file(a.json_path, serialize(to_document(coloring)));
  out << "SAT\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const EdgeColoring coloring = to_coloring(parse_document(read_file(a.path)));
  const Verdict v = is_good(coloring, a.s, a.t);
  if (v.good) {
    out << "GOOD\n";
    return kExitOk;
  }
  const int k = static_cast<int>(v.witness->vertices.size());
  out << "BAD: " << to_string(v.witness->color) << " K_" << k << " on " << vertex_set(v.witness->vertices) << '\n';
  return kExitNegative;
}

int cmd_extend(const ExtendArgs& a, std::ostream& out) {
  const EdgeColoring coloring = to_coloring(parse_document(read_file(a.path)));
  if (coloring.graph().has_deletions()) {
    throw DocumentError("input must color a complete graph (deleted_edges must be empty)");
  }
  if (const Verdict v = is_good(coloring, a.s, a.t); !v.good) {
    out << "BAD: " << to_string(v.witness->color) << " K_" << v.witness->vertices.size() << " on "
        << vertex_set(v.witness->vertices) << '\n';
    return kExitNegative;
  }
  const EdgeColoring extended = extend_coloring(coloring, a.vertex, a.s, a.t);
  write_file(a.out_path, serialize(to_document(extended)));
  out << "deleted edge " << edge_flag(extended.graph().deleted().front()) << '\n';
  return kExitOk;
}

int cmd_min_deletions(const MinDeletionsArgs& a, std::ostream& out) {
  if (a.p < 2) throw InvalidParameterError("-p must be at least 2");
  const int k_max = a.max_k.value_or(std::min(a.p - 1, edge_count(a.p)));
  SearchOptions options;
  options.budget = a.budget;
  try {
    const DeletionResult r = min_deletions(RamseyQuery{a.s, a.t}, a.p, k_max, options);
    out << "e = " << r.e << '\n';
    out << "deleted: " << deletion_list(r.deleted) << '\n';
    if (!a.json_path.empty()) write_file(a.json_path, serialize(to_document(r.coloring)));
    return kExitOk;
  } catch (const NotFoundBelowError&) {
    out << "e > " << k_max << '\n';
    return kExitNotFound;
  }
}

int cmd_export_dot(const DotArgs& a, std::ostream& out) {
  const std::string dot = export_dot(parse_document(read_file(a.path)));
  if (a.out_path.empty()) {
    out << dot;
  } else {
    write_file(a.out_path, dot);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Red/blue edge colorings of complete graphs without monochromatic cliques", "ramsey"};
  app.require_subcommand(1);

  NumberArgs number;
  auto* number_cmd = app.add_subcommand("number", "Compute r(s,t) by solving K_1, K_2, ... in turn");
  number_cmd->add_option("-s", number.s, "Forbidden red clique size")->required();
  number_cmd->add_option("-t", number.t, "Forbidden blue clique size")->required();
  number_cmd->add_option("--max-n", number.max_n, "Largest n to try")->capture_default_str();
  number_cmd->add_option("--budget", number.budget, "Decision budget per solver call")->capture_default_str();
  number_cmd->add_option("--witness", number.witness, "Write the good coloring of K_{r-1} as JSON");
  number_cmd->add_flag("--symmetry-breaking", number.symmetry_breaking, "Add red-degree ordering constraints");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether K_n minus the given edges has a good coloring");
  solve_cmd->add_option("-n", solve_args.n, "Vertex count")->required();
  solve_cmd->add_option("-s", solve_args.s, "Forbidden red clique size")->required();
  solve_cmd->add_option("-t", solve_args.t, "Forbidden blue clique size")->required();
  solve_cmd->add_option("--delete", solve_args.deletions, "Deleted edge u-v (repeatable)")->take_all();
  solve_cmd->add_option("--json", solve_args.json_path, "Write the coloring on SAT");
  solve_cmd->add_option("--dimacs", solve_args.dimacs_path, "Write the CNF formula");
  solve_cmd->add_option("--budget", solve_args.budget, "Decision budget")->capture_default_str();
  solve_cmd->add_flag("--symmetry-breaking", solve_args.symmetry_breaking, "Add red-degree ordering constraints");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring document for monochromatic cliques");
  verify_cmd->add_option("coloring", verify_args.path, "Coloring JSON")->required();
  verify_cmd->add_option("-s", verify_args.s, "Forbidden red clique size")->required();
  verify_cmd->add_option("-t", verify_args.t, "Forbidden blue clique size")->required();

  ExtendArgs extend_args;
  auto* extend_cmd = app.add_subcommand("extend", "Duplicate a vertex of a good coloring of K_{p-1}");
  extend_cmd->add_option("coloring", extend_args.path, "Coloring JSON of a complete graph")->required();
  extend_cmd->add_option("--vertex", extend_args.vertex, "Vertex to duplicate")->required();
  extend_cmd->add_option("-s", extend_args.s, "Forbidden red clique size")->required();
  extend_cmd->add_option("-t", extend_args.t, "Forbidden blue clique size")->required();
  extend_cmd->add_option("--out", extend_args.out_path, "Output JSON")->required();

  MinDeletionsArgs min_args;
  auto* min_cmd = app.add_subcommand("min-deletions", "Fewest deleted edges that make K_p colorable");
  min_cmd->add_option("-s", min_args.s, "Forbidden red clique size")->required();
  min_cmd->add_option("-t", min_args.t, "Forbidden blue clique size")->required();
  min_cmd->add_option("-p", min_args.p, "Vertex count")->required();
  min_cmd->add_option("--max-k", min_args.max_k, "Largest deletion count to try (default p-1)");
  min_cmd->add_option("--json", min_args.json_path, "Write the witness coloring");
  min_cmd->add_option("--budget", min_args.budget, "Decision budget per solver call")->capture_default_str();

  DotArgs dot_args;
  auto* dot_cmd = app.add_subcommand("export-dot", "Render a coloring document as Graphviz DOT");
  dot_cmd->add_option("coloring", dot_args.path, "Coloring JSON")->required();
  dot_cmd->add_option("-o", dot_args.out_path, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*number_cmd) return cmd_number(number, out, err);
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*extend_cmd) return cmd_extend(extend_args, out);
    if (*min_cmd) return cmd_min_deletions(min_args, out);
    if (*dot_cmd) return cmd_export_dot(dot_args, out);
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ramsey::cli
