#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/decomposition.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

// All formats are whitespace-separated ASCII with LF line endings and 0-based
// indices. Lines starting with '#' and blank lines are ignored. Parse failures
// throw ParseError carrying the 1-based line number.

/// "p <n> <m>" then m lines "e <u> <v>".
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

/// m lines "c <edge> <color>" then a trailing "v <value>".
EdgeColoring parse_coloring(std::string_view text);
std::string emit_coloring(const EdgeColoring& c);

/// "bd <nodes> <width>", tree edges "t <a> <b>", leaves "l <node> <edge>".
BranchDecomposition parse_branch_decomposition(std::string_view text);
std::string emit_branch_decomposition(const BranchDecomposition& bd);

/// "td <bags> <width>", bags "b <id> <v>...", tree edges "t <a> <b>".
TreeDecomposition parse_tree_decomposition(std::string_view text);
std::string emit_tree_decomposition(const TreeDecomposition& td);

/// Task assignment instance: agents are vertices, two-agent tasks are edges
/// and k time slots. Only k = 2 with two-agent tasks is supported.
struct T2atcInstance {
  int agents = 0;
  int slots = 2;
  std::vector<Edge> tasks;  // canonical: a < b, sorted

  bool operator==(const T2atcInstance&) const = default;
};

/// "tasks <agents> <tasks> <k>" then "task <a> <b>" lines.
T2atcInstance parse_t2atc(std::string_view text);
std::string emit_t2atc(const T2atcInstance& inst);

/// True if the first meaningful line is a T2ATC header.
bool looks_like_t2atc(std::string_view text);

Graph t2atc_to_graph(const T2atcInstance& inst);

struct WelfareReport {
  int tasks_executed = 0;
  int social_welfare = 0;  // every executed task counts once per agent
};

WelfareReport sw_report(int value);

/// "X: <indices>" line followed by the witness coloring.
std::string emit_certificate(std::span<const int> removed, const EdgeColoring& witness);

/// Whole file or stdin when path is "-".
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace mec2
