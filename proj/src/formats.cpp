#include "mec2/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "mec2/error.hpp"

namespace mec2 {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Meaningful lines only: comments and blank lines are dropped.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view raw = text.substr(pos, end - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      Line line{number, split(raw)};
      if (!line.tokens.empty() && line.tokens[0].front() != '#') lines_.push_back(std::move(line));
      pos = end + 1;
    }
    last_line_ = number;
  }

  const std::vector<Line>& lines() const { return lines_; }
  int last_line() const { return last_line_; }

 private:
  static std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::vector<Line> lines_;
  int last_line_ = 0;
};

int to_int(const Line& line, std::size_t i) {
  if (i >= line.tokens.size()) throw ParseError(line.number, "missing field " + std::to_string(i));
  auto tok = line.tokens[i];
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                      std::to_string(line.tokens.size()));
  }
}

int nonnegative(const Line& line, std::size_t i, const char* what) {
  int v = to_int(line, i);
  if (v < 0) throw ParseError(line.number, std::string(what) + " must be non-negative");
  return v;
}

void check_range(const Line& line, int value, int bound, const char* what) {
  if (value < 0 || value >= bound) {
    throw ParseError(line.number, std::string(what) + " " + std::to_string(value) + " out of range [0," +
                                      std::to_string(bound) + ")");
  }
}

const Line& header(const LineReader& reader, std::string_view keyword) {
  if (reader.lines().empty()) throw ParseError(reader.last_line(), "missing '" + std::string(keyword) + "' header");
  const auto& h = reader.lines().front();
  if (h.tokens[0] != keyword) {
    throw ParseError(h.number, "expected '" + std::string(keyword) + "' header, got '" + std::string(h.tokens[0]) + "'");
  }
  return h;
}

Edge canonical(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader reader(text);
  const auto& h = header(reader, "p");
  expect_fields(h, 3);
  int n = nonnegative(h, 1, "vertex count");
  int m = nonnegative(h, 2, "edge count");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < reader.lines().size(); ++i) {
    const auto& line = reader.lines()[i];
    if (line.tokens[0] != "e") throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    expect_fields(line, 3);
    int u = to_int(line, 1);
    int v = to_int(line, 2);
    check_range(line, u, n, "endpoint");
    check_range(line, v, n, "endpoint");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    Edge e = canonical(u, v);
    if (!seen.insert(e).second) {
      throw ParseError(line.number, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(reader.last_line(), "header declares " + std::to_string(m) + " edges, found " +
                                             std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text) {
  LineReader reader(text);
  const auto& lines = reader.lines();
  if (lines.empty()) throw ParseError(reader.last_line(), "empty coloring");
  const auto& tail = lines.back();
  if (tail.tokens[0] != "v") throw ParseError(tail.number, "coloring must end with a 'v <value>' line");
  expect_fields(tail, 2);
  int declared = nonnegative(tail, 1, "value");

  int m = static_cast<int>(lines.size()) - 1;
  EdgeColoring c(m);
  std::vector<char> filled(m, 0);
  for (int i = 0; i < m; ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "c") throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    expect_fields(line, 3);
    int edge = to_int(line, 1);
    int color = to_int(line, 2);
    check_range(line, edge, m, "edge index");
    if (color < 0 || color > 2) throw ParseError(line.number, "color must be 0, 1 or 2");
    if (filled[edge]) throw ParseError(line.number, "edge " + std::to_string(edge) + " listed twice");
    filled[edge] = 1;
    c.colors[edge] = static_cast<std::uint8_t>(color);
  }
  if (c.value() != declared) {
    throw ParseError(tail.number, "declared value " + std::to_string(declared) + " but " +
                                      std::to_string(c.value()) + " edges are colored");
  }
  return c;
}

std::string emit_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) out << "c " << i << ' ' << int(c.colors[i]) << '\n';
  out << "v " << c.value() << '\n';
  return out.str();
}

BranchDecomposition parse_branch_decomposition(std::string_view text) {
  LineReader reader(text);
  const auto& h = header(reader, "bd");
  expect_fields(h, 3);
  BranchDecomposition bd;
  bd.node_count = nonnegative(h, 1, "node count");
  bd.width = nonnegative(h, 2, "width");
  bd.leaf_edge.assign(bd.node_count, -1);
  std::set<Edge> seen;
  for (std::size_t i = 1; i < reader.lines().size(); ++i) {
    const auto& line = reader.lines()[i];
    expect_fields(line, 3);
    int a = to_int(line, 1);
    int b = to_int(line, 2);
    if (line.tokens[0] == "t") {
      check_range(line, a, bd.node_count, "node");
      check_range(line, b, bd.node_count, "node");
      if (a == b) throw ParseError(line.number, "tree edge is a loop");
      if (!seen.insert(canonical(a, b)).second) throw ParseError(line.number, "duplicate tree edge");
      bd.tree_edges.push_back(canonical(a, b));
    } else if (line.tokens[0] == "l") {
      check_range(line, a, bd.node_count, "node");
      if (b < 0) throw ParseError(line.number, "edge index must be non-negative");
      if (bd.leaf_edge[a] != -1) throw ParseError(line.number, "node " + std::to_string(a) + " mapped twice");
      bd.leaf_edge[a] = b;
    } else {
      throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    }
  }
  std::sort(bd.tree_edges.begin(), bd.tree_edges.end());
  try {
    check_branch_structure(bd);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(reader.last_line(), e.what());
  }
  return bd;
}

std::string emit_branch_decomposition(const BranchDecomposition& bd) {
  std::ostringstream out;
  out << "bd " << bd.node_count << ' ' << bd.width << '\n';
  for (const auto& e : bd.tree_edges) out << "t " << e.u << ' ' << e.v << '\n';
  for (int node = 0; node < bd.node_count; ++node) {
    if (bd.leaf_edge[node] >= 0) out << "l " << node << ' ' << bd.leaf_edge[node] << '\n';
  }
  return out.str();
}

TreeDecomposition parse_tree_decomposition(std::string_view text) {
  LineReader reader(text);
  const auto& h = header(reader, "td");
  expect_fields(h, 3);
  int count = nonnegative(h, 1, "bag count");
  int width = to_int(h, 2);
  TreeDecomposition td;
  td.bags.resize(count);
  std::vector<char> defined(count, 0);
  std::set<Edge> seen;
  for (std::size_t i = 1; i < reader.lines().size(); ++i) {
    const auto& line = reader.lines()[i];
    if (line.tokens[0] == "b") {
      int id = to_int(line, 1);
      check_range(line, id, count, "bag id");
      if (defined[id]) throw ParseError(line.number, "bag " + std::to_string(id) + " defined twice");
      defined[id] = 1;
      auto& bag = td.bags[id];
      for (std::size_t t = 2; t < line.tokens.size(); ++t) bag.push_back(nonnegative(line, t, "vertex"));
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line.number, "bag lists a vertex twice");
      }
    } else if (line.tokens[0] == "t") {
      expect_fields(line, 3);
      int a = to_int(line, 1);
      int b = to_int(line, 2);
      check_range(line, a, count, "bag");
      check_range(line, b, count, "bag");
      if (a == b) throw ParseError(line.number, "tree edge is a loop");
      if (!seen.insert(canonical(a, b)).second) throw ParseError(line.number, "duplicate tree edge");
      td.tree_edges.push_back(canonical(a, b));
    } else {
      throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    }
  }
  for (int id = 0; id < count; ++id) {
    if (!defined[id]) throw ParseError(reader.last_line(), "bag " + std::to_string(id) + " never defined");
  }
  if (count > 0 && static_cast<int>(td.tree_edges.size()) != count - 1) {
    throw ParseError(reader.last_line(), "bag tree needs exactly " + std::to_string(count - 1) + " edges");
  }
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  if (td.width() != width) {
    throw ParseError(h.number, "declared width " + std::to_string(width) + " but largest bag gives " +
                                   std::to_string(td.width()));
  }
  return td;
}

std::string emit_tree_decomposition(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "td " << td.bags.size() << ' ' << td.width() << '\n';
  for (std::size_t id = 0; id < td.bags.size(); ++id) {
    out << "b " << id;
    for (int v : td.bags[id]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& e : td.tree_edges) out << "t " << e.u << ' ' << e.v << '\n';
  return out.str();
}

T2atcInstance parse_t2atc(std::string_view text) {
  LineReader reader(text);
  const auto& h = header(reader, "tasks");
  expect_fields(h, 4);
  T2atcInstance inst;
  inst.agents = nonnegative(h, 1, "agent count");
  int declared = nonnegative(h, 2, "task count");
  inst.slots = to_int(h, 3);
  if (inst.slots != 2) {
    throw UnsupportedInstance("line " + std::to_string(h.number) + ": only k = 2 time slots are supported, got k = " +
                              std::to_string(inst.slots));
  }
  std::set<Edge> seen;
  for (std::size_t i = 1; i < reader.lines().size(); ++i) {
    const auto& line = reader.lines()[i];
    if (line.tokens[0] != "task") throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    if (line.tokens.size() != 3) {
      throw UnsupportedInstance("line " + std::to_string(line.number) + ": only two-agent tasks are supported, got " +
                                std::to_string(line.tokens.size() - 1) + " agents");
    }
    int a = to_int(line, 1);
    int b = to_int(line, 2);
    check_range(line, a, inst.agents, "agent");
    check_range(line, b, inst.agents, "agent");
    if (a == b) throw ParseError(line.number, "a task needs two distinct agents");
    if (!seen.insert(canonical(a, b)).second) throw ParseError(line.number, "duplicate task");
    inst.tasks.push_back(canonical(a, b));
  }
  if (static_cast<int>(inst.tasks.size()) != declared) {
    throw ParseError(reader.last_line(), "header declares " + std::to_string(declared) + " tasks, found " +
                                             std::to_string(inst.tasks.size()));
  }
  std::sort(inst.tasks.begin(), inst.tasks.end());
  return inst;
}

std::string emit_t2atc(const T2atcInstance& inst) {
  std::ostringstream out;
  out << "tasks " << inst.agents << ' ' << inst.tasks.size() << ' ' << inst.slots << '\n';
  for (const auto& t : inst.tasks) out << "task " << t.u << ' ' << t.v << '\n';
  return out.str();
}

bool looks_like_t2atc(std::string_view text) {
  LineReader reader(text);
  return !reader.lines().empty() && reader.lines().front().tokens[0] == "tasks";
}

Graph t2atc_to_graph(const T2atcInstance& inst) {
  if (inst.slots != 2) throw UnsupportedInstance("only k = 2 time slots are supported");
  return Graph(inst.agents, inst.tasks);
}

WelfareReport sw_report(int value) { return {value, 2 * value}; }

std::string emit_certificate(std::span<const int> removed, const EdgeColoring& witness) {
  std::ostringstream out;
  out << "X:";
  for (int x : removed) out << ' ' << x;
  out << '\n' << emit_coloring(witness);
  return out.str();
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace mec2
