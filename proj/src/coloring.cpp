#include "mec2/coloring.hpp"

#include <algorithm>

#include "mec2/error.hpp"

namespace mec2 {

int EdgeColoring::value() const {
  return static_cast<int>(std::count_if(colors.begin(), colors.end(), [](auto c) { return c != kUncolored; }));
}

std::string Violation::describe() const {
  if (kind == Kind::bad_color) {
    return "edge " + std::to_string(first_edge) + " has color " + std::to_string(color) + " outside {0,1,2}";
  }
  return "vertex " + std::to_string(vertex) + " has color " + std::to_string(color) + " on edges " +
         std::to_string(first_edge) + " and " + std::to_string(second_edge);
}

std::optional<Violation> find_violation(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != g.edge_count()) {
    throw InputError("coloring has " + std::to_string(c.size()) + " entries, graph has " +
                     std::to_string(g.edge_count()) + " edges");
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (c.colors[i] > 2) return Violation{Violation::Kind::bad_color, -1, c.colors[i], i, -1};
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    int seen[3] = {-1, -1, -1};
    for (const auto& inc : g.incident(v)) {
      int col = c.colors[inc.edge];
      if (col == kUncolored) continue;
      if (seen[col] >= 0) {
        return Violation{Violation::Kind::repeated_color, v, col, std::min(seen[col], inc.edge),
                         std::max(seen[col], inc.edge)};
      }
      seen[col] = inc.edge;
    }
  }
  return std::nullopt;
}

bool validate_coloring(const Graph& g, const EdgeColoring& c) { return !find_violation(g, c).has_value(); }

std::optional<EdgeColoring> two_edge_color(const Graph& g, std::span<const char> keep) {
  Subgraph sub;
  if (keep.empty()) {
    std::vector<char> all(g.edge_count(), 1);
    sub = spanning_subgraph(g, all);
  } else {
    sub = spanning_subgraph(g, keep);
  }
  if (!is_2ec_feasible(sub.graph)) return std::nullopt;
  EdgeColoring out(g.edge_count());
  for (const auto& t : trails(sub.graph)) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      out.colors[sub.edge_map[t.edges[i]]] = static_cast<std::uint8_t>(1 + i % 2);
    }
  }
  return out;
}

}  // namespace mec2
