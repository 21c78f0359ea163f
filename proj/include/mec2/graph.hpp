#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mec2 {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

struct Incidence {
  int neighbor;
  int edge;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically: every pair has u < v and the list is sorted
/// lexicographically, so edge indices 0..m-1 follow that order. Construction
/// rejects loops, duplicate pairs and out-of-range endpoints with InputError.
/// Instances are immutable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  std::span<const Incidence> incident(int v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<int> edge_index(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> incidence_;
};

/// A graph carved out of a parent graph, with index maps back to the parent.
/// Vertex relabeling is monotone, so edge_map is ascending.
struct Subgraph {
  Graph graph;
  std::vector<int> vertex_map;  // local vertex -> parent vertex
  std::vector<int> edge_map;    // local edge -> parent edge
};

/// Subgraph induced by `vertices` (any order, duplicates ignored).
Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Subgraph on all parent vertices (same labels) keeping only edges with keep[i].
Subgraph spanning_subgraph(const Graph& g, std::span<const char> keep);

std::vector<int> degrees(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_cubic(const Graph& g);

/// Connected components; each is sorted, components are ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// Component id per vertex, ids assigned in order of smallest vertex.
std::vector<int> component_ids(const Graph& g);

bool is_acyclic(const Graph& g);

/// True iff g is 2-edge-colorable: max degree <= 2 and no component is an odd cycle.
bool is_2ec_feasible(const Graph& g);

/// Walk order of the edges of a component with max degree <= 2.
///
/// Paths start at their lower-numbered end; cycles start at their lowest
/// vertex and leave it along the lower-indexed edge. `cycle` tells which case.
struct Trail {
  std::vector<int> vertices;  // for cycles the start vertex is not repeated
  std::vector<int> edges;
  bool cycle = false;
};

/// Decomposes a graph with max degree <= 2 into trails, one per component
/// that has at least one edge. Throws PreconditionError if some degree > 2.
std::vector<Trail> trails(const Graph& g);

}  // namespace mec2
