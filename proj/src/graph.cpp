#include "mec2/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mec2/error.hpp"

namespace mec2 {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }

  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < edge_count(); ++i) {
    const auto& e = edges_[i];
    incidence_[fill[e.u]++] = {e.v, i};
    incidence_[fill[e.v]++] = {e.u, i};
  }
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (int v : vertices) local[v] = 0;
  Subgraph sub;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (local[v] == 0) {
      local[v] = static_cast<int>(sub.vertex_map.size());
      sub.vertex_map.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v]});
      sub.edge_map.push_back(i);
    }
  }
  sub.graph = Graph(static_cast<int>(sub.vertex_map.size()), std::move(edges));
  return sub;
}

Subgraph spanning_subgraph(const Graph& g, std::span<const char> keep) {
  Subgraph sub;
  sub.vertex_map.resize(g.vertex_count());
  std::iota(sub.vertex_map.begin(), sub.vertex_map.end(), 0);
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (keep[i]) {
      edges.push_back(g.edge(i));
      sub.edge_map.push_back(i);
    }
  }
  sub.graph = Graph(g.vertex_count(), std::move(edges));
  return sub;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

int min_degree(const Graph& g) {
  int best = g.vertex_count() == 0 ? 0 : g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> id(g.vertex_count(), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (id[s] >= 0) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (id[inc.neighbor] < 0) {
          id[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<std::vector<int>> components(const Graph& g) {
  auto id = component_ids(g);
  int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < g.vertex_count(); ++v) out[id[v]].push_back(v);
  return out;
}

bool is_acyclic(const Graph& g) {
  auto id = component_ids(g);
  int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  return g.edge_count() == g.vertex_count() - count;
}

bool is_2ec_feasible(const Graph& g) {
  if (max_degree(g) > 2) return false;
  auto id = component_ids(g);
  int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<int> vertices(count, 0), edges(count, 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++vertices[id[v]];
  for (const auto& e : g.edges()) ++edges[id[e.u]];
  // With max degree 2 a component with as many edges as vertices is a cycle.
  for (int c = 0; c < count; ++c) {
    if (edges[c] == vertices[c] && vertices[c] % 2 == 1) return false;
  }
  return true;
}

std::vector<Trail> trails(const Graph& g) {
  if (max_degree(g) > 2) throw PreconditionError("trails: max degree exceeds 2");
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Trail> out;

  auto walk = [&](int start, int first_edge, Trail& t) {
    int v = start;
    int e = first_edge;
    seen[v] = 1;
    t.vertices.push_back(v);
    while (e >= 0) {
      t.edges.push_back(e);
      const auto& ed = g.edge(e);
      int w = ed.u == v ? ed.v : ed.u;
      if (w == start) {
        t.cycle = true;
        break;
      }
      seen[w] = 1;
      t.vertices.push_back(w);
      int next = -1;
      for (const auto& inc : g.incident(w)) {
        if (inc.edge != e) next = inc.edge;
      }
      v = w;
      e = next;
    }
  };

  // Paths first from their lower end, in vertex order, so ends are found before interiors.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen[v] || g.degree(v) != 1) continue;
    Trail t;
    walk(v, g.incident(v)[0].edge, t);
    out.push_back(std::move(t));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen[v] || g.degree(v) != 2) continue;
    auto inc = g.incident(v);
    Trail t;
    walk(v, std::min(inc[0].edge, inc[1].edge), t);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const Trail& a, const Trail& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });
  return out;
}

}  // namespace mec2
