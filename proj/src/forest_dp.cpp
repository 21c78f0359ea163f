#include "mec2/forest_dp.hpp"

#include <array>
#include <climits>
#include <cstdint>
#include <string>

#include "mec2/error.hpp"

namespace mec2 {
namespace {

constexpr int kNeg = INT_MIN / 4;

int profit(int c) { return c == 0 ? 0 : 1; }

// Color c may join child-edge set A at a vertex: the dummy repeats freely.
bool fits(unsigned a, int c) { return c == 0 || !((a >> c) & 1u); }

}  // namespace

ColorAllowance full_allowance(int vertex_count) {
  return ColorAllowance(vertex_count, ColorSet::all());
}

Solution solve_forest(const Graph& g) { return solve_forest(g, full_allowance(g.vertex_count())); }

Solution solve_forest(const Graph& g, const ColorAllowance& w) {
  const int n = g.vertex_count();
  if (static_cast<int>(w.size()) != n) throw PreconditionError("solve_forest: allowance size differs from n");
  for (int v = 0; v < n; ++v) {
    if (!w[v].contains(0)) throw PreconditionError("solve_forest: allowance of vertex " + std::to_string(v) + " lacks 0");
  }
  if (!is_acyclic(g)) throw PreconditionError("solve_forest: graph has a cycle");

  // Breadth-first from the lowest vertex of each component; reversed, it is a
  // valid bottom-up order.
  std::vector<int> parent(n, -1), parent_edge(n, -1), order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      int u = order[head++];
      for (const auto& inc : g.incident(u)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        parent[inc.neighbor] = u;
        parent_edge[inc.neighbor] = inc.edge;
        order.push_back(inc.neighbor);
      }
    }
  }

  std::vector<std::array<int, 8>> f(n);
  // Per child v: best own set C for each color on the edge to its parent, and
  // for the parent's fold step, which (previous set, color) produced each set.
  std::vector<std::array<std::int8_t, 3>> best_c(n);
  std::vector<std::array<std::int8_t, 8>> back_a(n), back_col(n);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    std::array<int, 8> h;
    h.fill(kNeg);
    h[0] = 0;
    for (const auto& inc : g.incident(u)) {
      int v = inc.neighbor;
      if (parent[v] != u || parent_edge[v] != inc.edge) continue;
      std::array<int, 3> gv{kNeg, kNeg, kNeg};
      for (int c = 0; c < 3; ++c) {
        best_c[v][c] = -1;
        if (!w[v].contains(c) || !w[u].contains(c)) continue;
        for (unsigned cs = 0; cs < 8; ++cs) {
          if (f[v][cs] == kNeg || !fits(cs, c)) continue;
          if (f[v][cs] + profit(c) > gv[c]) {
            gv[c] = f[v][cs] + profit(c);
            best_c[v][c] = static_cast<std::int8_t>(cs);
          }
        }
      }
      std::array<int, 8> next;
      next.fill(kNeg);
      back_a[v].fill(-1);
      back_col[v].fill(-1);
      for (unsigned a = 0; a < 8; ++a) {
        if (h[a] == kNeg) continue;
        for (int c = 0; c < 3; ++c) {
          if (gv[c] == kNeg || !fits(a, c)) continue;
          unsigned na = a | (1u << c);
          if (h[a] + gv[c] > next[na]) {
            next[na] = h[a] + gv[c];
            back_a[v][na] = static_cast<std::int8_t>(a);
            back_col[v][na] = static_cast<std::int8_t>(c);
          }
        }
      }
      h = next;
    }
    f[u] = h;
  }

  Solution sol{0, EdgeColoring(g.edge_count())};
  std::vector<int> target(n, -1);
  for (int u : order) {
    if (parent[u] < 0) {
      int best = 0;
      for (int a = 1; a < 8; ++a) {
        if (f[u][a] > f[u][best]) best = a;
      }
      target[u] = best;
      sol.value += f[u][best];
    }
    // Unwind the fold: the last child is peeled off first.
    unsigned a = static_cast<unsigned>(target[u]);
    auto inc = g.incident(u);
    for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
      int v = it->neighbor;
      if (parent[v] != u || parent_edge[v] != it->edge) continue;
      int c = back_col[v][a];
      sol.coloring.colors[it->edge] = static_cast<std::uint8_t>(c);
      target[v] = best_c[v][c];
      a = static_cast<unsigned>(back_a[v][a]);
    }
  }
  return sol;
}

}  // namespace mec2
