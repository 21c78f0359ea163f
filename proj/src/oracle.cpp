#include "mec2/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "mec2/error.hpp"

namespace mec2 {
namespace {

using Mask = std::uint64_t;

void guard(bool ok, const std::string& what, int size, int limit) {
  if (!ok) {
    throw Refusal("oracle refuses " + what + " of size " + std::to_string(size) + " (limit " + std::to_string(limit) + ")",
                  "--engine auto");
  }
  if (size > 63) throw Refusal("oracle cannot index more than 63 elements", "--engine auto");
}

// Steps `idx` to the next size-|idx| combination of 0..m-1 in lexicographic order.
bool next_combination(std::vector<int>& idx, int m) {
  int s = static_cast<int>(idx.size());
  int i = s - 1;
  while (i >= 0 && idx[i] == m - s + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

Mask mask_of(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << i;
  return m;
}

// Max degree <= 2 and no odd-cycle component, on the edges in `subset`.
class TwoColorCheck {
 public:
  explicit TwoColorCheck(const Graph& g) : g_(g), parent_(g.vertex_count()), deg_(g.vertex_count()),
                                            vertices_(g.vertex_count()), edges_(g.vertex_count()) {}

  bool feasible(Mask subset) {
    std::fill(deg_.begin(), deg_.end(), 0);
    for (Mask s = subset; s; s &= s - 1) {
      const auto& e = g_.edge(std::countr_zero(s));
      if (++deg_[e.u] > 2 || ++deg_[e.v] > 2) return false;
    }
    std::iota(parent_.begin(), parent_.end(), 0);
    std::fill(vertices_.begin(), vertices_.end(), 1);
    std::fill(edges_.begin(), edges_.end(), 0);
    for (Mask s = subset; s; s &= s - 1) {
      const auto& e = g_.edge(std::countr_zero(s));
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        parent_[b] = a;
        vertices_[a] += vertices_[b];
        edges_[a] += edges_[b];
      }
      ++edges_[a];
    }
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (parent_[v] == v && edges_[v] == vertices_[v] && vertices_[v] % 2 == 1) return false;
    }
    return true;
  }

 private:
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  const Graph& g_;
  std::vector<int> parent_, deg_, vertices_, edges_;
};

// Proper k-edge-coloring of the edges in `subset` by backtracking. Colors are
// introduced in order, so the first edge always gets color 1.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k) : g_(g), k_(k) {}

  bool color(Mask subset, std::vector<int>& colors) {
    std::vector<int> deg(g_.vertex_count(), 0);
    for (Mask s = subset; s; s &= s - 1) {
      const auto& e = g_.edge(std::countr_zero(s));
      if (++deg[e.u] > k_ || ++deg[e.v] > k_) return false;
    }
    order_.clear();
    // Breadth-first over shared endpoints so each edge meets colored neighbors early.
    std::vector<char> placed(g_.edge_count(), 0);
    for (Mask s = subset; s; s &= s - 1) {
      int start = std::countr_zero(s);
      if (placed[start]) continue;
      placed[start] = 1;
      std::size_t head = order_.size();
      order_.push_back(start);
      while (head < order_.size()) {
        const auto& e = g_.edge(order_[head++]);
        for (int end : {e.u, e.v}) {
          for (const auto& inc : g_.incident(end)) {
            if (((subset >> inc.edge) & 1) && !placed[inc.edge]) {
              placed[inc.edge] = 1;
              order_.push_back(inc.edge);
            }
          }
        }
      }
    }
    colors.assign(g_.edge_count(), 0);
    return extend(0, 0, subset, colors);
  }

 private:
  bool extend(std::size_t pos, int used, Mask subset, std::vector<int>& colors) {
    if (pos == order_.size()) return true;
    int e = order_[pos];
    const auto& ed = g_.edge(e);
    unsigned blocked = 0;
    for (int end : {ed.u, ed.v}) {
      for (const auto& inc : g_.incident(end)) {
        if (((subset >> inc.edge) & 1) && colors[inc.edge]) blocked |= 1u << colors[inc.edge];
      }
    }
    int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (blocked & (1u << c)) continue;
      colors[e] = c;
      if (extend(pos + 1, std::max(used, c), subset, colors)) return true;
    }
    colors[e] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> order_;
};

}  // namespace

KColoring nu_k_brute(const Graph& g, int k, const OracleLimits& limits) {
  if (k < 1) throw PreconditionError("nu_k_brute: k must be at least 1");
  int m = g.edge_count();
  int limit = k == 2 ? limits.max_edges_k2 : limits.max_edges_k3;
  guard(m <= limit, "a graph", m, limit);

  TwoColorCheck two(g);
  KColorSearch search(g, k);
  std::vector<int> colors;
  for (int size = m; size >= 0; --size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      Mask subset = mask_of(idx);
      if (k == 2) {
        if (!two.feasible(subset)) continue;
        std::vector<char> keep(m, 0);
        for (int i : idx) keep[i] = 1;
        auto c = two_edge_color(g, keep);
        return {size, std::vector<int>(c->colors.begin(), c->colors.end())};
      }
      if (search.color(subset, colors)) return {size, colors};
    } while (next_combination(idx, m));
  }
  return {0, std::vector<int>(m, 0)};
}

Solution nu2_brute(const Graph& g, const OracleLimits& limits) {
  auto r = nu_k_brute(g, 2, limits);
  Solution s{r.value, EdgeColoring(g.edge_count())};
  for (int i = 0; i < g.edge_count(); ++i) s.coloring.colors[i] = static_cast<std::uint8_t>(r.colors[i]);
  return s;
}

int min_edge_deletion_brute(const Graph& g, const OracleLimits& limits) {
  int m = g.edge_count();
  guard(m <= limits.max_edges_deletion, "an edge-deletion instance", m, limits.max_edges_deletion);
  TwoColorCheck two(g);
  Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      if (two.feasible(all & ~mask_of(idx))) return size;
    } while (next_combination(idx, m));
  }
  return m;
}

int min_vertex_deletion_brute(const Graph& g, const OracleLimits& limits) {
  int n = g.vertex_count();
  guard(n <= limits.max_vertices_deletion, "a vertex-deletion instance", n, limits.max_vertices_deletion);
  if (g.edge_count() > 63) throw Refusal("oracle cannot index more than 63 edges", "--engine auto");
  TwoColorCheck two(g);
  for (int size = 0; size <= n; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<char> gone(n, 0);
      for (int v : idx) gone[v] = 1;
      Mask residual = 0;
      for (int i = 0; i < g.edge_count(); ++i) {
        if (!gone[g.edge(i).u] && !gone[g.edge(i).v]) residual |= Mask{1} << i;
      }
      if (two.feasible(residual)) return size;
    } while (next_combination(idx, n));
  }
  return n;
}

bool check_cubic_inequality(const Graph& g, const OracleLimits& limits) {
  if (!is_cubic(g)) throw PreconditionError("check_cubic_inequality: graph is not cubic");
  int nu2 = nu_k_brute(g, 2, limits).value;
  int nu3 = nu_k_brute(g, 3, limits).value;
  return 4 * nu2 <= g.vertex_count() + 2 * nu3;
}

}  // namespace mec2
