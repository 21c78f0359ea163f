#include "mec2/dense.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mec2/branch_dp.hpp"
#include "mec2/cyclespace.hpp"
#include "mec2/decomposition.hpp"
#include "mec2/error.hpp"
#include "mec2/matching.hpp"
#include "mec2/oracle.hpp"

namespace mec2 {

bool dense_applies(const Graph& g) {
  const int n = g.vertex_count();
  return n >= 3 && 2 * min_degree(g) >= n;
}

std::vector<int> ore_hamiltonian_cycle(const Graph& g) {
  if (!dense_applies(g)) throw PreconditionError("ore_hamiltonian_cycle: needs n >= 3 and min degree >= n/2");
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  for (int round = 0; round <= n; ++round) {
    int gap = -1;
    for (int i = 0; i < n; ++i) {
      if (!adj[cyc[i]][cyc[(i + 1) % n]]) {
        gap = i;
        break;
      }
    }
    if (gap < 0) return cyc;
    // Put the gap between the last and first positions.
    std::rotate(cyc.begin(), cyc.begin() + (gap + 1) % n, cyc.end());
    // deg(first) + deg(last) >= n forces a crossing pair.
    int j = -1;
    for (int i = 1; i <= n - 3; ++i) {
      if (adj[cyc[0]][cyc[i + 1]] && adj[cyc[n - 1]][cyc[i]]) {
        j = i;
        break;
      }
    }
    if (j < 0) throw std::logic_error("ore_hamiltonian_cycle: no crossing pair");
    std::reverse(cyc.begin() + j + 1, cyc.end());
  }
  throw std::logic_error("ore_hamiltonian_cycle: did not converge");
}

Solution solve_dense(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Solution sol{0, EdgeColoring(m)};
  if (n <= 2) {
    if (m == 1) {
      sol.value = 1;
      sol.coloring.colors[0] = 1;
    }
    return sol;
  }
  if (dense_applies(g)) {
    auto cyc = ore_hamiltonian_cycle(g);
    int used = n % 2 == 0 ? n : n - 1;
    for (int i = 0; i < used; ++i) {
      int e = *g.edge_index(cyc[i], cyc[(i + 1) % n]);
      sol.coloring.colors[e] = static_cast<std::uint8_t>(1 + i % 2);
    }
    sol.value = used;
    return sol;
  }
  OracleLimits limits;
  if (m > limits.max_edges_k2) {
    throw Refusal("dense: graph is not dense and has " + std::to_string(m) + " edges, oracle limit " +
                      std::to_string(limits.max_edges_k2),
                  "--engine cyclespace or --engine branchdp");
  }
  return nu2_brute(g, limits);
}

std::string choose_engine(const Graph& h, const DispatchOptions& options) {
  if (logedge_applies(h)) return "logedge";
  if (dense_applies(h)) return "dense";
  if (static_cast<int>(feedback_edge_set(h).edges.size()) <= options.feedback_threshold) return "cyclespace";
  return "branchdp";
}

DispatchResult dispatch(const Graph& g, const DispatchOptions& options) {
  DispatchResult out;
  out.solution = {0, EdgeColoring(g.edge_count())};
  for (const auto& comp : components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    const Graph& h = sub.graph;
    if (h.edge_count() == 0) continue;
    std::string engine = choose_engine(h, options);
    Solution part;
    if (engine == "logedge") {
      part = solve_logedge(h);
    } else if (engine == "dense") {
      part = solve_dense(h);
    } else if (engine == "cyclespace") {
      CyclespaceOptions co;
      co.max_feedback = options.feedback_threshold;
      co.threads = options.threads;
      part = solve_cyclespace(h, co);
    } else {
      part = solve_branchdp(h, heuristic_branch_decomposition(h));
    }
    out.solution.value += part.value;
    for (int i = 0; i < h.edge_count(); ++i) out.solution.coloring.colors[sub.edge_map[i]] = part.coloring.colors[i];
    out.engines.push_back(engine);
    if (out.tag.find(engine) == std::string::npos) out.tag += (out.tag.empty() ? "" : "+") + engine;
  }
  if (out.tag.empty()) out.tag = "none";
  return out;
}

bool decide_nu2_at_least(const Graph& g, int t) {
  if (t < 0) throw PreconditionError("decide_nu2_at_least: t must be non-negative");
  if (static_cast<int>(max_matching(g).size()) >= t) return true;
  return dispatch(g).solution.value >= t;
}

}  // namespace mec2
