#pragma once

#include <string>
#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

/// True when n >= 3 and every degree is at least n/2.
bool dense_applies(const Graph& g);

/// Hamiltonian cycle by rotation: start from 0..n-1 read cyclically and remove
/// one non-adjacent consecutive pair per round by reversing a segment.
/// Throws PreconditionError unless dense_applies(g).
std::vector<int> ore_hamiltonian_cycle(const Graph& g);

/// Alternates colors around the Hamiltonian cycle (dropping one edge when n is
/// odd) on dense graphs; n <= 2 is read off directly; anything else goes to the
/// brute-force oracle, which refuses past 20 edges.
Solution solve_dense(const Graph& g);

struct DispatchOptions {
  int feedback_threshold = 18;
  int threads = 1;
};

struct DispatchResult {
  Solution solution;
  std::vector<std::string> engines;  // per component with at least one edge
  std::string tag;                   // distinct engines joined by '+', "none" without edges
};

/// Engine dispatch would pick for one connected graph with at least one edge.
std::string choose_engine(const Graph& component, const DispatchOptions& options = {});

/// Per component: logedge if m <= n + log2 n, else dense if dense_applies,
/// else cyclespace if |F| <= feedback_threshold, else branchdp on the
/// heuristic decomposition.
DispatchResult dispatch(const Graph& g, const DispatchOptions& options = {});

/// nu_2(g) >= t. A matching of size t already settles it; otherwise dispatch
/// decides. Throws PreconditionError for t < 0.
bool decide_nu2_at_least(const Graph& g, int t);

}  // namespace mec2
