#pragma once

#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

/// Size guards for the exhaustive solvers. The defaults keep every call
/// desk-scale; callers that know their instances are benign may widen them.
struct OracleLimits {
  int max_edges_k2 = 20;
  int max_edges_k3 = 16;
  int max_edges_deletion = 18;
  int max_vertices_deletion = 12;
};

struct KColoring {
  int value = 0;
  std::vector<int> colors;  // per edge, 0 = uncolored, else 1..k
};

/// Maximum k-edge-colorable subgraph by subset enumeration in decreasing size.
/// The witness is the first feasible subset in lexicographic combination
/// order. k = 2 tests feasibility structurally; k >= 3 backtracks over colors.
/// Throws Refusal when m exceeds the guard for this k.
KColoring nu_k_brute(const Graph& g, int k, const OracleLimits& limits = {});

/// nu_k_brute for k = 2, as an EdgeColoring.
Solution nu2_brute(const Graph& g, const OracleLimits& limits = {});

/// Smallest edge set whose removal leaves a 2-edge-colorable graph.
int min_edge_deletion_brute(const Graph& g, const OracleLimits& limits = {});

/// Smallest vertex set whose removal leaves a 2-edge-colorable graph.
int min_vertex_deletion_brute(const Graph& g, const OracleLimits& limits = {});

/// For cubic g: nu_2 <= (n + 2 nu_3) / 4, both sides from nu_k_brute.
/// Throws PreconditionError for non-cubic input.
bool check_cubic_inequality(const Graph& g, const OracleLimits& limits = {});

}  // namespace mec2
