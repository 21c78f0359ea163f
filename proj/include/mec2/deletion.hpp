#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

/// Removed edges or vertices plus a coloring of g that is 0 exactly on the
/// removed edges (or the edges touching removed vertices) and true elsewhere.
struct DeletionCertificate {
  std::vector<int> removed;  // ascending
  EdgeColoring witness;
};

bool check_edge_certificate(const Graph& g, const DeletionCertificate& cert);
bool check_vertex_certificate(const Graph& g, const DeletionCertificate& cert);

// ---- edge deletion ----

/// Host with max degree 2; edges in e1 must get color 1 and edges in e2 color
/// 2 unless deleted. Edges in both are deleted up front.
struct ConstrainedPathInstance {
  Graph host;
  std::vector<char> in_e1;
  std::vector<char> in_e2;
};

/// Smallest deletion set. On paths, constrained edges are scanned left to
/// right and the right edge of every conflicting consecutive pair is removed.
/// Cycles are cut at a conflict-free gap when one exists; otherwise every
/// second constrained edge goes (plus the last one when their count is odd).
/// Throws PreconditionError when the host has a vertex of degree > 2.
DeletionCertificate solve_constrained_paths(const ConstrainedPathInstance& inst);

/// Deletion set of size <= k avoiding the edges in `keep`, given that g - keep
/// is already 2-edge-colorable. Tries both colorings of each component of
/// g[keep] and solves the forced-color instance left on the other edges.
std::optional<DeletionCertificate> solve_disjoint_edges(const Graph& g, std::span<const int> keep, int k);

/// At most k edges whose removal leaves a 2-edge-colorable graph, by
/// iterative compression over edges in index order.
std::optional<DeletionCertificate> solve_edge_deletion(const Graph& g, int k);

// ---- vertex deletion ----

/// An undeletable outside vertex joined to `roots` by edges that must all
/// carry `color` (1 or 2).
struct Pendant {
  std::vector<int> roots;
  int color = 1;
};

struct PendantInstance {
  Graph core;  // max degree 2
  std::vector<Pendant> pendants;
};

struct PendantSolution {
  std::vector<int> removed;  // core vertices, ascending
  EdgeColoring core_coloring;
};

/// Smallest removal set when every pendant has exactly one root, no core
/// vertex carries two pendants and the core vertices of degree three are
/// pairwise non-adjacent. Exact linear DP along each path or cycle.
PendantSolution solve_pendant_paths(const PendantInstance& inst);

/// General pendants: at most one root of a multi-root pendant may survive, so
/// the removed roots are guessed (smallest sets first) before the DP runs.
std::optional<PendantSolution> solve_pendant_general(const PendantInstance& inst, int k);

/// At most k vertices outside `keep` whose removal leaves g 2-edge-colorable,
/// given that g - keep already is.
std::optional<DeletionCertificate> solve_disjoint_vertices(const Graph& g, std::span<const int> keep, int k);

/// At most k vertices, by iterative compression over vertices in index order.
std::optional<DeletionCertificate> solve_vertex_deletion(const Graph& g, int k);

/// Smallest certificates via budget doubling followed by binary search.
DeletionCertificate minimize_edge_deletion(const Graph& g);
DeletionCertificate minimize_vertex_deletion(const Graph& g);

}  // namespace mec2
