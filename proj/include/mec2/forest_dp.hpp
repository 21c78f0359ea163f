#pragma once

#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

/// Allowed colors per vertex. Every entry must contain the dummy color 0.
using ColorAllowance = std::vector<ColorSet>;

ColorAllowance full_allowance(int vertex_count);

/// Maximum 2-edge-colorable subgraph of a forest where every color at u
/// (0 included) lies in w[u]. Linear in n: each vertex folds its children in
/// one at a time into an 8-entry table indexed by the set of child-edge colors.
/// Roots are the lowest vertex of each component, children are visited in
/// ascending order. Throws PreconditionError on cycles or if some w[u] lacks 0.
Solution solve_forest(const Graph& g, const ColorAllowance& w);
Solution solve_forest(const Graph& g);

}  // namespace mec2
