#pragma once

#include <vector>

#include "mec2/graph.hpp"

namespace mec2 {

/// Maximum-cardinality matching (Edmonds' blossom algorithm, O(n^3)).
/// Returns matched edge indices in ascending order.
std::vector<int> max_matching(const Graph& g);

}  // namespace mec2
