#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/decomposition.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

struct BranchDpOptions {
  int max_width = 7;  // 7^7 entries per table
};

struct BranchDpStats {
  int width = 0;
  std::vector<int> border_size;           // per rooted node
  std::vector<std::size_t> table_entries; // per rooted node, always 7^border
  std::vector<std::size_t> live_entries;  // entries with a finite value
  std::uint64_t merge_pairs = 0;          // compatible (B, C) pairs combined
};

/// Dynamic program over the rooted form of bd. A table entry assigns every
/// border vertex a nonempty subset of {0,1,2}: the colors its edges below the
/// node use. Children merge when their sets share no true color at common
/// vertices. Throws InputError for an invalid bd and Refusal when the width
/// exceeds options.max_width.
Solution solve_branchdp(const Graph& g, const BranchDecomposition& bd, const BranchDpOptions& options = {},
                        BranchDpStats* stats = nullptr);

}  // namespace mec2
