#pragma once

#include <cstdint>
#include <vector>

#include "mec2/coloring.hpp"
#include "mec2/graph.hpp"

namespace mec2 {

/// Non-tree edges of the spanning forest grown by scanning edges in index
/// order. |edges| = m - n + #components.
struct FeedbackEdgeSet {
  std::vector<int> edges;     // ascending
  std::vector<char> in_set;   // per edge
};

FeedbackEdgeSet feedback_edge_set(const Graph& g);

struct CyclespaceOptions {
  int max_feedback = 20;
  int threads = 1;
  bool verify_each_guess = false;  // assemble and validate every surviving guess
};

struct CyclespaceStats {
  int feedback_size = 0;
  std::uint64_t guesses_visited = 0;
  std::uint64_t guesses_feasible = 0;
};

/// Tries all 3^|F| colorings of the feedback edges. A guess survives if no
/// vertex sees a true color twice on F; the tree edges are then solved by the
/// forest DP with w(x) = {0,1,2} minus the true colors of F-edges at x.
/// The first optimum in base-3 guess order wins, whatever the thread count.
/// Throws Refusal when |F| > options.max_feedback.
Solution solve_cyclespace(const Graph& g, const CyclespaceOptions& options = {},
                          CyclespaceStats* stats = nullptr);

/// Connected and m <= n + log2(n).
bool logedge_applies(const Graph& g);

/// solve_cyclespace for the polynomial case above; PreconditionError otherwise.
Solution solve_logedge(const Graph& g, CyclespaceStats* stats = nullptr);

}  // namespace mec2
