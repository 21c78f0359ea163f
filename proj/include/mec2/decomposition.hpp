#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mec2/graph.hpp"

namespace mec2 {

/// Unrooted branch decomposition: a tree whose internal nodes have degree 3
/// and whose leaves are in bijection with the graph's edges.
struct BranchDecomposition {
  int node_count = 0;
  std::vector<Edge> tree_edges;  // canonical: a < b, sorted
  std::vector<int> leaf_edge;    // per node: graph edge index, -1 on internal nodes
  int width = 0;                 // declared or computed, see validate_branch_decomposition

  bool operator==(const BranchDecomposition&) const = default;
};

/// Rooted binary form obtained by subdividing the lexicographically smallest
/// tree edge with a fresh root node. Children are ordered left = lower index.
struct RootedBranchForm {
  struct Node {
    int left = -1;
    int right = -1;
    int edge = -1;            // graph edge on leaves
    std::vector<int> border;  // sorted graph vertices
  };
  std::vector<Node> nodes;
  std::vector<int> post_order;
  int root = -1;
};

/// Checks tree shape and leaf bijection only. Throws InputError naming the
/// first violated invariant.
void check_branch_structure(const BranchDecomposition& bd);

RootedBranchForm root_branch_decomposition(const Graph& g, const BranchDecomposition& bd);

/// Largest border over all tree edges.
int branch_width(const Graph& g, const BranchDecomposition& bd);

/// Full validation against g, including that the declared width equals the
/// computed one. Throws InputError listing the violated invariant.
void validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd);

/// Builds a decomposition by recursive edge bisection: each edge set is split
/// along a breadth-first order over shared endpoints, trying a few seeds and
/// keeping the split with the smallest border. Requires m >= 1.
BranchDecomposition heuristic_branch_decomposition(const Graph& g);

/// Caterpillar over the given edge order (a permutation of 0..m-1).
BranchDecomposition caterpillar_branch_decomposition(const Graph& g, std::span<const int> order);

/// Uniformly random merge tree, deterministic for a seed.
BranchDecomposition random_branch_decomposition(const Graph& g, std::uint64_t seed);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted
  std::vector<Edge> tree_edges;        // canonical: a < b, sorted

  int width() const;
  bool operator==(const TreeDecomposition&) const = default;
};

/// Checks that the bag tree is a tree and that vertex coverage, edge coverage
/// and connected occurrence hold. Throws InputError on the first failure.
void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Tree decomposition from a min-degree elimination ordering.
TreeDecomposition min_degree_tree_decomposition(const Graph& g);

/// Converts a valid tree decomposition of width w into a branch decomposition
/// of width at most w + 1. Every edge is hung below the first bag containing
/// both endpoints; each bag's pieces are folded into a binary tree.
BranchDecomposition treedecomp_to_branchdecomp(const TreeDecomposition& td, const Graph& g);

}  // namespace mec2
