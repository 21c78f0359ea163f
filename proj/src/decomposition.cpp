#include "mec2/decomposition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "mec2/error.hpp"
#include "mec2/random.hpp"

namespace mec2 {
namespace {

std::vector<std::vector<int>> tree_adjacency(int nodes, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// Checks that `edges` form a spanning tree on 0..nodes-1.
void check_tree(int nodes, const std::vector<Edge>& edges, const char* what) {
  if (static_cast<int>(edges.size()) != std::max(nodes - 1, 0)) {
    throw InputError(std::string(what) + ": expected " + std::to_string(std::max(nodes - 1, 0)) +
                     " tree edges, found " + std::to_string(edges.size()));
  }
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= nodes || e.v >= nodes) {
      throw InputError(std::string(what) + ": tree edge endpoint out of range");
    }
    if (e.u == e.v) throw InputError(std::string(what) + ": tree has a loop");
    int a = find(e.u), b = find(e.v);
    if (a == b) throw InputError(std::string(what) + ": tree has a cycle");
    parent[a] = b;
  }
}

// Rooted binary merge tree used while building decompositions.
struct Builder {
  std::vector<std::array<int, 2>> kids;
  std::vector<int> edge;

  int leaf(int e) {
    kids.push_back({-1, -1});
    edge.push_back(e);
    return static_cast<int>(edge.size()) - 1;
  }
  int join(int a, int b) {
    kids.push_back({a, b});
    edge.push_back(-1);
    return static_cast<int>(edge.size()) - 1;
  }

  // Drops the root and joins its two children directly.
  BranchDecomposition finish(const Graph& g, int root) {
    BranchDecomposition bd;
    const int total = static_cast<int>(edge.size());
    if (kids[root][0] < 0) {
      bd.node_count = 1;
      bd.leaf_edge = {edge[root]};
      return bd;
    }
    std::vector<int> id(total, -1);
    std::vector<int> stack{root};
    int next = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x != root) id[x] = next++;
      if (kids[x][0] >= 0) {
        stack.push_back(kids[x][1]);
        stack.push_back(kids[x][0]);
      }
    }
    bd.node_count = next;
    bd.leaf_edge.assign(next, -1);
    for (int x = 0; x < total; ++x) {
      if (id[x] < 0) continue;
      bd.leaf_edge[id[x]] = edge[x];
      if (kids[x][0] >= 0) {
        for (int c : kids[x]) bd.tree_edges.push_back({std::min(id[x], id[c]), std::max(id[x], id[c])});
      }
    }
    int a = id[kids[root][0]], b = id[kids[root][1]];
    bd.tree_edges.push_back({std::min(a, b), std::max(a, b)});
    std::sort(bd.tree_edges.begin(), bd.tree_edges.end());
    bd.width = branch_width(g, bd);
    return bd;
  }
};

}  // namespace

void check_branch_structure(const BranchDecomposition& bd) {
  const int n = bd.node_count;
  if (n < 0) throw InputError("branch decomposition: negative node count");
  if (static_cast<int>(bd.leaf_edge.size()) != n) {
    throw InputError("branch decomposition: leaf map covers " + std::to_string(bd.leaf_edge.size()) +
                     " nodes, expected " + std::to_string(n));
  }
  check_tree(n, bd.tree_edges, "branch decomposition");
  std::vector<int> deg(n, 0);
  for (const auto& e : bd.tree_edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  int leaves = 0;
  for (int x = 0; x < n; ++x) {
    if (bd.leaf_edge[x] >= 0) {
      ++leaves;
      if (deg[x] > 1) throw InputError("branch decomposition: node " + std::to_string(x) + " carries an edge but is not a leaf");
    } else if (deg[x] != 3) {
      throw InputError("branch decomposition: internal node " + std::to_string(x) + " has degree " +
                       std::to_string(deg[x]) + ", expected 3");
    }
  }
  std::vector<char> hit(leaves, 0);
  for (int x = 0; x < n; ++x) {
    int e = bd.leaf_edge[x];
    if (e < 0) continue;
    if (e >= leaves || hit[e]) throw InputError("branch decomposition: leaf map is not a bijection onto edge indices");
    hit[e] = 1;
  }
}

RootedBranchForm root_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
  check_branch_structure(bd);
  const int m = g.edge_count();
  const int n = bd.node_count;
  int leaves = static_cast<int>(std::count_if(bd.leaf_edge.begin(), bd.leaf_edge.end(), [](int e) { return e >= 0; }));
  if (leaves != m) {
    throw InputError("branch decomposition: " + std::to_string(leaves) + " leaves for " + std::to_string(m) + " edges");
  }
  RootedBranchForm rf;
  if (n == 0) return rf;
  rf.nodes.resize(n == 1 ? 1 : n + 1);
  for (int x = 0; x < n; ++x) rf.nodes[x].edge = bd.leaf_edge[x];

  if (n == 1) {
    rf.root = 0;
    rf.post_order = {0};
  } else {
    auto adj = tree_adjacency(n, bd.tree_edges);
    const Edge split = bd.tree_edges.front();
    rf.root = n;
    rf.nodes[n].left = split.u;
    rf.nodes[n].right = split.v;
    // Iterative DFS; parent of each side of the split is the new root.
    std::vector<int> parent(n + 1, -1);
    parent[split.u] = n;
    parent[split.v] = n;
    std::vector<std::pair<int, bool>> stack{{n, false}};
    while (!stack.empty()) {
      auto [x, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        rf.post_order.push_back(x);
        continue;
      }
      stack.push_back({x, true});
      if (x != n) {
        std::vector<int> ch;
        int skip = x == split.u ? split.v : x == split.v ? split.u : parent[x];
        for (int y : adj[x]) {
          if (y != skip) ch.push_back(y);
        }
        if (!ch.empty()) {
          rf.nodes[x].left = ch[0];
          rf.nodes[x].right = ch[1];
          for (int y : ch) parent[y] = x;
        }
      }
      if (rf.nodes[x].left >= 0) {
        stack.push_back({rf.nodes[x].right, false});
        stack.push_back({rf.nodes[x].left, false});
      }
    }
  }

  // Incidence counts per subtree, merged bottom-up as sorted (vertex, count) runs.
  std::vector<std::vector<std::pair<int, int>>> touch(rf.nodes.size());
  for (int x : rf.post_order) {
    auto& node = rf.nodes[x];
    auto& t = touch[x];
    if (node.left < 0) {
      const auto& e = g.edge(node.edge);
      t = {{e.u, 1}, {e.v, 1}};
    } else {
      const auto& a = touch[node.left];
      const auto& b = touch[node.right];
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          t.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          t.push_back(b[j++]);
        } else {
          t.push_back({a[i].first, a[i].second + b[j].second});
          ++i;
          ++j;
        }
      }
      touch[node.left].clear();
      touch[node.right].clear();
    }
    for (auto [v, cnt] : t) {
      if (cnt < g.degree(v)) node.border.push_back(v);
    }
  }
  return rf;
}

int branch_width(const Graph& g, const BranchDecomposition& bd) {
  RootedBranchForm rf = root_branch_decomposition(g, bd);
  int w = 0;
  for (int x : rf.post_order) {
    if (x != rf.root) w = std::max(w, static_cast<int>(rf.nodes[x].border.size()));
  }
  return w;
}

void validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
  int w = branch_width(g, bd);
  if (w != bd.width) {
    throw InputError("branch decomposition: declared width " + std::to_string(bd.width) + " but computed " +
                     std::to_string(w));
  }
}

BranchDecomposition heuristic_branch_decomposition(const Graph& g) {
  const int m = g.edge_count();
  if (m == 0) return {};
  Builder b;
  std::vector<int> inside(m, -1);  // edge -> id of the set currently being split
  int set_id = 0;

  // Border of `part` within the whole graph: vertices touching part and its complement.
  auto border_size = [&](const std::vector<int>& part) {
    std::vector<int> cnt;
    for (int e : part) {
      cnt.push_back(g.edge(e).u);
      cnt.push_back(g.edge(e).v);
    }
    std::sort(cnt.begin(), cnt.end());
    int border = 0;
    for (std::size_t i = 0; i < cnt.size();) {
      std::size_t j = i;
      while (j < cnt.size() && cnt[j] == cnt[i]) ++j;
      if (static_cast<int>(j - i) < g.degree(cnt[i])) ++border;
      i = j;
    }
    return border;
  };

  std::function<int(std::vector<int>)> build = [&](std::vector<int> es) -> int {
    if (es.size() == 1) return b.leaf(es[0]);
    const int id = ++set_id;
    for (int e : es) inside[e] = id;
    const std::size_t half = es.size() / 2;

    std::vector<std::size_t> seeds;
    if (es.size() <= 8) {
      for (std::size_t i = 0; i < es.size(); ++i) seeds.push_back(i);
    } else {
      seeds = {0, es.size() / 3, 2 * es.size() / 3, es.size() - 1};
    }
    std::vector<int> best_first;
    int best_score = -1;
    for (std::size_t s : seeds) {
      // Breadth-first over edges sharing an endpoint, restarting at the lowest
      // unvisited edge when the set is disconnected.
      std::vector<int> order;
      std::vector<char> taken(m, 0);
      std::size_t restart = 0;
      int start = es[s];
      while (order.size() < es.size()) {
        if (start < 0) {
          while (taken[es[restart]]) ++restart;
          start = es[restart];
        }
        taken[start] = 1;
        std::size_t head = order.size();
        order.push_back(start);
        while (head < order.size() && order.size() < es.size()) {
          const auto& e = g.edge(order[head++]);
          for (int end : {e.u, e.v}) {
            for (const auto& inc : g.incident(end)) {
              if (inside[inc.edge] == id && !taken[inc.edge]) {
                taken[inc.edge] = 1;
                order.push_back(inc.edge);
              }
            }
          }
        }
        start = -1;
      }
      std::vector<int> first(order.begin(), order.begin() + static_cast<long>(half));
      std::vector<int> second(order.begin() + static_cast<long>(half), order.end());
      int score = std::max(border_size(first), border_size(second));
      if (best_score < 0 || score < best_score) {
        best_score = score;
        best_first = std::move(first);
      }
    }
    std::sort(best_first.begin(), best_first.end());
    std::vector<int> rest;
    std::set_difference(es.begin(), es.end(), best_first.begin(), best_first.end(), std::back_inserter(rest));
    int left = build(best_first);
    int right = build(rest);
    return b.join(left, right);
  };

  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  int root = build(all);
  return b.finish(g, root);
}

BranchDecomposition caterpillar_branch_decomposition(const Graph& g, std::span<const int> order) {
  const int m = g.edge_count();
  if (static_cast<int>(order.size()) != m || m == 0) {
    throw InputError("caterpillar_branch_decomposition: order must be a permutation of the edges");
  }
  std::vector<char> seen(m, 0);
  for (int e : order) {
    if (e < 0 || e >= m || seen[e]) throw InputError("caterpillar_branch_decomposition: order is not a permutation");
    seen[e] = 1;
  }
  Builder b;
  int cur = b.leaf(order[0]);
  for (int i = 1; i < m; ++i) cur = b.join(cur, b.leaf(order[i]));
  return b.finish(g, cur);
}

BranchDecomposition random_branch_decomposition(const Graph& g, std::uint64_t seed) {
  const int m = g.edge_count();
  if (m == 0) return {};
  Rng rng(seed);
  Builder b;
  std::vector<int> pool;
  for (int e = 0; e < m; ++e) pool.push_back(b.leaf(e));
  while (pool.size() > 1) {
    std::size_t i = rng.below(pool.size());
    int x = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    std::size_t j = rng.below(pool.size());
    pool[j] = b.join(x, pool[j]);
  }
  return b.finish(g, pool[0]);
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int bags = static_cast<int>(td.bags.size());
  const int n = g.vertex_count();
  if (bags == 0 && n > 0) throw InputError("tree decomposition: no bags for a nonempty graph");
  check_tree(bags, td.tree_edges, "tree decomposition");
  std::vector<int> occurrences(n, 0);
  std::vector<std::vector<char>> member(bags, std::vector<char>(n, 0));
  for (int i = 0; i < bags; ++i) {
    for (int v : td.bags[i]) {
      if (v < 0 || v >= n) throw InputError("tree decomposition: bag " + std::to_string(i) + " has vertex out of range");
      if (member[i][v]) throw InputError("tree decomposition: bag " + std::to_string(i) + " repeats a vertex");
      member[i][v] = 1;
      ++occurrences[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!occurrences[v]) throw InputError("tree decomposition: vertex " + std::to_string(v) + " is in no bag");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    bool covered = false;
    for (int i = 0; i < bags && !covered; ++i) covered = member[i][ed.u] && member[i][ed.v];
    if (!covered) throw InputError("tree decomposition: edge " + std::to_string(e) + " is in no bag");
  }
  // In a forest, the bags holding v are connected iff they span exactly count-1 tree edges.
  std::vector<int> links(n, 0);
  for (const auto& t : td.tree_edges) {
    for (int v = 0; v < n; ++v) {
      if (member[t.u][v] && member[t.v][v]) ++links[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (links[v] != occurrences[v] - 1) {
      throw InputError("tree decomposition: bags containing vertex " + std::to_string(v) + " are not connected");
    }
  }
}

TreeDecomposition min_degree_tree_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<char> gone(n, 0);
  std::vector<int> position(n), eliminated;
  std::vector<std::vector<int>> later(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1, best = n + 1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      int d = 0;
      for (int u = 0; u < n; ++u) d += !gone[u] && adj[v][u];
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    for (int u = 0; u < n; ++u) {
      if (!gone[u] && adj[pick][u]) later[pick].push_back(u);
    }
    for (int a : later[pick]) {
      for (int c : later[pick]) {
        if (a != c) adj[a][c] = 1;
      }
    }
    gone[pick] = 1;
    position[pick] = step;
    eliminated.push_back(pick);
  }
  int first_root = -1;
  for (int step = 0; step < n; ++step) {
    int v = eliminated[step];
    std::vector<int> bag = later[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
    if (later[v].empty()) {
      // Separate elimination trees share no vertex, so chaining roots is safe.
      if (first_root >= 0) td.tree_edges.push_back({first_root, step});
      else first_root = step;
    } else {
      int parent = n;
      for (int u : later[v]) parent = std::min(parent, position[u]);
      td.tree_edges.push_back({std::min(step, parent), std::max(step, parent)});
    }
  }
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  return td;
}

BranchDecomposition treedecomp_to_branchdecomp(const TreeDecomposition& td, const Graph& g) {
  validate_tree_decomposition(g, td);
  const int m = g.edge_count();
  if (m == 0) return {};
  const int bags = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> hung(bags);
  for (int e = 0; e < m; ++e) {
    const auto& ed = g.edge(e);
    for (int i = 0; i < bags; ++i) {
      const auto& bag = td.bags[i];
      if (std::binary_search(bag.begin(), bag.end(), ed.u) && std::binary_search(bag.begin(), bag.end(), ed.v)) {
        hung[i].push_back(e);
        break;
      }
    }
  }
  auto adj = tree_adjacency(bags, td.tree_edges);
  std::vector<int> parent(bags, -1), order{0};
  parent[0] = 0;
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (int y : adj[order[h]]) {
      if (parent[y] < 0) {
        parent[y] = order[h];
        order.push_back(y);
      }
    }
  }
  // Every border inside bag i's fold lies in bag i, which gives width <= tw + 1.
  Builder b;
  std::vector<int> piece(bags, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it;
    int cur = -1;
    auto add = [&](int x) { cur = cur < 0 ? x : b.join(cur, x); };
    for (int e : hung[i]) add(b.leaf(e));
    for (int y : adj[i]) {
      if (y != parent[i] && piece[y] >= 0) add(piece[y]);
    }
    piece[i] = cur;
  }
  return b.finish(g, piece[0]);
}

}  // namespace mec2
