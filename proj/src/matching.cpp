#include "mec2/matching.hpp"

#include <algorithm>
#include <deque>

namespace mec2 {
namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_), in_tree_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    greedy_start();
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int end = find_path(root);
      while (end != -1) {
        int pv = parent_[end];
        int ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] > v) out.push_back(*g_.edge_index(v, mate_[v]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void greedy_start() {
    for (const auto& e : g_.edges()) {
      if (mate_[e.u] == -1 && mate_[e.v] == -1) {
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
      }
    }
  }

  int lca(int a, int b) {
    std::vector<char> used(n_, 0);
    for (;;) {
      a = base_[a];
      used[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& inc : g_.incident(v)) {
        int to = inc.neighbor;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_tree_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> in_tree_, in_blossom_;
};

}  // namespace

std::vector<int> max_matching(const Graph& g) { return Blossom(g).run(); }

}  // namespace mec2
