#pragma once

#include <cstdint>
#include <vector>

#include "mec2/generators.hpp"
#include "mec2/graph.hpp"
#include "mec2/random.hpp"

namespace fixtures {

inline mec2::Graph make(int n, std::vector<mec2::Edge> e) { return mec2::Graph(n, std::move(e)); }

// Two vertices joined by three internally disjoint paths of the given lengths.
inline mec2::Graph theta(int a, int b, int c) {
  std::vector<mec2::Edge> e;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
    e.push_back({prev, 1});
  }
  return mec2::Graph(next, e);
}

// Random graph with n in [lo_n, hi_n] and at most max_m edges (extra edges dropped).
inline mec2::Graph small_random(mec2::Rng& rng, int lo_n, int hi_n, int max_m) {
  int n = lo_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi_n - lo_n + 1)));
  double p = 0.15 + 0.6 * rng.unit();
  auto g = mec2::random_graph(n, p, rng.next());
  if (g.edge_count() <= max_m) return g;
  std::vector<mec2::Edge> e = g.edges();
  rng.shuffle(e.begin(), e.end());
  e.resize(static_cast<std::size_t>(max_m));
  return mec2::Graph(n, e);
}

}  // namespace fixtures
