#include "doctest.h"

#include <algorithm>
#include <functional>

#include "brute.hpp"
#include "fixtures.hpp"
#include "mec2/error.hpp"
#include "mec2/generators.hpp"
#include "mec2/oracle.hpp"

using namespace mec2;

namespace {

// Proper k-coloring check for the oracle's own witnesses.
bool proper_k(const Graph& g, const std::vector<int>& c, int k) {
  std::vector<unsigned> seen(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c[e] < 0 || c[e] > k) return false;
    if (!c[e]) continue;
    for (int x : {g.edge(e).u, g.edge(e).v}) {
      if (seen[x] & (1u << c[e])) return false;
      seen[x] |= 1u << c[e];
    }
  }
  return true;
}

int nonzero(const std::vector<int>& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](int x) { return x != 0; }));
}

}  // namespace

TEST_CASE("named oracle values") {
  CHECK(nu_k_brute(gen_named("petersen"), 2).value == 9);
  CHECK(nu_k_brute(gen_named("petersen"), 3).value == 13);
  CHECK(nu_k_brute(gen_named("k4"), 2).value == 4);
  CHECK(nu_k_brute(gen_named("cycle(3)"), 2).value == 2);
  CHECK(nu_k_brute(gen_named("k4"), 3).value == 6);
  CHECK(nu_k_brute(gen_named("petersen"), 1).value == 5);
  CHECK(min_edge_deletion_brute(gen_named("k4")) == 2);
  CHECK(min_vertex_deletion_brute(gen_named("cycle(3)")) == 1);
  CHECK(min_vertex_deletion_brute(gen_named("cycle(4)")) == 0);
  CHECK(nu_k_brute(Graph(4), 2).value == 0);
}

TEST_CASE("oracle witnesses are proper and match the value") {
  Rng rng(21);
  for (int iter = 0; iter < 150; ++iter) {
    Graph g = fixtures::small_random(rng, 2, 9, 13);
    for (int k : {1, 2, 3}) {
      auto r = nu_k_brute(g, k);
      CHECK(proper_k(g, r.colors, k));
      CHECK(nonzero(r.colors) == r.value);
    }
    auto s = nu2_brute(g);
    CHECK(validate_coloring(g, s.coloring));
    CHECK(s.coloring.value() == s.value);
  }
}

TEST_CASE("oracle agrees with plain enumeration of all colorings") {
  Rng rng(22);
  for (int iter = 0; iter < 120; ++iter) {
    Graph g = fixtures::small_random(rng, 2, 8, 9);
    int best = 0;
    brute::each_assignment(g.edge_count(), [&](const std::vector<int>& c) {
      if (brute::proper(g, c)) best = std::max(best, nonzero(c));
    });
    CHECK(nu_k_brute(g, 2).value == best);
    CHECK(nu_k_brute(g, 1).value == brute::matching(g));
    CHECK(min_edge_deletion_brute(g) == g.edge_count() - best);
  }
}

TEST_CASE("nu_k is monotone in k and in edges") {
  Rng rng(23);
  for (int iter = 0; iter < 80; ++iter) {
    Graph g = fixtures::small_random(rng, 3, 9, 12);
    int a = nu_k_brute(g, 1).value, b = nu_k_brute(g, 2).value, c = nu_k_brute(g, 3).value;
    CHECK(a <= b);
    CHECK(b <= c);
    CHECK(c <= g.edge_count());
    if (g.edge_count() > 0) {
      std::vector<Edge> fewer = g.edges();
      fewer.pop_back();
      CHECK(nu_k_brute(Graph(g.vertex_count(), fewer), 2).value <= b);
    }
  }
}

TEST_CASE("vertex deletion oracle against direct check") {
  Rng rng(24);
  for (int iter = 0; iter < 80; ++iter) {
    Graph g = fixtures::small_random(rng, 2, 8, 14);
    int k = min_vertex_deletion_brute(g);
    CHECK(k <= min_edge_deletion_brute(g));
    // Some set of size k works and no set of size k - 1 does.
    const int n = g.vertex_count();
    bool at_k = false, below = false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (size != k && size != k - 1) continue;
      std::vector<Edge> rest;
      for (const auto& e : g.edges()) {
        if (!((mask >> e.u) & 1u) && !((mask >> e.v) & 1u)) rest.push_back(e);
      }
      bool ok = is_2ec_feasible(Graph(n, rest));
      if (ok && size == k) at_k = true;
      if (ok && size == k - 1) below = true;
    }
    CHECK(at_k);
    CHECK_FALSE(below);
  }
}

// Petersen minus any single edge is still not 3-edge-colorable, while some
// pair of edges can go. Checked with a standalone backtracker.
TEST_CASE("Petersen loses exactly two edges to a 3-edge-coloring") {
  Graph p = gen_named("petersen");
  auto colorable = [&](std::vector<char> keep) {
    std::vector<int> c(p.edge_count(), 0);
    std::function<bool(int)> go = [&](int e) {
      if (e == p.edge_count()) return true;
      if (!keep[e]) return go(e + 1);
      for (int col = 1; col <= 3; ++col) {
        bool clash = false;
        for (int f = 0; f < e && !clash; ++f) {
          if (!keep[f] || c[f] != col) continue;
          auto a = p.edge(e), b = p.edge(f);
          clash = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        }
        if (clash) continue;
        c[e] = col;
        if (go(e + 1)) return true;
      }
      c[e] = 0;
      return false;
    };
    return go(0);
  };
  bool any_single = false, any_pair = false;
  for (int e = 0; e < 15; ++e) {
    std::vector<char> keep(15, 1);
    keep[e] = 0;
    any_single = any_single || colorable(keep);
    for (int f = e + 1; f < 15 && !any_pair; ++f) {
      keep[f] = 0;
      any_pair = colorable(keep);
      keep[f] = 1;
    }
  }
  CHECK_FALSE(any_single);
  CHECK(any_pair);
  CHECK(nu_k_brute(p, 3).value == 13);
  // The cubic inequality is tight here: 4 * 9 = 10 + 2 * 13.
  CHECK(4 * nu_k_brute(p, 2).value == 10 + 2 * 13);
}

TEST_CASE("cubic inequality") {
  CHECK(check_cubic_inequality(gen_named("petersen")));
  CHECK(check_cubic_inequality(gen_named("k4")));
  CHECK(check_cubic_inequality(gen_named("k33")));
  CHECK_THROWS_AS(check_cubic_inequality(gen_named("cycle(5)")), PreconditionError);
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(check_cubic_inequality(random_cubic(8, seed)));
}

TEST_CASE("oracle refuses oversized inputs") {
  CHECK_THROWS_AS(nu_k_brute(gen_named("complete", 8), 2), Refusal);
  CHECK_THROWS_AS(nu_k_brute(gen_named("complete", 7), 3), Refusal);
  CHECK_THROWS_AS(min_vertex_deletion_brute(Graph(13)), Refusal);
  CHECK_THROWS_AS(nu_k_brute(gen_named("k4"), 0), PreconditionError);
  OracleLimits wide;
  wide.max_edges_k2 = 21;
  CHECK(nu_k_brute(gen_named("complete", 7), 2, wide).value == 6);
}
