#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "mec2/cyclespace.hpp"
#include "mec2/error.hpp"
#include "mec2/forest_dp.hpp"
#include "mec2/generators.hpp"
#include "mec2/oracle.hpp"

using namespace mec2;

namespace {

std::uint64_t pow3(int k) {
  std::uint64_t r = 1;
  while (k--) r *= 3;
  return r;
}

}  // namespace

TEST_CASE("feedback edge set size is the cycle-space dimension") {
  Rng rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = fixtures::small_random(rng, 1, 12, 30);
    auto fs = feedback_edge_set(g);
    int expected = g.edge_count() - g.vertex_count() + static_cast<int>(components(g).size());
    CHECK(static_cast<int>(fs.edges.size()) == expected);
    std::vector<char> keep(g.edge_count(), 1);
    for (int e : fs.edges) keep[e] = 0;
    CHECK(is_acyclic(spanning_subgraph(g, keep).graph));
  }
}

TEST_CASE("cyclespace examples") {
  CyclespaceStats st;
  CHECK(solve_cyclespace(gen_named("cycle(4)"), {}, &st).value == 4);
  CHECK(st.feedback_size == 1);
  CHECK(solve_cyclespace(gen_named("cycle(3)")).value == 2);
  int petersen = nu_k_brute(gen_named("petersen"), 2).value;
  auto s = solve_cyclespace(gen_named("petersen"), {}, &st);
  CHECK(s.value == petersen);
  CHECK(s.value == 9);
  CHECK(st.feedback_size == 6);
  CHECK(st.guesses_visited == 729);
  CHECK(validate_coloring(gen_named("petersen"), s.coloring));
}

TEST_CASE("cyclespace equals the oracle on small graphs") {
  Rng rng(42);
  CyclespaceOptions opts;
  opts.verify_each_guess = true;
  for (int iter = 0; iter < 250; ++iter) {
    Graph g = fixtures::small_random(rng, 2, 10, 16);
    CyclespaceStats st;
    auto s = solve_cyclespace(g, opts, &st);
    CHECK(s.value == nu_k_brute(g, 2).value);
    CHECK(validate_coloring(g, s.coloring));
    CHECK(s.coloring.value() == s.value);
    CHECK(st.guesses_visited == pow3(st.feedback_size));
    CHECK(st.guesses_feasible <= st.guesses_visited);
  }
}

TEST_CASE("the guess taken from an optimal witness reaches the optimum") {
  Rng rng(43);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = fixtures::small_random(rng, 3, 9, 14);
    auto opt = nu_k_brute(g, 2);
    auto fs = feedback_edge_set(g);
    ColorAllowance w = full_allowance(g.vertex_count());
    int true_on_f = 0;
    for (int e : fs.edges) {
      if (!opt.colors[e]) continue;
      ++true_on_f;
      w[g.edge(e).u] = w[g.edge(e).u].without(opt.colors[e]);
      w[g.edge(e).v] = w[g.edge(e).v].without(opt.colors[e]);
    }
    std::vector<char> keep(g.edge_count(), 1);
    for (int e : fs.edges) keep[e] = 0;
    Subgraph tree = spanning_subgraph(g, keep);
    int forest = solve_forest(tree.graph, w).value;
    CHECK(true_on_f + forest == opt.value);
  }
}

TEST_CASE("cyclespace is deterministic across thread counts") {
  Rng rng(44);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = fixtures::small_random(rng, 5, 10, 18);
    CyclespaceOptions one, many;
    many.threads = 4;
    auto a = solve_cyclespace(g, one);
    auto b = solve_cyclespace(g, many);
    CHECK(a.value == b.value);
    CHECK(a.coloring == b.coloring);
  }
}

TEST_CASE("cyclespace refuses large feedback sets") {
  CyclespaceOptions opts;
  opts.max_feedback = 5;
  CHECK_THROWS_AS(solve_cyclespace(gen_named("petersen"), opts), Refusal);
  try {
    solve_cyclespace(gen_named("petersen"), opts);
  } catch (const Refusal& r) {
    CHECK(r.suggestion().find("branchdp") != std::string::npos);
  }
}

TEST_CASE("logedge case") {
  CHECK(logedge_applies(gen_named("cycle(5)")));
  CHECK(solve_logedge(gen_named("cycle(5)")).value == 4);
  CHECK(solve_logedge(gen_named("path(9)")).value == 8);
  // A tree is fully colorable only without degree-3 vertices.
  CHECK(solve_logedge(gen_named("star(3)")).value == 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph tree = random_forest(9, 1.0, seed);
    if (components(tree).size() != 1) continue;
    CHECK(solve_logedge(tree).value == solve_forest(tree).value);
    CHECK((solve_logedge(tree).value == tree.edge_count()) == (max_degree(tree) <= 2));
  }
  Graph th = fixtures::theta(2, 2, 2);
  REQUIRE(th.vertex_count() == 5);
  CHECK(logedge_applies(th));
  CHECK(solve_logedge(th).value == nu_k_brute(th, 2).value);
  Graph th6 = fixtures::theta(2, 2, 3);
  CHECK(solve_logedge(th6).value == nu_k_brute(th6, 2).value);
  CHECK_FALSE(logedge_applies(gen_named("petersen")));
  CHECK_THROWS_AS(solve_logedge(gen_named("petersen")), PreconditionError);
  Graph split = fixtures::make(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(logedge_applies(split));
}
