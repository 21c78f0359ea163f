// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "cli.hpp"
#include "fixtures.hpp"
#include "mec2/branch_dp.hpp"
#include "mec2/cyclespace.hpp"
#include "mec2/decomposition.hpp"
#include "mec2/deletion.hpp"
#include "mec2/dense.hpp"
#include "mec2/forest_dp.hpp"
#include "mec2/formats.hpp"
#include "mec2/generators.hpp"
#include "mec2/oracle.hpp"

using namespace mec2;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool witness_ok(const Graph& g, const Solution& s) {
  return validate_coloring(g, s.coloring) && s.coloring.value() == s.value;
}

Outcome engine_agreement() {
  Outcome o;
  Rng rng(1001);
  int runs = 0;
  for (; runs < 500; ++runs) {
    Graph g = fixtures::small_random(rng, 2, 10, 14);
    auto ref = nu2_brute(g);
    auto cs = solve_cyclespace(g);
    auto bd = solve_branchdp(g, heuristic_branch_decomposition(g));
    auto dp = dispatch(g).solution;
    for (const auto* s : {&ref, &cs, &bd, &dp}) {
      if (s->value != ref.value) o.fail("value mismatch on instance " + std::to_string(runs));
      if (!witness_ok(g, *s)) o.fail("bad witness on instance " + std::to_string(runs));
    }
  }
  o.detail = o.ok ? std::to_string(runs) + " graphs, 4 engines agree" : o.detail;
  return o;
}

Outcome forest_dp() {
  Outcome o;
  Rng rng(1002);
  for (int i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(rng.below(12));
    Graph f = random_forest(n, rng.unit(), rng.next());
    ColorAllowance w(n);
    for (auto& s : w) s = ColorSet::from_bits(1u | (static_cast<unsigned>(rng.below(4)) << 1));
    auto s = solve_forest(f, w);
    if (s.value != brute::allowance_max(f, w)) o.fail("mismatch on forest " + std::to_string(i));
    if (!witness_ok(f, s)) o.fail("bad witness on forest " + std::to_string(i));
  }
  if (o.ok) o.detail = "300 forests match 3^m enumeration";
  return o;
}

Outcome dense_case() {
  Outcome o;
  Rng rng(1003);
  int checked = 0;
  std::vector<Graph> corpus = {gen_named("k4"), gen_named("k5"), gen_named("k33"), gen_named("cycle(4)"),
                               gen_named("complete", 12), universal_join(gen_named("cycle(4)"))};
  for (int i = 0; i < 300; ++i) {
    int n = 3 + static_cast<int>(rng.below(10));
    corpus.push_back(random_graph(n, 0.5 + 0.45 * rng.unit(), rng.next()));
  }
  for (const auto& g : corpus) {
    if (!dense_applies(g)) continue;
    ++checked;
    int n = g.vertex_count();
    auto s = solve_dense(g);
    if (s.value != n - n % 2) o.fail("value " + std::to_string(s.value) + " on n=" + std::to_string(n));
    if (!witness_ok(g, s)) o.fail("bad witness on n=" + std::to_string(n));
  }
  if (checked < 50) o.fail("only " + std::to_string(checked) + " dense graphs in corpus");
  if (o.ok) o.detail = std::to_string(checked) + " dense graphs give n - n mod 2";
  return o;
}

Outcome named_values() {
  Outcome o;
  const std::pair<const char*, int> named[] = {{"petersen", 9}, {"k4", 4}, {"cycle(3)", 2}};
  for (auto [name, expected] : named) {
    Graph g = gen_named(name);
    int oracle = nu_k_brute(g, 2).value;
    if (oracle != expected) o.fail(std::string("oracle gives ") + std::to_string(oracle) + " on " + name);
    std::vector<Solution> got = {solve_cyclespace(g), solve_branchdp(g, heuristic_branch_decomposition(g)),
                                 dispatch(g).solution};
    if (dense_applies(g)) got.push_back(solve_dense(g));
    if (logedge_applies(g)) got.push_back(solve_logedge(g));
    for (const auto& s : got) {
      if (s.value != oracle || !witness_ok(g, s)) o.fail(std::string("engine disagrees on ") + name);
    }
  }
  if (o.ok) o.detail = "Petersen 9, K4 4, C3 2";
  return o;
}

Outcome cubic_inequality() {
  Outcome o;
  OracleLimits wide;
  wide.max_edges_k2 = 21;
  wide.max_edges_k3 = 21;
  int count = 0;
  for (int n : {4, 6, 8, 10, 12, 14}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Graph g = random_cubic(n, seed);
      ++count;
      if (!check_cubic_inequality(g, wide)) o.fail("violation at n=" + std::to_string(n) + " seed " + std::to_string(seed));
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " cubic graphs, zero violations";
  return o;
}

Outcome copies_law() {
  Outcome o;
  Rng rng(1006);
  for (int i = 0; i < 50; ++i) {
    Graph g = fixtures::small_random(rng, 2, 8, 8);
    int one = nu_k_brute(g, 2).value;
    for (int l : {1, 2, 3}) {
      Graph c = disjoint_copies(g, l);
      if (dispatch(c).solution.value != l * one) o.fail("dispatch breaks copies law on graph " + std::to_string(i));
      if (c.edge_count() <= 20 && nu_k_brute(c, 2).value != l * one) o.fail("oracle breaks copies law");
    }
  }
  if (o.ok) o.detail = "50 graphs, l in {1,2,3}";
  return o;
}

Outcome edge_deletion() {
  Outcome o;
  Rng rng(1007);
  for (int i = 0; i < 300; ++i) {
    Graph g = fixtures::small_random(rng, 2, 10, 14);
    int need = g.edge_count() - nu_k_brute(g, 2).value;
    for (int k = 0; k <= 4; ++k) {
      auto cert = solve_edge_deletion(g, k);
      if (cert.has_value() != (k >= need)) o.fail("decision wrong on graph " + std::to_string(i) + " k=" + std::to_string(k));
      if (cert && (!check_edge_certificate(g, *cert) || static_cast<int>(cert->removed.size()) > k)) {
        o.fail("bad certificate on graph " + std::to_string(i));
      }
    }
  }
  if (o.ok) o.detail = "300 graphs, k in 0..4";
  return o;
}

Outcome vertex_deletion() {
  Outcome o;
  Rng rng(1008);
  for (int i = 0; i < 200; ++i) {
    Graph g = fixtures::small_random(rng, 2, 9, 36);
    int need = min_vertex_deletion_brute(g);
    for (int k = 0; k <= 3; ++k) {
      auto cert = solve_vertex_deletion(g, k);
      if (cert.has_value() != (k >= need)) o.fail("decision wrong on graph " + std::to_string(i) + " k=" + std::to_string(k));
      if (cert && (!check_vertex_certificate(g, *cert) || static_cast<int>(cert->removed.size()) > k)) {
        o.fail("bad certificate on graph " + std::to_string(i));
      }
    }
  }
  if (o.ok) o.detail = "200 graphs, k in 0..3";
  return o;
}

Outcome decomposition_independence() {
  Outcome o;
  Rng rng(1009);
  int graphs = 0, conversions = 0;
  while (graphs < 50) {
    Graph g = fixtures::small_random(rng, 4, 10, 16);
    if (g.edge_count() < 3) continue;
    std::vector<BranchDecomposition> bds = {heuristic_branch_decomposition(g)};
    auto td = min_degree_tree_decomposition(g);
    bds.push_back(treedecomp_to_branchdecomp(td, g));
    ++conversions;
    if (bds.back().width > td.width() + 1) o.fail("conversion exceeds tw + 1");
    for (int tries = 0; tries < 20 && bds.size() < 4; ++tries) {
      auto r = random_branch_decomposition(g, rng.next());
      if (r.width <= 7) bds.push_back(r);
    }
    std::vector<int> values;
    for (const auto& bd : bds) {
      if (bd.width > 7) continue;
      validate_branch_decomposition(g, bd);
      values.push_back(solve_branchdp(g, bd).value);
    }
    if (values.size() < 3) continue;
    ++graphs;
    for (int v : values) {
      if (v != values.front()) o.fail("value depends on decomposition");
    }
  }
  for (const char* name : {"petersen", "k5", "k33", "complete(7)"}) {
    Graph g = gen_named(name);
    auto td = min_degree_tree_decomposition(g);
    ++conversions;
    if (treedecomp_to_branchdecomp(td, g).width > td.width() + 1) o.fail(std::string("conversion on ") + name);
  }
  if (o.ok) o.detail = "50 graphs x >=3 decompositions, " + std::to_string(conversions) + " conversions within tw+1";
  return o;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    while (cells.size() < 9) cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

Outcome operation_counts() {
  Outcome o;
  Rng rng(1010);
  for (int i = 0; i < 100; ++i) {
    Graph g = fixtures::small_random(rng, 3, 10, 16);
    CyclespaceStats cs;
    solve_cyclespace(g, {}, &cs);
    if (cs.guesses_visited != static_cast<std::uint64_t>(std::llround(std::pow(3.0, cs.feedback_size)))) {
      o.fail("cyclespace guess count differs from 3^|F|");
    }
    if (g.edge_count() == 0) continue;
    BranchDpStats bs;
    solve_branchdp(g, heuristic_branch_decomposition(g), {}, &bs);
    for (std::size_t v = 0; v < bs.border_size.size(); ++v) {
      if (bs.table_entries[v] > static_cast<std::size_t>(std::llround(std::pow(7.0, bs.border_size[v])))) {
        o.fail("branchdp table above 7^border");
      }
    }
  }

  // Bench corpus: feedback grows along wheels-like joins, width along complete graphs.
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mec2_acceptance_bench";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (int n = 3; n <= 8; ++n) {
    write_text((dir / ("f" + std::to_string(n) + ".gr")).string(), emit_graph(universal_join(gen_named("cycle", n))));
    write_text((dir / ("w" + std::to_string(n) + ".gr")).string(), emit_graph(gen_named("complete", n)));
  }
  std::ostringstream out, err;
  int code = run_cli({"bench", dir.string(), "--engines", "cyclespace,branchdp", "--stats"}, out, err);
  fs::remove_all(dir);
  if (code != 0) {
    o.fail("bench failed: " + err.str());
    return o;
  }
  auto rows = read_csv(out.str());
  std::vector<std::pair<long long, long long>> by_feedback, by_width;  // (parameter, ops)
  for (const auto& r : rows) {
    if (r[4] == "refused") continue;
    if (r[3] == "cyclespace" && r[0][0] == 'f') by_feedback.push_back({std::stoll(r[6]), std::stoll(r[8])});
    if (r[3] == "branchdp" && r[0][0] == 'w') by_width.push_back({std::stoll(r[7]), std::stoll(r[8])});
  }
  auto monotone = [](std::vector<std::pair<long long, long long>> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i].first > v[i - 1].first && v[i].second <= v[i - 1].second) return false;
    }
    return v.size() >= 3 && v.back().first > v.front().first;
  };
  if (!monotone(by_feedback)) o.fail("cyclespace ops not increasing in |F|");
  if (!monotone(by_width)) o.fail("branchdp ops not increasing in width");
  if (o.ok) {
    o.detail = "guesses = 3^|F|, tables <= 7^border, bench ops grow over " + std::to_string(by_feedback.size()) + "+" +
               std::to_string(by_width.size()) + " rows";
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"engine agreement", engine_agreement},
      {"forest DP vs enumeration", forest_dp},
      {"dense case", dense_case},
      {"named values", named_values},
      {"cubic inequality", cubic_inequality},
      {"copies law", copies_law},
      {"edge deletion decision", edge_deletion},
      {"vertex deletion decision", vertex_deletion},
      {"decomposition independence", decomposition_independence},
      {"operation counts", operation_counts},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " AC" << index << " " << name << ": " << o.detail << " ("
              << static_cast<int>(secs * 1000) << " ms)\n";
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
