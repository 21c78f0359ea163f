#include "mec2/cyclespace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "mec2/error.hpp"
#include "mec2/forest_dp.hpp"

namespace mec2 {

FeedbackEdgeSet feedback_edge_set(const Graph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  FeedbackEdgeSet fs;
  fs.in_set.assign(g.edge_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    int a = find(g.edge(i).u), b = find(g.edge(i).v);
    if (a == b) {
      fs.edges.push_back(i);
      fs.in_set[i] = 1;
    } else {
      parent[b] = a;
    }
  }
  return fs;
}

namespace {

struct Best {
  int value = -1;
  std::uint64_t guess = 0;
  EdgeColoring coloring;
  std::uint64_t feasible = 0;
};

class GuessRunner {
 public:
  GuessRunner(const Graph& g, const FeedbackEdgeSet& fs, bool verify)
      : g_(g), fs_(fs), verify_(verify) {
    std::vector<char> keep(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) keep[i] = !fs.in_set[i];
    forest_ = spanning_subgraph(g, keep);
  }

  void run(std::uint64_t first, std::uint64_t last, Best& best) const {
    const int k = static_cast<int>(fs_.edges.size());
    std::vector<int> digit(k);
    std::uint64_t x = first;
    for (int i = 0; i < k; ++i, x /= 3) digit[i] = static_cast<int>(x % 3);

    ColorAllowance w(g_.vertex_count());
    for (std::uint64_t guess = first; guess < last; ++guess) {
      if (guess != first) {
        for (int i = 0; i < k; ++i) {
          if (++digit[i] < 3) break;
          digit[i] = 0;
        }
      }
      std::fill(w.begin(), w.end(), ColorSet::all());
      bool proper = true;
      int on_f = 0;
      for (int i = 0; i < k && proper; ++i) {
        int c = digit[i];
        if (c == 0) continue;
        ++on_f;
        const auto& e = g_.edge(fs_.edges[i]);
        for (int x : {e.u, e.v}) {
          if (!w[x].contains(c)) {
            proper = false;
            break;
          }
          w[x] = w[x].without(c);
        }
      }
      if (!proper) continue;
      ++best.feasible;
      Solution part = solve_forest(forest_.graph, w);
      int total = on_f + part.value;
      if (total <= best.value && !verify_) continue;

      EdgeColoring c(g_.edge_count());
      for (int i = 0; i < k; ++i) c.colors[fs_.edges[i]] = static_cast<std::uint8_t>(digit[i]);
      for (int i = 0; i < forest_.graph.edge_count(); ++i) c.colors[forest_.edge_map[i]] = part.coloring.colors[i];
      if (verify_ && !validate_coloring(g_, c)) {
        throw std::logic_error("cyclespace: guess " + std::to_string(guess) + " produced an improper coloring");
      }
      if (total > best.value) {
        best.value = total;
        best.guess = guess;
        best.coloring = std::move(c);
      }
    }
  }

 private:
  const Graph& g_;
  const FeedbackEdgeSet& fs_;
  bool verify_;
  Subgraph forest_;
};

}  // namespace

Solution solve_cyclespace(const Graph& g, const CyclespaceOptions& options, CyclespaceStats* stats) {
  FeedbackEdgeSet fs = feedback_edge_set(g);
  const int k = static_cast<int>(fs.edges.size());
  if (k > options.max_feedback) {
    throw Refusal("cyclespace: feedback edge set has " + std::to_string(k) + " edges, limit " +
                      std::to_string(options.max_feedback),
                  "--engine branchdp");
  }
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;

  GuessRunner runner(g, fs, options.verify_each_guess);
  int threads = std::max(1, options.threads);
  if (static_cast<std::uint64_t>(threads) > total) threads = static_cast<int>(total);
  std::vector<Best> parts(threads);
  if (threads == 1) {
    runner.run(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] {
        try {
          runner.run(lo, hi, parts[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Ranges are in guess order, so a strict comparison keeps the earliest optimum.
  Best* best = &parts[0];
  std::uint64_t feasible = 0;
  for (auto& p : parts) {
    feasible += p.feasible;
    if (p.value > best->value) best = &p;
  }
  if (stats) {
    stats->feedback_size = k;
    stats->guesses_visited = total;
    stats->guesses_feasible = feasible;
  }
  return {best->value, std::move(best->coloring)};
}

bool logedge_applies(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 0 && components(g).size() != 1) return false;
  long long d = static_cast<long long>(g.edge_count()) - n;
  if (d <= 0) return true;
  if (d >= 62) return false;
  return (1LL << d) <= n;
}

Solution solve_logedge(const Graph& g, CyclespaceStats* stats) {
  if (!logedge_applies(g)) {
    throw PreconditionError("solve_logedge: graph is not connected with m <= n + log2(n)");
  }
  CyclespaceOptions options;
  options.max_feedback = 64;
  return solve_cyclespace(g, options, stats);
}

}  // namespace mec2
