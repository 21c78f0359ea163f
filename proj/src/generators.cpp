#include "mec2/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

#include "mec2/error.hpp"
#include "mec2/random.hpp"

namespace mec2 {

Graph gen_named(const std::string& family, int size) {
  std::vector<Edge> edges;
  if (family == "cycle") {
    if (size < 3) throw InputError("cycle needs at least 3 vertices");
    for (int i = 0; i < size; ++i) edges.push_back({i, (i + 1) % size});
  } else if (family == "path") {
    if (size < 1) throw InputError("path needs at least 1 vertex");
    for (int i = 0; i + 1 < size; ++i) edges.push_back({i, i + 1});
  } else if (family == "star") {
    if (size < 0) throw InputError("star needs a non-negative size");
    for (int i = 1; i <= size; ++i) edges.push_back({0, i});
    return Graph(size + 1, edges);
  } else if (family == "complete") {
    if (size < 0) throw InputError("complete needs a non-negative size");
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) edges.push_back({i, j});
    }
  } else {
    throw InputError("unknown graph family '" + family + "'");
  }
  return Graph(size, edges);
}

Graph gen_named(const std::string& name) {
  if (name == "petersen") {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
      e.push_back({i, (i + 1) % 5});          // outer cycle
      e.push_back({i, i + 5});                // spokes
      e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return Graph(10, e);
  }
  if (name == "k4") return gen_named("complete", 4);
  if (name == "k5") return gen_named("complete", 5);
  if (name == "k33") {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 6; ++j) e.push_back({i, j});
    }
    return Graph(6, e);
  }
  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    int size = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), size);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) throw InputError("bad size in '" + name + "'");
    return gen_named(name.substr(0, open), size);
  }
  throw InputError("unknown graph name '" + name + "'");
}

Graph universal_join(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> e = g.edges();
  for (int v = 0; v < n; ++v) e.push_back({v, n});
  return Graph(n + 1, e);
}

Graph disjoint_copies(const Graph& g, int l) {
  if (l < 1) throw InputError("disjoint_copies needs l >= 1");
  const int n = g.vertex_count();
  std::vector<Edge> e;
  for (int i = 0; i < l; ++i) {
    for (const auto& x : g.edges()) e.push_back({x.u + i * n, x.v + i * n});
  }
  return Graph(n * l, e);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw InputError("random_graph needs n >= 0 and 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p > 0.0 && rng.chance(p)) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

Graph random_forest(int n, double p_attach, std::uint64_t seed) {
  if (n < 0 || !(p_attach >= 0.0 && p_attach <= 1.0)) throw InputError("random_forest needs n >= 0 and 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    if (rng.chance(p_attach)) e.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v});
  }
  return Graph(n, e);
}

Graph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 == 1) throw InputError("random_cubic needs an even n >= 4");
  Rng rng(seed);
  std::vector<int> points(3 * n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    rng.shuffle(points.begin(), points.end());
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> e;
    bool ok = true;
    for (int i = 0; i < 3 * n && ok; i += 2) {
      int a = std::min(points[i], points[i + 1]), b = std::max(points[i], points[i + 1]);
      ok = a != b && seen.insert({a, b}).second;
      e.push_back({a, b});
    }
    if (ok) return Graph(n, e);
  }
  throw Error("random_cubic: no simple pairing after 1000 draws");
}

}  // namespace mec2
