#include "mec2/deletion.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mec2/error.hpp"

namespace mec2 {
namespace {

std::vector<int> mask_to_subset(const std::vector<int>& items, unsigned mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if ((mask >> i) & 1u) out.push_back(items[i]);
  }
  return out;
}

bool next_combination(std::vector<int>& idx, int m) {
  int s = static_cast<int>(idx.size());
  int i = s - 1;
  while (i >= 0 && idx[i] == m - s + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Colors of both components of a 2-edge-colorable graph, flipped per the bits
// of `flip` (one bit per trail).
EdgeColoring trail_coloring(const Graph& g, const std::vector<Trail>& ts, unsigned flip) {
  EdgeColoring c(g.edge_count());
  for (std::size_t t = 0; t < ts.size(); ++t) {
    int shift = (flip >> t) & 1u;
    for (std::size_t i = 0; i < ts[t].edges.size(); ++i) {
      c.colors[ts[t].edges[i]] = static_cast<std::uint8_t>(1 + (i + shift) % 2);
    }
  }
  return c;
}

bool edges_colored_except(const Graph& g, const EdgeColoring& c, const std::vector<char>& gone) {
  if (c.size() != static_cast<std::size_t>(g.edge_count()) || !validate_coloring(g, c)) return false;
  for (int e = 0; e < g.edge_count(); ++e) {
    if ((c.colors[e] == 0) != static_cast<bool>(gone[e])) return false;
  }
  return true;
}

// ---- constrained paths ----

struct PathScan {
  const std::vector<int>& con;  // per host edge: 0, 1 or 2
  std::vector<char>& del;

  static bool conflict(int ca, int cb, int between) {
    bool same_needed = (between + 1) % 2 == 0;
    return (ca == cb) != same_needed;
  }

  // Left-to-right over a linear edge sequence; deleted edges reset the anchor.
  void run(const std::vector<int>& seq) {
    int anchor = -1, anchor_color = 0;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
      int e = seq[i];
      if (del[e]) {
        anchor = -1;
        continue;
      }
      if (!con[e]) continue;
      if (anchor >= 0 && conflict(anchor_color, con[e], i - anchor - 1)) {
        del[e] = 1;
        anchor = -1;
        continue;
      }
      anchor = i;
      anchor_color = con[e];
    }
  }
};

// Alternating colors along each undeleted run, phased by the run's first
// constrained edge.
void color_runs(const std::vector<int>& seq, const std::vector<int>& con, const std::vector<char>& del,
                EdgeColoring& out) {
  std::size_t i = 0;
  while (i < seq.size()) {
    if (del[seq[i]]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < seq.size() && !del[seq[j]]) ++j;
    int phase = 0;
    for (std::size_t q = i; q < j; ++q) {
      if (con[seq[q]]) {
        phase = (con[seq[q]] - 1 + static_cast<int>(q - i)) % 2;
        break;
      }
    }
    for (std::size_t q = i; q < j; ++q) {
      out.colors[seq[q]] = static_cast<std::uint8_t>(1 + (phase + static_cast<int>(q - i)) % 2);
    }
    i = j;
  }
}

}  // namespace

bool check_edge_certificate(const Graph& g, const DeletionCertificate& cert) {
  std::vector<char> gone(g.edge_count(), 0);
  for (int e : cert.removed) {
    if (e < 0 || e >= g.edge_count() || gone[e]) return false;
    gone[e] = 1;
  }
  return edges_colored_except(g, cert.witness, gone);
}

bool check_vertex_certificate(const Graph& g, const DeletionCertificate& cert) {
  std::vector<char> out(g.vertex_count(), 0), gone(g.edge_count(), 0);
  for (int v : cert.removed) {
    if (v < 0 || v >= g.vertex_count() || out[v]) return false;
    out[v] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e) gone[e] = out[g.edge(e).u] || out[g.edge(e).v];
  return edges_colored_except(g, cert.witness, gone);
}

DeletionCertificate solve_constrained_paths(const ConstrainedPathInstance& inst) {
  const Graph& h = inst.host;
  const int m = h.edge_count();
  if (static_cast<int>(inst.in_e1.size()) != m || static_cast<int>(inst.in_e2.size()) != m) {
    throw InputError("solve_constrained_paths: constraint vectors must have one entry per edge");
  }
  auto ts = trails(h);
  std::vector<char> del(m, 0);
  std::vector<int> con(m, 0);
  for (int e = 0; e < m; ++e) {
    if (inst.in_e1[e] && inst.in_e2[e]) del[e] = 1;
    else if (inst.in_e1[e]) con[e] = 1;
    else if (inst.in_e2[e]) con[e] = 2;
  }
  PathScan scan{con, del};
  DeletionCertificate out{{}, EdgeColoring(m)};

  for (const auto& t : ts) {
    std::vector<int> seq = t.edges;
    const int len = static_cast<int>(seq.size());
    if (t.cycle) {
      auto cut = std::find_if(seq.begin(), seq.end(), [&](int e) { return del[e]; });
      if (cut != seq.end()) {
        std::rotate(seq.begin(), cut + 1 == seq.end() ? seq.begin() : cut + 1, seq.end());
        scan.run(seq);
      } else {
        std::vector<int> pos;
        for (int i = 0; i < len; ++i) {
          if (con[seq[i]]) pos.push_back(i);
        }
        const int r = static_cast<int>(pos.size());
        if (r == 0) {
          if (len % 2 == 1) {
            int lowest = *std::min_element(seq.begin(), seq.end());
            del[lowest] = 1;
            std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), lowest), seq.end());
          }
        } else {
          int gap = -1;
          for (int i = 0; i < r && gap < 0; ++i) {
            int a = pos[i], b = pos[(i + 1) % r];
            if (!PathScan::conflict(con[seq[a]], con[seq[b]], (b - a - 1 + len) % len)) gap = i;
          }
          if (gap >= 0) {
            // Open the cycle just before the constrained edge after the gap.
            std::rotate(seq.begin(), seq.begin() + pos[(gap + 1) % r], seq.end());
            scan.run(seq);
          } else {
            for (int i = 1; i < r; i += 2) del[seq[pos[i]]] = 1;
            if (r % 2 == 1) del[seq[pos[r - 1]]] = 1;
          }
          auto first_cut = std::find_if(seq.begin(), seq.end(), [&](int e) { return del[e]; });
          if (first_cut != seq.end()) std::rotate(seq.begin(), first_cut, seq.end());
        }
      }
    } else {
      scan.run(seq);
    }
    color_runs(seq, con, del, out.witness);
  }

  for (int e = 0; e < m; ++e) {
    if (del[e]) {
      out.removed.push_back(e);
      out.witness.colors[e] = 0;
    } else if (con[e] && out.witness.colors[e] != con[e]) {
      throw std::logic_error("solve_constrained_paths: constraint violated on edge " + std::to_string(e));
    }
  }
  if (!validate_coloring(h, out.witness)) throw std::logic_error("solve_constrained_paths: improper coloring");
  return out;
}

std::optional<DeletionCertificate> solve_disjoint_edges(const Graph& g, std::span<const int> keep, int k) {
  const int m = g.edge_count();
  if (k < 0) throw PreconditionError("solve_disjoint_edges: negative budget");
  std::vector<char> in_w(m, 0), rest(m, 1);
  for (int e : keep) {
    if (e < 0 || e >= m || in_w[e]) throw PreconditionError("solve_disjoint_edges: bad kept edge set");
    in_w[e] = 1;
    rest[e] = 0;
  }
  Subgraph host = spanning_subgraph(g, rest);
  if (!is_2ec_feasible(host.graph)) throw PreconditionError("solve_disjoint_edges: g minus kept edges is not 2-edge-colorable");
  Subgraph kept = spanning_subgraph(g, in_w);
  if (!is_2ec_feasible(kept.graph)) return std::nullopt;

  auto ts = trails(kept.graph);
  if (ts.size() > 30) throw Refusal("solve_disjoint_edges: too many kept components", "");
  const int hm = host.graph.edge_count();
  for (unsigned flip = 0; flip < (1u << ts.size()); ++flip) {
    EdgeColoring kc = trail_coloring(kept.graph, ts, flip);
    std::vector<unsigned> used(g.vertex_count(), 0);
    for (int i = 0; i < kept.graph.edge_count(); ++i) {
      const auto& e = kept.graph.edge(i);
      used[e.u] |= 1u << kc.colors[i];
      used[e.v] |= 1u << kc.colors[i];
    }
    // A neighbor colored 2 forces 1 and vice versa.
    ConstrainedPathInstance inst{host.graph, std::vector<char>(hm, 0), std::vector<char>(hm, 0)};
    for (int i = 0; i < hm; ++i) {
      const auto& e = host.graph.edge(i);
      unsigned u = used[e.u] | used[e.v];
      inst.in_e1[i] = (u >> 2) & 1u;
      inst.in_e2[i] = (u >> 1) & 1u;
    }
    DeletionCertificate part = solve_constrained_paths(inst);
    if (static_cast<int>(part.removed.size()) > k) continue;

    DeletionCertificate cert{{}, EdgeColoring(m)};
    for (int i = 0; i < kept.graph.edge_count(); ++i) cert.witness.colors[kept.edge_map[i]] = kc.colors[i];
    for (int i = 0; i < hm; ++i) cert.witness.colors[host.edge_map[i]] = part.witness.colors[i];
    for (int i : part.removed) cert.removed.push_back(host.edge_map[i]);
    if (!check_edge_certificate(g, cert)) throw std::logic_error("solve_disjoint_edges: invalid certificate");
    return cert;
  }
  return std::nullopt;
}

std::optional<DeletionCertificate> solve_edge_deletion(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("solve_edge_deletion: negative budget");
  const int m = g.edge_count();
  if (k > 24 && k < m) throw Refusal("solve_edge_deletion: budget " + std::to_string(k) + " is too large", "");
  std::vector<int> z;
  std::vector<char> prefix(m, 0);
  for (int i = 0; i < m; ++i) {
    prefix[i] = 1;
    z.push_back(i);
    if (static_cast<int>(z.size()) <= k) continue;
    // g_i has edges 0..i, so its edge indices coincide with g's.
    Subgraph gi = spanning_subgraph(g, prefix);
    bool compressed = false;
    const unsigned full = (1u << z.size()) - 1;
    for (unsigned ymask = 0; ymask < full && !compressed; ++ymask) {
      std::vector<int> y = mask_to_subset(z, ymask);
      std::vector<int> w = mask_to_subset(z, full & ~ymask);
      std::vector<char> alive(gi.graph.edge_count(), 1);
      for (int e : y) alive[e] = 0;
      Subgraph h = spanning_subgraph(gi.graph, alive);
      std::vector<int> local(gi.graph.edge_count(), -1);
      for (int j = 0; j < h.graph.edge_count(); ++j) local[h.edge_map[j]] = j;
      std::vector<int> wl;
      for (int e : w) wl.push_back(local[e]);
      auto res = solve_disjoint_edges(h.graph, wl, k - static_cast<int>(y.size()));
      if (!res) continue;
      z = y;
      for (int e : res->removed) z.push_back(h.edge_map[e]);
      std::sort(z.begin(), z.end());
      compressed = true;
    }
    if (!compressed) return std::nullopt;
  }
  std::vector<char> keep(m, 1);
  for (int e : z) keep[e] = 0;
  auto witness = two_edge_color(g, keep);
  if (!witness) throw std::logic_error("solve_edge_deletion: compression produced an infeasible set");
  std::sort(z.begin(), z.end());
  return DeletionCertificate{z, *witness};
}

// ---- vertex deletion ----

namespace {

constexpr int kInf = INT_MAX / 4;

// Per-vertex pendant color counts; index 1 and 2 used.
using PendantLoad = std::vector<std::array<int, 3>>;

// Exact minimum removal on a core of max degree 2. States per vertex:
// 0 removed, 1 kept with no edge to the next vertex, 2/3 kept with the edge
// to the next vertex colored 1/2.
PendantSolution pendant_dp(const Graph& core, const PendantLoad& load, const std::vector<char>& forced) {
  const int n = core.vertex_count();
  if (max_degree(core) > 2) throw PreconditionError("pendant instance: core has a vertex of degree > 2");
  PendantSolution sol{{}, EdgeColoring(core.edge_count())};
  std::vector<char> removed(n, 0);

  for (const auto& comp : components(core)) {
    // Walk order: paths from their lowest end, cycles from their lowest vertex.
    bool cycle = comp.size() >= 3 && std::all_of(comp.begin(), comp.end(), [&](int v) { return core.degree(v) == 2; });
    int start = comp[0];
    if (!cycle) {
      for (int v : comp) {
        if (core.degree(v) <= 1) {
          start = v;
          break;
        }
      }
    }
    std::vector<int> walk{start}, link;
    int prev = -1;
    while (true) {
      int cur = walk.back(), nxt = -1, via = -1;
      for (const auto& inc : core.incident(cur)) {
        if (inc.neighbor != prev) {
          nxt = inc.neighbor;
          via = inc.edge;
          break;
        }
      }
      if (nxt < 0 || nxt == start) {
        if (nxt == start) link.push_back(via);
        break;
      }
      prev = cur;
      walk.push_back(nxt);
      link.push_back(via);
    }
    const int len = static_cast<int>(walk.size());

    auto keepable = [&](int v, int in, int out) {
      if (forced[v]) return false;
      const auto& p = load[v];
      if (p[1] > 1 || p[2] > 1) return false;
      if (in && (p[in] || in == out)) return false;
      if (out && p[out]) return false;
      return true;
    };

    int best_cost = kInf;
    std::vector<int> best_states;
    std::vector<int> entries = cycle ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{0};
    for (int entry : entries) {
      std::vector<std::array<int, 4>> cost(len), from(len);
      for (int i = 0; i < len; ++i) {
        cost[i].fill(kInf);
        from[i].fill(-1);
        int v = walk[i];
        for (int ps = 0; ps < 4; ++ps) {
          int base = i == 0 ? (ps == entry ? 0 : kInf) : cost[i - 1][ps];
          if (base >= kInf) continue;
          int in = ps >= 2 ? ps - 1 : 0;
          for (int s = 0; s < 4; ++s) {
            bool last_open = !cycle && i == len - 1;
            if (s >= 2 && last_open) continue;
            int c;
            if (s == 0) {
              if (in) continue;  // a colored edge arrives here
              c = base + 1;
            } else {
              if (ps == 1) continue;  // previous kept vertex promised no edge here
              if (!keepable(v, in, s >= 2 ? s - 1 : 0)) continue;
              c = base;
            }
            if (c < cost[i][s]) {
              cost[i][s] = c;
              from[i][s] = ps;
            }
          }
        }
      }
      for (int s = 0; s < 4; ++s) {
        if (cycle && s != entry) continue;
        if (cost[len - 1][s] < best_cost) {
          best_cost = cost[len - 1][s];
          best_states.assign(len, 0);
          int st = s;
          for (int i = len - 1; i >= 0; --i) {
            best_states[i] = st;
            st = from[i][st];
          }
        }
      }
    }
    if (best_cost >= kInf) throw std::logic_error("pendant_dp: no feasible state sequence");
    for (int i = 0; i < len; ++i) {
      if (best_states[i] == 0) removed[walk[i]] = 1;
      if (i < static_cast<int>(link.size()) && best_states[i] >= 2) {
        sol.core_coloring.colors[link[i]] = static_cast<std::uint8_t>(best_states[i] - 1);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (removed[v]) sol.removed.push_back(v);
  }
  return sol;
}

void check_pendants(const PendantInstance& inst) {
  for (const auto& p : inst.pendants) {
    if (p.color != 1 && p.color != 2) throw PreconditionError("pendant color must be 1 or 2");
    std::vector<int> r = p.roots;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) throw PreconditionError("pendant repeats a root");
    for (int v : r) {
      if (v < 0 || v >= inst.core.vertex_count()) throw PreconditionError("pendant root out of range");
    }
  }
}

}  // namespace

PendantSolution solve_pendant_paths(const PendantInstance& inst) {
  check_pendants(inst);
  const int n = inst.core.vertex_count();
  PendantLoad load(n, {0, 0, 0});
  std::vector<int> count(n, 0);
  for (const auto& p : inst.pendants) {
    if (p.roots.size() != 1) throw PreconditionError("solve_pendant_paths: every pendant needs exactly one root");
    int v = p.roots[0];
    if (++count[v] > 1) throw PreconditionError("solve_pendant_paths: vertex " + std::to_string(v) + " has two pendants");
    ++load[v][p.color];
  }
  for (const auto& e : inst.core.edges()) {
    if (inst.core.degree(e.u) + count[e.u] == 3 && inst.core.degree(e.v) + count[e.v] == 3) {
      throw PreconditionError("solve_pendant_paths: adjacent vertices of degree three");
    }
  }
  return pendant_dp(inst.core, load, std::vector<char>(n, 0));
}

std::optional<PendantSolution> solve_pendant_general(const PendantInstance& inst, int k) {
  check_pendants(inst);
  if (k < 0) return std::nullopt;
  const int n = inst.core.vertex_count();
  std::vector<int> multi_roots;
  std::vector<const Pendant*> multi;
  for (const auto& p : inst.pendants) {
    if (p.roots.size() < 2) continue;
    // Only one root may keep its edge to w.
    if (static_cast<int>(p.roots.size()) > k + 1) return std::nullopt;
    multi.push_back(&p);
    multi_roots.insert(multi_roots.end(), p.roots.begin(), p.roots.end());
  }
  std::sort(multi_roots.begin(), multi_roots.end());
  multi_roots.erase(std::unique(multi_roots.begin(), multi_roots.end()), multi_roots.end());
  const int u = static_cast<int>(multi_roots.size());

  for (int size = 0; size <= std::min(k, u); ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<char> forced(n, 0);
      for (int i : idx) forced[multi_roots[i]] = 1;
      bool ok = true;
      for (const Pendant* p : multi) {
        int alive = 0;
        for (int r : p->roots) alive += !forced[r];
        if (alive > 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      PendantLoad load(n, {0, 0, 0});
      for (const auto& p : inst.pendants) {
        for (int r : p.roots) {
          if (!forced[r]) ++load[r][p.color];
        }
      }
      PendantSolution sol = pendant_dp(inst.core, load, forced);
      if (static_cast<int>(sol.removed.size()) <= k) return sol;
    } while (next_combination(idx, u));
  }
  return std::nullopt;
}

std::optional<DeletionCertificate> solve_disjoint_vertices(const Graph& g, std::span<const int> keep, int k) {
  const int n = g.vertex_count();
  if (k < 0) throw PreconditionError("solve_disjoint_vertices: negative budget");
  std::vector<char> in_w(n, 0);
  for (int v : keep) {
    if (v < 0 || v >= n || in_w[v]) throw PreconditionError("solve_disjoint_vertices: bad kept vertex set");
    in_w[v] = 1;
  }
  std::vector<int> w_list, outside;
  for (int v = 0; v < n; ++v) (in_w[v] ? w_list : outside).push_back(v);
  if (!is_2ec_feasible(induced_subgraph(g, outside).graph)) {
    throw PreconditionError("solve_disjoint_vertices: g minus kept vertices is not 2-edge-colorable");
  }
  Subgraph gw = induced_subgraph(g, w_list);
  if (!is_2ec_feasible(gw.graph)) return std::nullopt;
  auto ts = trails(gw.graph);
  if (ts.size() > 30) throw Refusal("solve_disjoint_vertices: too many kept components", "");

  // Crossing edges per kept vertex: (outside vertex, edge).
  std::vector<std::vector<std::pair<int, int>>> crossing(w_list.size());
  for (std::size_t i = 0; i < w_list.size(); ++i) {
    for (const auto& inc : g.incident(w_list[i])) {
      if (!in_w[inc.neighbor]) crossing[i].push_back({inc.neighbor, inc.edge});
    }
  }

  for (unsigned flip = 0; flip < (1u << ts.size()); ++flip) {
    EdgeColoring wc = trail_coloring(gw.graph, ts, flip);
    std::vector<unsigned> used(w_list.size(), 0);
    for (int i = 0; i < gw.graph.edge_count(); ++i) {
      used[gw.graph.edge(i).u] |= 1u << wc.colors[i];
      used[gw.graph.edge(i).v] |= 1u << wc.colors[i];
    }
    // Crossing-edge groups sharing a kept vertex and a color act as one pendant.
    struct Group {
      int color;
      std::vector<std::pair<int, int>> members;
    };
    std::vector<Group> fixed;
    std::vector<char> dead(n, 0);
    std::vector<std::size_t> free_w;
    for (std::size_t i = 0; i < w_list.size(); ++i) {
      if (crossing[i].empty()) continue;
      unsigned u = used[i] & 6u;
      if (u == 6u) {
        for (auto [x, e] : crossing[i]) dead[x] = 1;
      } else if (u) {
        fixed.push_back({u == 2u ? 2 : 1, crossing[i]});
      } else {
        free_w.push_back(i);
      }
    }
    int forced_count = static_cast<int>(std::count(dead.begin(), dead.end(), 1));
    const int budget = k - forced_count;
    if (budget < 0) continue;

    std::vector<int> survivors;
    for (int v : outside) {
      if (!dead[v]) survivors.push_back(v);
    }
    Subgraph core = induced_subgraph(g, survivors);
    std::vector<int> local(n, -1);
    for (int i = 0; i < core.graph.vertex_count(); ++i) local[core.vertex_map[i]] = i;

    std::optional<DeletionCertificate> found;
    std::vector<Group> groups = fixed;
    std::function<void(std::size_t)> guess = [&](std::size_t at) {
      if (found) return;
      if (at == free_w.size()) {
        PendantInstance inst{core.graph, {}};
        for (const auto& gr : groups) {
          Pendant p{{}, gr.color};
          for (auto [x, e] : gr.members) {
            if (local[x] >= 0) p.roots.push_back(local[x]);
          }
          if (!p.roots.empty()) inst.pendants.push_back(std::move(p));
        }
        auto sol = solve_pendant_general(inst, budget);
        if (!sol) return;
        std::vector<char> gone_v(n, 0);
        DeletionCertificate cert{{}, EdgeColoring(g.edge_count())};
        for (int v = 0; v < n; ++v) gone_v[v] = dead[v];
        for (int v : sol->removed) gone_v[core.vertex_map[v]] = 1;
        for (int i = 0; i < gw.graph.edge_count(); ++i) cert.witness.colors[gw.edge_map[i]] = wc.colors[i];
        for (int i = 0; i < core.graph.edge_count(); ++i) {
          cert.witness.colors[core.edge_map[i]] = sol->core_coloring.colors[i];
        }
        for (const auto& gr : groups) {
          for (auto [x, e] : gr.members) {
            if (!gone_v[x]) cert.witness.colors[e] = static_cast<std::uint8_t>(gr.color);
          }
        }
        for (int v = 0; v < n; ++v) {
          if (gone_v[v]) cert.removed.push_back(v);
        }
        if (!check_vertex_certificate(g, cert)) {
          throw std::logic_error("solve_disjoint_vertices: invalid certificate");
        }
        found = std::move(cert);
        return;
      }
      // A kept vertex with both colors free: guess a color for each crossing edge.
      const auto& cr = crossing[free_w[at]];
      const unsigned d = static_cast<unsigned>(cr.size());
      for (unsigned bits = 0; bits < (1u << d) && !found; ++bits) {
        Group one{1, {}}, two{2, {}};
        for (unsigned j = 0; j < d; ++j) ((bits >> j) & 1u ? two : one).members.push_back(cr[j]);
        if (static_cast<int>(one.members.size()) - 1 > budget || static_cast<int>(two.members.size()) - 1 > budget) {
          continue;
        }
        std::size_t before = groups.size();
        if (!one.members.empty()) groups.push_back(one);
        if (!two.members.empty()) groups.push_back(two);
        guess(at + 1);
        groups.resize(before);
      }
    };
    guess(0);
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<DeletionCertificate> solve_vertex_deletion(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("solve_vertex_deletion: negative budget");
  const int n = g.vertex_count();
  if (k > 24 && k < n) throw Refusal("solve_vertex_deletion: budget " + std::to_string(k) + " is too large", "");
  std::vector<int> z;
  for (int i = 0; i < n; ++i) {
    z.push_back(i);
    if (static_cast<int>(z.size()) <= k) continue;
    const unsigned full = (1u << z.size()) - 1;
    bool compressed = false;
    for (unsigned ymask = 0; ymask < full && !compressed; ++ymask) {
      std::vector<int> y = mask_to_subset(z, ymask);
      std::vector<char> drop(n, 0);
      for (int v : y) drop[v] = 1;
      std::vector<int> alive;
      for (int v = 0; v <= i; ++v) {
        if (!drop[v]) alive.push_back(v);
      }
      Subgraph h = induced_subgraph(g, alive);
      std::vector<int> local(n, -1);
      for (int j = 0; j < h.graph.vertex_count(); ++j) local[h.vertex_map[j]] = j;
      std::vector<int> wl;
      for (int v : mask_to_subset(z, full & ~ymask)) wl.push_back(local[v]);
      auto res = solve_disjoint_vertices(h.graph, wl, k - static_cast<int>(y.size()));
      if (!res) continue;
      z = y;
      for (int v : res->removed) z.push_back(h.vertex_map[v]);
      std::sort(z.begin(), z.end());
      compressed = true;
    }
    if (!compressed) return std::nullopt;
  }
  std::vector<char> gone(n, 0);
  for (int v : z) gone[v] = 1;
  std::vector<char> keep(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) keep[e] = !gone[g.edge(e).u] && !gone[g.edge(e).v];
  auto witness = two_edge_color(g, keep);
  if (!witness) throw std::logic_error("solve_vertex_deletion: compression produced an infeasible set");
  return DeletionCertificate{z, *witness};
}

namespace {

DeletionCertificate minimize(const std::function<std::optional<DeletionCertificate>(int)>& solve, int upper) {
  auto at_zero = solve(0);
  if (at_zero) return *at_zero;
  int lo = 0, hi = 1;
  std::optional<DeletionCertificate> best;
  while (!(best = solve(hi))) {
    lo = hi;
    hi = std::min(2 * hi, upper);
  }
  // Invariant: solve(lo) fails, solve(hi) succeeds with `best`.
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (auto r = solve(mid)) {
      hi = mid;
      best = std::move(r);
    } else {
      lo = mid;
    }
  }
  return *best;
}

}  // namespace

DeletionCertificate minimize_edge_deletion(const Graph& g) {
  return minimize([&](int k) { return solve_edge_deletion(g, k); }, g.edge_count());
}

DeletionCertificate minimize_vertex_deletion(const Graph& g) {
  return minimize([&](int k) { return solve_vertex_deletion(g, k); }, g.vertex_count());
}

}  // namespace mec2
