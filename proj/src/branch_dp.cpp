#include "mec2/branch_dp.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "mec2/error.hpp"

namespace mec2 {
namespace {

constexpr int kNeg = INT_MIN / 4;

// Digit d in a table index stands for the color set with bits d + 1.
std::vector<std::size_t> powers(std::size_t k) {
  std::vector<std::size_t> p(k + 1, 1);
  for (std::size_t i = 1; i <= k; ++i) p[i] = p[i - 1] * 7;
  return p;
}

int position(const std::vector<int>& sorted, int v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return it != sorted.end() && *it == v ? static_cast<int>(it - sorted.begin()) : -1;
}

struct Table {
  std::vector<int> value;
  // Internal nodes: entry of each child. Leaves: color of the edge in back_left.
  std::vector<std::uint32_t> back_left, back_right;
};

}  // namespace

Solution solve_branchdp(const Graph& g, const BranchDecomposition& bd, const BranchDpOptions& options,
                        BranchDpStats* stats) {
  validate_branch_decomposition(g, bd);
  if (bd.width > options.max_width) {
    throw Refusal("branchdp: width " + std::to_string(bd.width) + " exceeds limit " +
                      std::to_string(options.max_width),
                  "--engine cyclespace");
  }
  const int m = g.edge_count();
  Solution sol{0, EdgeColoring(m)};
  if (m == 0) return sol;

  RootedBranchForm rf = root_branch_decomposition(g, bd);
  const auto pw = powers(static_cast<std::size_t>(std::max(bd.width, 2)));
  std::vector<Table> tables(rf.nodes.size());
  if (stats) {
    stats->width = bd.width;
    stats->border_size.assign(rf.nodes.size(), 0);
    stats->table_entries.assign(rf.nodes.size(), 0);
    stats->live_entries.assign(rf.nodes.size(), 0);
    stats->merge_pairs = 0;
  }

  for (int x : rf.post_order) {
    const auto& node = rf.nodes[x];
    const auto& border = node.border;
    Table& t = tables[x];
    t.value.assign(pw[border.size()], kNeg);

    if (node.left < 0) {
      t.back_left.assign(t.value.size(), 0);
      if (border.empty()) {
        // Isolated edge: nothing outside touches it, so color it.
        t.value[0] = 1;
        t.back_left[0] = 1;
      } else {
        for (int c = 0; c < 3; ++c) {
          std::size_t idx = 0;
          for (std::size_t i = 0; i < border.size(); ++i) idx += static_cast<std::size_t>((1 << c) - 1) * pw[i];
          t.value[idx] = c == 0 ? 0 : 1;
          t.back_left[idx] = static_cast<std::uint32_t>(c);
        }
      }
    } else {
      t.back_left.assign(t.value.size(), 0);
      t.back_right.assign(t.value.size(), 0);
      const auto& lb = rf.nodes[node.left].border;
      const auto& rb = rf.nodes[node.right].border;
      const Table& lt = tables[node.left];
      const Table& rt = tables[node.right];

      // Shared vertices of the two children, with their digit weights and
      // their position in this node's border (-1 if fully covered here).
      struct Shared {
        std::size_t lw, rw;
        int out;
      };
      std::vector<Shared> shared;
      std::vector<std::pair<std::size_t, std::size_t>> left_only, right_only;  // (child weight, own weight)
      for (std::size_t i = 0; i < lb.size(); ++i) {
        int j = position(rb, lb[i]);
        int o = position(border, lb[i]);
        if (j >= 0) shared.push_back({pw[i], pw[static_cast<std::size_t>(j)], o});
        else left_only.push_back({pw[i], pw[static_cast<std::size_t>(o)]});
      }
      for (std::size_t j = 0; j < rb.size(); ++j) {
        if (position(lb, rb[j]) < 0) right_only.push_back({pw[j], pw[static_cast<std::size_t>(position(border, rb[j]))]});
      }

      // Bucket the right child's live entries by their digits on shared vertices.
      const std::size_t keys = pw[shared.size()];
      std::vector<std::vector<std::uint32_t>> bucket(keys);
      std::vector<std::size_t> right_part(rt.value.size(), 0);
      for (std::size_t e = 0; e < rt.value.size(); ++e) {
        if (rt.value[e] == kNeg) continue;
        std::size_t key = 0;
        for (std::size_t s = 0; s < shared.size(); ++s) key += (e / shared[s].rw) % 7 * pw[s];
        bucket[key].push_back(static_cast<std::uint32_t>(e));
        for (auto [cw, ow] : right_only) right_part[e] += (e / cw) % 7 * ow;
      }

      std::vector<unsigned> lmask(shared.size());
      for (std::size_t e = 0; e < lt.value.size(); ++e) {
        if (lt.value[e] == kNeg) continue;
        std::size_t left_part = 0;
        for (auto [cw, ow] : left_only) left_part += (e / cw) % 7 * ow;
        for (std::size_t s = 0; s < shared.size(); ++s) lmask[s] = static_cast<unsigned>((e / shared[s].lw) % 7 + 1);
        for (std::size_t key = 0; key < keys; ++key) {
          if (bucket[key].empty()) continue;
          std::size_t idx = left_part;
          bool ok = true;
          for (std::size_t s = 0; s < shared.size() && ok; ++s) {
            auto a = ColorSet::from_bits(lmask[s]);
            auto b = ColorSet::from_bits(static_cast<unsigned>(key / pw[s] % 7 + 1));
            if (!a.true_disjoint(b)) ok = false;
            else if (shared[s].out >= 0) idx += ((a | b).bits() - 1) * pw[static_cast<std::size_t>(shared[s].out)];
          }
          if (!ok) continue;
          for (std::uint32_t r : bucket[key]) {
            if (stats) ++stats->merge_pairs;
            std::size_t full = idx + right_part[r];
            int v = lt.value[e] + rt.value[r];
            if (v > t.value[full]) {
              t.value[full] = v;
              t.back_left[full] = static_cast<std::uint32_t>(e);
              t.back_right[full] = r;
            }
          }
        }
      }
      std::vector<int>().swap(tables[node.left].value);
      std::vector<int>().swap(tables[node.right].value);
    }
    if (stats) {
      stats->border_size[x] = static_cast<int>(border.size());
      stats->table_entries[x] = t.value.size();
      stats->live_entries[x] = static_cast<std::size_t>(
          std::count_if(t.value.begin(), t.value.end(), [](int v) { return v != kNeg; }));
    }
  }

  const Table& root = tables[rf.root];
  sol.value = root.value[0];
  std::vector<std::pair<int, std::uint32_t>> stack{{rf.root, 0}};
  while (!stack.empty()) {
    auto [x, entry] = stack.back();
    stack.pop_back();
    const auto& node = rf.nodes[x];
    if (node.left < 0) {
      sol.coloring.colors[node.edge] = static_cast<std::uint8_t>(tables[x].back_left[entry]);
    } else {
      stack.push_back({node.left, tables[x].back_left[entry]});
      stack.push_back({node.right, tables[x].back_right[entry]});
    }
  }
  return sol;
}

}  // namespace mec2
