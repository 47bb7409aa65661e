#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/eventset.hpp"
#include "hdasculpt/partition.hpp"
#include "hdasculpt/path.hpp"
#include "hdasculpt/precubical.hpp"

namespace hdasculpt {

// Universal labels: 1-cells up to "opposite faces of a square".
struct UniversalEvents {
  std::vector<int> class_of;                    // per cell; -1 unless a 1-cell
  std::vector<std::vector<CellIdx>> classes;    // ordered by first member
  std::vector<std::pair<int, int>> base_order;  // (label(s2 q), label(s1 q)) per 2-cell
  std::vector<std::vector<bool>> before;        // transitive closure of base_order

  int size() const { return static_cast<int>(classes.size()); }
  int label(CellIdx e) const { return class_of[e]; }
  bool less(int a, int b) const { return before[a][b]; }
};

inline UniversalEvents universal_events(const PrecubicalSet& p) {
  UniversalEvents ue;
  const auto& edges = p.cells_of_dim(1);
  std::unordered_map<CellIdx, int> pos;
  for (std::size_t i = 0; i < edges.size(); ++i) pos[edges[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(edges.size()));
  for (CellIdx q : p.cells_of_dim(2))
    for (int i = 1; i <= 2; ++i) uf.unite(pos[p.s(q, i)], pos[p.t(q, i)]);
  Partition part = uf.partition();

  ue.class_of.assign(p.size(), -1);
  ue.classes.resize(part.num_blocks());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ue.class_of[edges[i]] = part.block(static_cast<int>(i));
    ue.classes[part.block(static_cast<int>(i))].push_back(edges[i]);
  }
  int m = ue.size();
  ue.before.assign(m, std::vector<bool>(m, false));
  for (CellIdx q : p.cells_of_dim(2)) {
    std::pair<int, int> pr{ue.class_of[p.s(q, 2)], ue.class_of[p.s(q, 1)]};
    if (std::find(ue.base_order.begin(), ue.base_order.end(), pr) == ue.base_order.end())
      ue.base_order.push_back(pr);
    ue.before[pr.first][pr.second] = true;
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (ue.before[i][k])
        for (int j = 0; j < m; ++j)
          if (ue.before[k][j]) ue.before[i][j] = true;
  return ue;
}

// Name of a label: its first member in declaration order.
inline const std::string& label_name(const PrecubicalSet& p, const UniversalEvents& ue, int cls) {
  return p.name(ue.classes[cls].front());
}

// (lambda_1(q), ..., lambda_n(q)), reading the edge through the given faces.
inline std::vector<int> multilabel(const PrecubicalSet& p, const UniversalEvents& ue, CellIdx q,
                                   Dir via = Dir::s) {
  int n = p.dim(q);
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    FaceWord w;
    for (int j = 1; j <= n; ++j)
      if (j != i) w.push_back({via, j});
    out.push_back(ue.label(*apply_face_word(p, q, w)));
  }
  return out;
}

// A 2-cell whose two directions carry the same label.
inline std::optional<CellIdx> find_inconsistency(const PrecubicalSet& p, const UniversalEvents& ue) {
  for (CellIdx q : p.cells_of_dim(2))
    if (ue.label(p.s(q, 1)) == ue.label(p.s(q, 2))) return q;
  return std::nullopt;
}

inline bool is_consistent(const PrecubicalSet& p) {
  return !find_inconsistency(p, universal_events(p)).has_value();
}

// Shortest cycle of the label order (a self-loop counts), as a list of labels
// l0 < l1 < ... < l0.
inline std::optional<std::vector<int>> find_order_cycle(const UniversalEvents& ue) {
  int m = ue.size();
  std::vector<std::vector<int>> succ(m);
  for (auto [a, b] : ue.base_order) succ[a].push_back(b);
  std::optional<std::vector<int>> best;
  for (int a = 0; a < m; ++a) {
    std::vector<int> parent(m, -2);
    std::deque<int> todo;
    for (int b : succ[a])
      if (parent[b] == -2) {
        parent[b] = -1;
        todo.push_back(b);
      }
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      if (x == a) break;
      for (int y : succ[x])
        if (parent[y] == -2) {
          parent[y] = x;
          todo.push_back(y);
        }
    }
    if (parent[a] == -2) continue;
    std::vector<int> cyc;
    for (int x = parent[a]; x != -1; x = parent[x]) cyc.push_back(x);
    cyc.push_back(a);
    std::reverse(cyc.begin(), cyc.end());
    if (!best || cyc.size() < best->size()) best = cyc;
  }
  return best;
}

inline bool is_ordered(const PrecubicalSet& p) {
  return !find_order_cycle(universal_events(p)).has_value();
}

struct RepeatCheck {
  bool non_repeating = true;
  std::optional<Path> path;      // sequential rooted path whose last edge repeats a label
  int repeated_label = -1;
  std::vector<CellIdx> cycle;    // step-graph cycle, if any
};

// Breadth-first over (vertex, labels seen) from the initial cell, so the
// witness is a shortest one.
inline RepeatCheck check_non_repeating(const Hda& h, const UniversalEvents& ue) {
  const auto& p = h.cells;
  RepeatCheck res;
  res.cycle = find_step_cycle(p);

  struct Node {
    CellIdx v;
    EventSet seen;
    int parent;
    CellIdx edge;
  };
  std::vector<Node> nodes{{h.initial, {}, -1, -1}};
  std::unordered_map<CellIdx, std::vector<EventSet>> visited;
  visited[h.initial].push_back({});
  auto rebuild = [&](int idx, CellIdx last_edge) {
    std::vector<CellIdx> edges;
    if (last_edge >= 0) edges.push_back(last_edge);
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) edges.push_back(nodes[i].edge);
    std::reverse(edges.begin(), edges.end());
    Path path{h.initial, {}};
    for (CellIdx e : edges) {
      path.steps.push_back({Dir::s, 1, e});
      path.steps.push_back({Dir::t, 1, p.t(e, 1)});
    }
    return path;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CellIdx v = nodes[i].v;
    for (const auto& cf : p.cofaces(v)) {
      if (cf.dir != Dir::s || p.dim(cf.cell) != 1) continue;
      int l = ue.label(cf.cell);
      if (nodes[i].seen.contains(l)) {
        res.non_repeating = false;
        res.path = rebuild(static_cast<int>(i), cf.cell);
        res.repeated_label = l;
        return res;
      }
      EventSet next = nodes[i].seen.with(l);
      CellIdx w = p.t(cf.cell, 1);
      auto& vis = visited[w];
      if (std::find(vis.begin(), vis.end(), next) != vis.end()) continue;
      vis.push_back(next);
      nodes.push_back({w, next, static_cast<int>(i), cf.cell});
    }
  }
  if (!res.cycle.empty()) res.non_repeating = false;
  return res;
}

inline bool has_non_repeating_events(const Hda& h) {
  return check_non_repeating(h, universal_events(h.cells)).non_repeating;
}

// Re-orders the faces of every cell so that its labels increase in the given
// order. `rank[c]` is the position of label c.
inline PrecubicalSet symmetric_variant(const PrecubicalSet& p, const UniversalEvents& ue,
                                       const std::vector<int>& rank) {
  if (static_cast<int>(rank.size()) != ue.size())
    throw Error(ErrorKind::InvalidInput, "order must rank every universal label");
  if (auto q = find_inconsistency(p, ue))
    throw Error(ErrorKind::NotConsistent, "cell " + p.name(*q) + " repeats a label");
  std::vector<std::vector<CellIdx>> sf(p.size()), tf(p.size());
  for (CellIdx q = 0; q < p.size(); ++q) {
    int n = p.dim(q);
    if (n == 0) continue;
    auto lam = multilabel(p, ue, q);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::sort(sigma.begin(), sigma.end(),
              [&](int a, int b) { return rank[lam[a - 1]] < rank[lam[b - 1]]; });
    for (int i = 1; i < n; ++i)
      if (lam[sigma[i] - 1] == lam[sigma[i - 1] - 1])
        throw Error(ErrorKind::NotConsistent, "cell " + p.name(q) + " repeats a label");
    for (int i = 1; i <= n; ++i) {
      sf[q].push_back(p.s(q, sigma[i - 1]));
      tf[q].push_back(p.t(q, sigma[i - 1]));
    }
  }
  return p.with_faces(std::move(sf), std::move(tf));
}

// Ranks labels by a list given in increasing order.
inline std::vector<int> rank_from_order(const std::vector<int>& increasing) {
  std::vector<int> rank(increasing.size());
  for (std::size_t i = 0; i < increasing.size(); ++i) rank[increasing[i]] = static_cast<int>(i);
  return rank;
}

}  // namespace hdasculpt
