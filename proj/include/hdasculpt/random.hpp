#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hdasculpt/events.hpp"
#include "hdasculpt/grid.hpp"
#include "hdasculpt/partition.hpp"
#include "hdasculpt/precubical.hpp"
#include "hdasculpt/st.hpp"

namespace hdasculpt {

using Rng = std::mt19937_64;

namespace detail {

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Vertices 0..n-1, every vertex but 0 gets an edge from an earlier one.
inline Hda random_dag(Rng& rng, int max_edges) {
  int n = uniform(rng, 2, std::min(7, max_edges + 1));
  std::set<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) edges.insert({uniform(rng, 0, j - 1), j});
  int extra = uniform(rng, 0, std::max(0, max_edges - static_cast<int>(edges.size())));
  for (int tries = 0; extra > 0 && tries < 50; ++tries) {
    int i = uniform(rng, 0, n - 2), j = uniform(rng, i + 1, n - 1);
    if (edges.insert({i, j}).second) --extra;
  }
  CellTable raw;
  for (int v = 0; v < n; ++v) raw.add("v" + std::to_string(v));
  for (auto [i, j] : edges)
    raw.add("e" + std::to_string(i) + "_" + std::to_string(j), {"v" + std::to_string(i)}, {"v" + std::to_string(j)});
  return Hda::from_table(raw, "v0");
}

// Edges only join consecutive levels, so every path to a vertex has the same
// length and conflicts have to be settled by identifications.
inline Hda random_layered(Rng& rng, int max_edges) {
  int levels = uniform(rng, 2, 3);
  std::vector<std::vector<int>> at(levels + 1);
  int n = 0;
  at[0].push_back(n++);
  for (int l = 1; l <= levels; ++l) {
    int w = uniform(rng, 1, 3);
    for (int i = 0; i < w; ++i) at[l].push_back(n++);
  }
  std::set<std::pair<int, int>> edges;
  for (int l = 1; l <= levels; ++l)
    for (int v : at[l]) {
      const auto& prev = at[l - 1];
      edges.insert({prev[uniform(rng, 0, static_cast<int>(prev.size()) - 1)], v});
      if (coin(rng, 0.5)) edges.insert({prev[uniform(rng, 0, static_cast<int>(prev.size()) - 1)], v});
    }
  if (static_cast<int>(edges.size()) > max_edges) return random_dag(rng, max_edges);
  CellTable raw;
  for (int v = 0; v < n; ++v) raw.add("v" + std::to_string(v));
  for (auto [i, j] : edges)
    raw.add("e" + std::to_string(i) + "_" + std::to_string(j), {"v" + std::to_string(i)}, {"v" + std::to_string(j)});
  return Hda::from_table(raw, "v0");
}

// Random top cubes of a small grid, closed under faces; sometimes a sink
// vertex without higher cofaces is split between its incoming edges.
inline Hda random_subcomplex(Rng& rng) {
  std::vector<int> sizes;
  switch (uniform(rng, 0, 2)) {
    case 0: sizes = {1, 1, 1}; break;
    case 1: sizes = {2, 1}; break;
    default: sizes = {2, 2}; break;
  }
  auto all = grid_cubes(sizes);
  int top = static_cast<int>(sizes.size());
  EuclideanComplex cx{top, {}};
  for (const auto& c : all) {
    int k = c.dim();
    double p = k == top ? 0.5 : (k == 1 ? 0.35 : 0.3);
    if (k > 0 && coin(rng, p)) cx.cubes.push_back(c);
  }
  cx.cubes.push_back(vertex_cube(std::vector<int>(top, 0)));
  Hda h = complex_to_hda(cx, std::vector<int>(top, 0)).hda;
  if (!coin(rng, 0.4)) return h;

  const auto& p = h.cells;
  std::vector<CellIdx> sinks;
  for (CellIdx v : p.cells_of_dim(0)) {
    int in = 0;
    bool ok = v != h.initial;
    for (const auto& cf : p.cofaces(v)) {
      if (p.dim(cf.cell) != 1 || cf.dir == Dir::s || !p.cofaces(cf.cell).empty()) ok = false;
      ++in;
    }
    if (ok && in >= 2) sinks.push_back(v);
  }
  if (sinks.empty()) return h;
  CellIdx v = sinks[uniform(rng, 0, static_cast<int>(sinks.size()) - 1)];
  CellTable raw = p.table();
  std::string copy = p.name(v) + "'";
  raw.add(copy);
  bool first = true;
  for (const auto& cf : p.cofaces(v)) {
    if (first) {  // keep at least one edge on the original
      first = false;
      continue;
    }
    if (coin(rng)) raw.t[p.name(cf.cell)][0] = copy;
  }
  return Hda::from_table(raw, p.name(h.initial));
}

}  // namespace detail

// Connected, acyclic HDA with non-repeating events and at most `max_labels`
// universal labels.
inline Hda random_hda(Rng& rng, int max_labels = 6) {
  for (;;) {
    Hda h;
    switch (detail::uniform(rng, 0, 2)) {
      case 0: h = detail::random_dag(rng, max_labels); break;
      case 1: h = detail::random_layered(rng, max_labels); break;
      default: h = detail::random_subcomplex(rng); break;
    }
    if (!is_connected(h) || !is_acyclic(h)) continue;
    auto ue = universal_events(h.cells);
    if (ue.size() > max_labels || ue.size() == 0) continue;
    if (!check_non_repeating(h, ue).non_repeating) continue;
    return h;
  }
}

inline std::vector<int> random_grid_sizes(Rng& rng, int max_total = 9) {
  int d = detail::uniform(rng, 1, 3);
  std::vector<int> sizes(d, 1);
  int budget = detail::uniform(rng, d, max_total) - d;
  while (budget-- > 0) ++sizes[detail::uniform(rng, 0, d - 1)];
  return sizes;
}

// Any set of configurations over n events (T within S), always rooted.
inline StStructure random_st(Rng& rng, int n) {
  StStructure st;
  for (int i = 0; i < n; ++i) st.events.push_back("e" + std::to_string(i));
  st.configs.insert({});
  int count = detail::uniform(rng, 1, 8);
  for (int k = 0; k < count; ++k) {
    StConfig c;
    for (int e = 0; e < n; ++e) {
      int v = detail::uniform(rng, 0, 2);
      if (v >= 1) c.started.insert(e);
      if (v == 2) c.terminated.insert(e);
    }
    st.configs.insert(c);
  }
  return st;
}

inline Partition random_partition(Rng& rng, int n) {
  std::vector<int> labels(n);
  int blocks = 0;
  for (int i = 0; i < n; ++i) {
    labels[i] = detail::uniform(rng, 0, blocks);
    if (labels[i] == blocks) ++blocks;
  }
  return Partition::from_labels(labels);
}

}  // namespace hdasculpt
