#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/events.hpp"
#include "hdasculpt/partition.hpp"
#include "hdasculpt/path.hpp"
#include "hdasculpt/precubical.hpp"
#include "hdasculpt/st.hpp"

namespace hdasculpt {

// Configuration of a rooted path: entering a cell through s_i starts its
// i-th label, leaving through t_i terminates it.
inline StConfig path_config(const PrecubicalSet& p, const UniversalEvents& ue, const Path& path) {
  StConfig c;
  CellIdx cur = path.start;
  for (const auto& st : path.steps) {
    if (st.dir == Dir::s)
      c.started.insert(multilabel(p, ue, st.target)[st.k - 1]);
    else
      c.terminated.insert(multilabel(p, ue, cur)[st.k - 1]);
    cur = st.target;
  }
  return c;
}

struct CoverState {
  CellIdx cell;
  StConfig config;
  int parent;  // -1 for the seed
  Step step;   // step from the parent state
};

// Every configuration reached at every cell, each with one witness path.
struct StLabeling {
  UniversalEvents ue;
  std::vector<std::vector<int>> labels;  // multilabel per cell
  std::vector<CoverState> states;        // discovery order
  std::vector<std::vector<int>> at;      // per cell: indices into states
  StStructure st;                        // events named after their labels

  CellIdx initial() const { return states.front().cell; }

  Path witness(int state) const {
    std::vector<Step> rev;
    int i = state;
    for (; states[i].parent >= 0; i = states[i].parent) rev.push_back(states[i].step);
    return Path{states[i].cell, {rev.rbegin(), rev.rend()}};
  }
};

inline void require_sculpting_preconditions(const Hda& h, const UniversalEvents& ue) {
  if (!is_connected(h)) throw Error(ErrorKind::NotConnected, "HDA is not connected");
  auto rep = check_non_repeating(h, ue);
  if (rep.path)
    throw Error(ErrorKind::RepeatingEvents,
                "HDA has repeating events along " + to_string(h.cells, *rep.path));
  if (!rep.non_repeating) throw Error(ErrorKind::Cyclic, "HDA is cyclic");
}

inline StLabeling hintost(const Hda& h, const UniversalEvents& ue) {
  require_sculpting_preconditions(h, ue);
  const auto& p = h.cells;
  StLabeling cov;
  cov.ue = ue;
  cov.labels.resize(p.size());
  for (CellIdx q = 0; q < p.size(); ++q) cov.labels[q] = multilabel(p, ue, q);
  cov.at.resize(p.size());
  std::vector<std::unordered_map<StConfig, int, StConfigHash>> index(p.size());

  auto visit = [&](CellIdx q, StConfig c, int parent, Step step) {
    auto [it, fresh] = index[q].emplace(c, static_cast<int>(cov.states.size()));
    if (!fresh) return;
    cov.at[q].push_back(it->second);
    cov.states.push_back({q, std::move(c), parent, step});
  };
  visit(h.initial, {}, -1, {Dir::s, 0, h.initial});
  for (std::size_t i = 0; i < cov.states.size(); ++i) {
    CellIdx c = cov.states[i].cell;
    StConfig cfg = cov.states[i].config;
    for (const auto& cf : p.cofaces(c)) {
      if (cf.dir != Dir::s) continue;
      StConfig next{cfg.started.with(cov.labels[cf.cell][cf.k - 1]), cfg.terminated};
      visit(cf.cell, next, static_cast<int>(i), {Dir::s, cf.k, cf.cell});
    }
    for (int k = 1; k <= p.dim(c); ++k) {
      StConfig next{cfg.started, cfg.terminated.with(cov.labels[c][k - 1])};
      visit(p.t(c, k), next, static_cast<int>(i), {Dir::t, k, p.t(c, k)});
    }
  }
  for (int c = 0; c < ue.size(); ++c) cov.st.events.push_back(label_name(p, ue, c));
  for (const auto& s : cov.states) cov.st.configs.insert(s.config);
  return cov;
}

inline StLabeling hintost(const Hda& h) { return hintost(h, universal_events(h.cells)); }

struct CoverLawReport {
  std::vector<std::string> running_mismatch;  // S \ T differs from the multilabel
  std::vector<std::string> restarted;         // an s-step starts an event already started
  std::vector<std::string> homotopy_split;    // homotopic paths with different configs
  std::vector<std::string> same_config_apart; // equal configs on non-homotopic paths
  std::size_t paths_checked = 0;
  bool paths_skipped = false;                 // too many rooted paths to enumerate

  bool ok() const { return running_mismatch.empty() && restarted.empty() && homotopy_split.empty(); }
};

inline CoverLawReport check_cover_laws(const Hda& h, const StLabeling& cov,
                                       std::size_t path_limit = 20000) {
  const auto& p = h.cells;
  CoverLawReport rep;
  for (std::size_t i = 0; i < cov.states.size(); ++i) {
    const auto& s = cov.states[i];
    EventSet lam(cov.labels[s.cell].begin(), cov.labels[s.cell].end());
    if (s.config.running() != lam) rep.running_mismatch.push_back(p.name(s.cell));
    for (const auto& cf : p.cofaces(s.cell))
      if (cf.dir == Dir::s && s.config.started.contains(cov.labels[cf.cell][cf.k - 1]))
        rep.restarted.push_back(p.name(s.cell) + " -> " + p.name(cf.cell));
  }

  auto paths = enumerate_paths(p, h.initial, path_limit);
  if (!paths) {
    rep.paths_skipped = true;
    return rep;
  }
  rep.paths_checked = paths->size();
  std::map<Path, int> id;
  for (std::size_t i = 0; i < paths->size(); ++i) id[(*paths)[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(paths->size()));
  for (std::size_t i = 0; i < paths->size(); ++i)
    for (const auto& q : elementary_homotopies(p, (*paths)[i])) uf.unite(static_cast<int>(i), id.at(q));
  std::vector<StConfig> cfg;
  for (const auto& path : *paths) cfg.push_back(path_config(p, cov.ue, path));

  std::map<int, int> rep_of_component;
  for (std::size_t i = 0; i < paths->size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    auto [it, fresh] = rep_of_component.emplace(r, static_cast<int>(i));
    if (!fresh && !(cfg[it->second] == cfg[i]))
      rep.homotopy_split.push_back(to_string(p, (*paths)[i]));
  }
  std::map<std::pair<CellIdx, StConfig>, int> component_of;
  for (std::size_t i = 0; i < paths->size(); ++i) {
    auto key = std::make_pair((*paths)[i].end(), cfg[i]);
    int r = uf.find(static_cast<int>(i));
    auto [it, fresh] = component_of.emplace(key, r);
    if (!fresh && it->second != r) rep.same_config_apart.push_back(to_string(p, (*paths)[i]));
  }
  return rep;
}

}  // namespace hdasculpt
