#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hdasculpt/bulk.hpp"
#include "hdasculpt/cover.hpp"
#include "hdasculpt/error.hpp"
#include "hdasculpt/events.hpp"
#include "hdasculpt/partition.hpp"
#include "hdasculpt/path.hpp"
#include "hdasculpt/precubical.hpp"

namespace hdasculpt {

struct SearchOptions {
  std::size_t max_events = 10;         // brute force refuses more labels than this
  std::size_t node_budget = 1000000;   // search nodes before giving up
  bool oracle = false;                 // decide with brute force instead of repair
  bool cross_check = true;             // confirm repair refutations by brute force when small
};

// ---- witnesses ------------------------------------------------------------

struct RepeatingWitness {
  Path path;       // sequential, rooted; its last edge repeats `label`
  int label = -1;  // -1 when only a step cycle was found
  std::vector<CellIdx> cycle;
};

struct OrderWitness {
  std::vector<int> cycle;  // labels l0 < l1 < ... < l0
};

struct LengthWitness {
  CellIdx cell;
  std::size_t first;
  std::size_t second;
  Path first_path;
  Path second_path;
};

struct ClashWitness {
  CellIdx first;
  CellIdx second;
  StConfig config;     // over blocks of `partition`
  Partition partition;  // identification in force when the clash showed up
};

struct ExhaustedWitness {
  std::size_t nodes = 0;
  std::size_t backtracks = 0;
  std::size_t branch_points = 0;
  bool heuristic_incomplete = false;
  std::string last_failure;
};

using Witness = std::variant<RepeatingWitness, OrderWitness, LengthWitness, ClashWitness, ExhaustedWitness>;

inline const char* witness_kind(const Witness& w) {
  switch (w.index()) {
    case 0: return "RepeatingEvents";
    case 1: return "NotOrdered";
    case 2: return "LengthMismatch";
    case 3: return "LabelClash";
    default: return "Exhausted";
  }
}

struct Verdict {
  bool sculptable = false;
  Partition partition;                  // on universal labels, when sculptable
  std::optional<Sculpture> sculpture;
  std::optional<Witness> witness;
  std::vector<std::string> label_names;
  std::size_t nodes = 0;                // search nodes visited
  std::size_t backtracks = 0;

  int d() const { return sculpture ? sculpture->d : 0; }
  std::string kind() const { return sculptable ? "Sculptable" : witness_kind(*witness); }
};

// ---- proper event identifications -----------------------------------------

inline StConfig quotient_config(const StConfig& c, const Partition& p) {
  auto f = [&](int e) { return p.block(e); };
  return {c.started.map(f), c.terminated.map(f)};
}

// Blocks in an order extending the quotient order, or a cycle of labels if
// the quotient order is not a strict order.
struct QuotientOrder {
  std::vector<int> rank;       // per block
  std::vector<int> cycle;      // labels, when broken
  bool ok() const { return cycle.empty(); }
};

inline QuotientOrder quotient_order(const UniversalEvents& ue, const Partition& part) {
  QuotientOrder out;
  int b = part.num_blocks();
  std::vector<std::vector<int>> succ(b);
  for (auto [x, y] : ue.base_order) {
    int bx = part.block(x), by = part.block(y);
    if (bx == by) {
      out.cycle = {x, y};
      return out;
    }
    succ[bx].push_back(by);
  }
  std::vector<int> indeg(b, 0);
  for (int x = 0; x < b; ++x)
    for (int y : succ[x]) ++indeg[y];
  out.rank.assign(b, -1);
  std::vector<int> ready;
  for (int x = 0; x < b; ++x)
    if (indeg[x] == 0) ready.push_back(x);
  int next = 0;
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    int x = *it;
    ready.erase(it);
    out.rank[x] = next++;
    for (int y : succ[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (next == b) return out;
  // Every unranked block has an unranked predecessor; walk back until one repeats.
  std::vector<std::vector<std::pair<int, int>>> pred(b);  // (block, label) behind each edge
  for (auto [x, y] : ue.base_order) pred[part.block(y)].push_back({part.block(x), x});
  int cur = 0;
  while (out.rank[cur] >= 0) ++cur;
  std::vector<int> pos(b, -1);
  std::vector<int> labels;
  pos[cur] = 0;
  for (;;) {
    auto it = std::find_if(pred[cur].begin(), pred[cur].end(),
                           [&](const auto& pr) { return out.rank[pr.first] < 0; });
    labels.push_back(it->second);
    int prev = it->first;
    if (pos[prev] >= 0) {
      out.cycle.assign(labels.begin() + pos[prev], labels.end());
      std::reverse(out.cycle.begin(), out.cycle.end());
      return out;
    }
    pos[prev] = static_cast<int>(labels.size());
    cur = prev;
  }
}

struct ProperViolation {
  int clause = 0;  // 1 order, 2 one label per cell, 3 distinct labels for distinct cells
  std::vector<CellIdx> cells;
  std::vector<StConfig> configs;
  std::vector<int> cycle;
  std::string detail;
};

inline std::optional<ProperViolation> find_improper(const Hda& h, const StLabeling& cov,
                                                    const Partition& part) {
  const auto& p = h.cells;
  if (part.size() != cov.ue.size())
    throw Error(ErrorKind::InvalidInput, "partition does not match the universal labels");
  auto ord = quotient_order(cov.ue, part);
  if (!ord.ok()) {
    ProperViolation v{1, {}, {}, ord.cycle, "quotient order is not antisymmetric"};
    return v;
  }
  for (CellIdx q = 0; q < p.size(); ++q) {
    const auto& ids = cov.at[q];
    for (std::size_t i = 1; i < ids.size(); ++i) {
      auto a = quotient_config(cov.states[ids[0]].config, part);
      auto b = quotient_config(cov.states[ids[i]].config, part);
      if (!(a == b))
        return ProperViolation{2, {q}, {a, b}, {}, "cell " + p.name(q) + " gets two labels"};
    }
  }
  std::unordered_map<StConfig, CellIdx, StConfigHash> owner;
  for (CellIdx q = 0; q < p.size(); ++q) {
    if (cov.at[q].empty()) continue;
    auto a = quotient_config(cov.states[cov.at[q][0]].config, part);
    auto [it, fresh] = owner.emplace(a, q);
    if (!fresh)
      return ProperViolation{3, {it->second, q}, {a}, {},
                             "cells " + p.name(it->second) + " and " + p.name(q) + " share a label"};
  }
  return std::nullopt;
}

inline bool check_proper(const Hda& h, const StLabeling& cov, const Partition& part) {
  return !find_improper(h, cov, part).has_value();
}

inline Sculpture build_embedding(const Hda& h, const StLabeling& cov, const Partition& part) {
  if (auto v = find_improper(h, cov, part))
    throw Error(ErrorKind::NotProper, "not a proper event identification: " + v->detail);
  auto ord = quotient_order(cov.ue, part);
  Sculpture sc{h, part.num_blocks(), {}};
  for (CellIdx q = 0; q < h.cells.size(); ++q) {
    auto c = quotient_config(cov.states[cov.at[q][0]].config, part);
    ChuState v(sc.d, Chu3::zero);
    for (int b : c.started.members()) v[ord.rank[b]] = Chu3::half;
    for (int b : c.terminated.members()) v[ord.rank[b]] = Chu3::one;
    sc.em.push_back(v);
  }
  auto rep = validate_sculpture(sc);
  if (!rep.ok()) throw Error(ErrorKind::NotProper, "built embedding is invalid:\n" + rep.summary());
  return sc;
}

// ---- brute force ----------------------------------------------------------

namespace detail {

inline std::vector<std::string> label_names(const Hda& h, const UniversalEvents& ue) {
  std::vector<std::string> out;
  for (int c = 0; c < ue.size(); ++c) out.push_back(label_name(h.cells, ue, c));
  return out;
}

inline Verdict sculptable_verdict(const Hda& h, const StLabeling& cov, const Partition& part) {
  Verdict v;
  v.sculptable = true;
  v.partition = part;
  v.sculpture = build_embedding(h, cov, part);
  v.label_names = label_names(h, cov.ue);
  return v;
}

inline Verdict refuted(const Hda& h, const UniversalEvents& ue, Witness w) {
  Verdict v;
  v.witness = std::move(w);
  v.label_names = label_names(h, ue);
  return v;
}

}  // namespace detail

// Enumerates partitions of the labels as restricted-growth strings in
// lexicographic order and returns the first proper one. Prefixes that already
// merge two events of one configuration, clash on fully assigned
// configurations, or break the order are skipped; none of them extends to a
// proper identification, so the first hit is the same as with plain
// enumeration.
inline Verdict brute_force_search(const Hda& h, const StLabeling& cov, const SearchOptions& opt = {}) {
  const auto& ue = cov.ue;
  int m = ue.size();
  if (static_cast<std::size_t>(m) > opt.max_events)
    throw Error(ErrorKind::ResourceLimit, std::to_string(m) + " universal labels exceed the brute-force bound " +
                                              std::to_string(opt.max_events));
  // highest label in each configuration
  std::vector<int> top(cov.states.size(), -1);
  for (std::size_t i = 0; i < cov.states.size(); ++i) {
    auto mem = cov.states[i].config.started.members();
    if (!mem.empty()) top[i] = mem.back();
  }
  std::vector<int> labels(m, 0);
  std::size_t nodes = 0;

  auto prefix_ok = [&](int k) {
    // labels[0..k) are assigned
    for (auto [x, y] : ue.base_order)
      if (x < k && y < k && labels[x] == labels[y]) return false;
    for (const auto& s : cov.states) {
      auto mem = s.config.started.members();
      std::vector<int> used;
      for (int e : mem)
        if (e < k) used.push_back(labels[e]);
      std::sort(used.begin(), used.end());
      if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;
    }
    std::vector<int> lab(labels.begin(), labels.begin() + k);
    auto f = [&](int e) { return lab[e]; };
    std::unordered_map<StConfig, CellIdx, StConfigHash> owner;
    for (std::size_t i = 0; i < cov.states.size(); ++i) {
      if (top[i] >= k) continue;
      const auto& c = cov.states[i].config;
      StConfig qc{c.started.map(f), c.terminated.map(f)};
      auto [it, fresh] = owner.emplace(qc, cov.states[i].cell);
      if (!fresh && it->second != cov.states[i].cell) return false;
    }
    // one label per cell among complete configurations
    std::unordered_map<CellIdx, StConfig> first;
    for (std::size_t i = 0; i < cov.states.size(); ++i) {
      if (top[i] >= k) continue;
      const auto& c = cov.states[i].config;
      StConfig qc{c.started.map(f), c.terminated.map(f)};
      auto [it, fresh] = first.emplace(cov.states[i].cell, qc);
      if (!fresh && !(it->second == qc)) return false;
    }
    return true;
  };

  std::optional<Partition> found;
  auto rec = [&](auto&& self, int k, int blocks) -> bool {
    if (++nodes > opt.node_budget) throw Error(ErrorKind::ResourceLimit, "brute-force node budget exhausted");
    if (k == m) {
      Partition part = Partition::from_labels(labels);
      if (check_proper(h, cov, part)) {
        found = part;
        return true;
      }
      return false;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels[k] = b;
      if (!prefix_ok(k + 1)) continue;
      if (self(self, k + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  rec(rec, 0, 0);

  Verdict v;
  if (found) {
    v = detail::sculptable_verdict(h, cov, *found);
  } else {
    ExhaustedWitness w;
    w.nodes = nodes;
    w.last_failure = "no proper event identification among all partitions";
    v = detail::refuted(h, ue, w);
  }
  v.nodes = nodes;
  return v;
}

// ---- repair search --------------------------------------------------------

namespace detail {

struct Segment {
  std::vector<CellIdx> first;   // edges
  std::vector<CellIdx> second;
};

class RepairSearch {
 public:
  RepairSearch(const Hda& h, const StLabeling& cov, const SearchOptions& opt)
      : h_(h), p_(h.cells), cov_(cov), opt_(opt), edges_(cov.states.size()) {}

  std::optional<LengthWitness> length_mismatch() {
    for (CellIdx v : p_.cells_of_dim(0)) {
      const auto& ids = cov_.at[v];
      for (std::size_t i = 1; i < ids.size(); ++i) {
        auto a = cov_.states[ids[0]].config.started.count();
        auto b = cov_.states[ids[i]].config.started.count();
        if (a != b) return LengthWitness{v, a, b, cov_.witness(ids[0]), cov_.witness(ids[i])};
      }
    }
    return std::nullopt;
  }

  // Returns the proper partition found, or the reason the whole tree failed.
  std::variant<Partition, Witness> run() {
    auto res = search(Partition::discrete(cov_.ue.size()), 0);
    if (res) return *res;
    if (branch_points_ == 0 && last_witness_) return *last_witness_;
    ExhaustedWitness w;
    w.nodes = nodes_;
    w.backtracks = backtracks_;
    w.branch_points = branch_points_;
    w.last_failure = last_failure_;
    return Witness{w};
  }

  std::size_t nodes() const { return nodes_; }
  std::size_t backtracks() const { return backtracks_; }

 private:
  // Edges of the sequential normal form of a state's witness path.
  const std::vector<CellIdx>& edges(int state) {
    auto& e = edges_[state];
    if (!e) {
      Path n = normalize_path(h_, cov_.witness(state));
      std::vector<CellIdx> out;
      for (const auto& st : n.steps)
        if (st.dir == Dir::s) out.push_back(st.target);
      e = out;
    }
    return *e;
  }

  std::optional<Segment> segment(int a, int b, const Partition& part) {
    const auto& e1 = edges(a);
    const auto& e2 = edges(b);
    if (e1.size() != e2.size()) return std::nullopt;
    std::size_t n = e1.size();
    std::vector<CellIdx> v1{cov_.initial()}, v2{cov_.initial()};
    for (std::size_t i = 0; i < n; ++i) {
      v1.push_back(p_.t(e1[i], 1));
      v2.push_back(p_.t(e2[i], 1));
    }
    EventSet q1, q2;
    std::size_t last_meet = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      q1.insert(part.block(cov_.ue.label(e1[k - 1])));
      q2.insert(part.block(cov_.ue.label(e2[k - 1])));
      if (v1[k] != v2[k]) continue;
      if (!(q1 == q2)) {
        Segment s;
        s.first.assign(e1.begin() + last_meet, e1.begin() + k);
        s.second.assign(e2.begin() + last_meet, e2.begin() + k);
        return s;
      }
      last_meet = k;
    }
    return std::nullopt;
  }

  struct Evaluation {
    std::optional<Witness> failure;
    std::optional<Segment> forced;  // an interleaving
    std::optional<Segment> branch;  // the first longer pair
    bool settled = false;           // no 0-cell carries two labels
  };

  Evaluation evaluate(const Partition& part) {
    Evaluation ev;
    auto ord = quotient_order(cov_.ue, part);
    if (!ord.ok()) {
      ev.failure = OrderWitness{ord.cycle};
      last_failure_ = "quotient order broken";
      return ev;
    }
    std::vector<StConfig> qc;
    qc.reserve(cov_.states.size());
    std::unordered_map<StConfig, CellIdx, StConfigHash> owner;
    for (const auto& s : cov_.states) {
      qc.push_back(quotient_config(s.config, part));
      auto [it, fresh] = owner.emplace(qc.back(), s.cell);
      if (!fresh && it->second != s.cell) {
        ev.failure = ClashWitness{it->second, s.cell, qc.back(), part};
        last_failure_ = "label clash between " + p_.name(it->second) + " and " + p_.name(s.cell);
        return ev;
      }
    }
    ev.settled = true;
    for (CellIdx v : p_.cells_of_dim(0)) {
      const auto& ids = cov_.at[v];
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          if (qc[ids[i]] == qc[ids[j]]) continue;
          ev.settled = false;
          auto seg = segment(ids[i], ids[j], part);
          if (!seg) continue;
          if (seg->first.size() == 2) {
            ev.forced = seg;
            return ev;
          }
          if (!ev.branch) ev.branch = seg;
        }
    }
    return ev;
  }

  Partition merge(Partition part, const Segment& s, const std::vector<int>& tau) {
    for (std::size_t i = 0; i < tau.size(); ++i)
      part = part.merged(cov_.ue.label(s.first[i]), cov_.ue.label(s.second[tau[i]]));
    return part;
  }

  std::optional<Partition> search(Partition part, int depth) {
    for (;;) {
      if (++nodes_ > opt_.node_budget)
        throw Error(ErrorKind::ResourceLimit, "repair search node budget exhausted");
      auto ev = evaluate(part);
      if (ev.failure) {
        last_witness_ = ev.failure;
        return std::nullopt;
      }
      if (ev.settled) {
        if (auto bad = find_improper(h_, cov_, part)) {
          last_failure_ = bad->detail;
          return std::nullopt;
        }
        return part;
      }
      if (ev.forced) {
        Partition next = merge(part, *ev.forced, {1, 0});
        if (next == part) {
          last_failure_ = "interleaving adds no identification";
          return std::nullopt;
        }
        part = next;
        continue;
      }
      if (!ev.branch) {
        last_failure_ = "conflicting labels without a usable homotopy pair";
        return std::nullopt;
      }
      const Segment& s = *ev.branch;
      std::size_t n = s.first.size();
      std::vector<int> tau(n);
      std::iota(tau.begin(), tau.end(), 0);
      std::vector<Partition> options;
      do {
        if (tau.front() == 0 || tau.back() == static_cast<int>(n) - 1) continue;
        Partition next = merge(part, s, tau);
        if (next == part) continue;
        if (!quotient_order(cov_.ue, next).ok()) continue;
        if (std::find(options.begin(), options.end(), next) == options.end()) options.push_back(next);
      } while (std::next_permutation(tau.begin(), tau.end()));
      if (options.empty()) {
        last_failure_ = "no admissible permutation for a homotopy pair of length " + std::to_string(n);
        return std::nullopt;
      }
      if (options.size() > 1) ++branch_points_;
      for (std::size_t i = 0; i < options.size(); ++i) {
        if (auto res = search(options[i], depth + 1)) return res;
        if (i + 1 < options.size()) ++backtracks_;
      }
      return std::nullopt;
    }
  }

  const Hda& h_;
  const PrecubicalSet& p_;
  const StLabeling& cov_;
  SearchOptions opt_;
  std::vector<std::optional<std::vector<CellIdx>>> edges_;
  std::size_t nodes_ = 0;
  std::size_t backtracks_ = 0;
  std::size_t branch_points_ = 0;
  std::string last_failure_;
  std::optional<Witness> last_witness_;
};

}  // namespace detail

inline Verdict repair_search(const Hda& h, const StLabeling& cov, const SearchOptions& opt = {}) {
  detail::RepairSearch rs(h, cov, opt);
  if (auto lm = rs.length_mismatch()) return detail::refuted(h, cov.ue, *lm);
  auto res = rs.run();
  Verdict v;
  if (auto* part = std::get_if<Partition>(&res))
    v = detail::sculptable_verdict(h, cov, *part);
  else
    v = detail::refuted(h, cov.ue, std::get<Witness>(res));
  v.nodes = rs.nodes();
  v.backtracks = rs.backtracks();
  return v;
}

// connectivity, order, non-repeating events, covering, then search
inline Verdict decide_sculptable(const Hda& h, const SearchOptions& opt = {}) {
  if (!is_connected(h)) throw Error(ErrorKind::NotConnected, "HDA is not connected");
  auto ue = universal_events(h.cells);
  if (auto cyc = find_order_cycle(ue)) return detail::refuted(h, ue, OrderWitness{*cyc});
  auto rep = check_non_repeating(h, ue);
  if (!rep.non_repeating) {
    RepeatingWitness w;
    if (rep.path) w.path = *rep.path;
    else w.path.start = h.initial;
    w.label = rep.repeated_label;
    w.cycle = rep.cycle;
    return detail::refuted(h, ue, w);
  }
  auto cov = hintost(h, ue);
  Verdict v = opt.oracle ? brute_force_search(h, cov, opt) : repair_search(h, cov, opt);
  if (!v.sculptable && std::holds_alternative<ExhaustedWitness>(*v.witness) && !opt.oracle) {
    if (static_cast<std::size_t>(ue.size()) <= opt.max_events && opt.cross_check) {
      Verdict bf = brute_force_search(h, cov, opt);
      if (bf.sculptable) return bf;
    } else {
      std::get<ExhaustedWitness>(*v.witness).heuristic_incomplete = true;
    }
  }
  if (v.sculptable) {
    auto chk = validate_sculpture(*v.sculpture);
    if (!chk.ok()) throw Error(ErrorKind::NotProper, "certificate failed validation:\n" + chk.summary());
  }
  return v;
}

}  // namespace hdasculpt
