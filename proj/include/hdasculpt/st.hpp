#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/eventset.hpp"
#include "hdasculpt/partition.hpp"

namespace hdasculpt {

// (S, T): started and terminated events, T a subset of S.
struct StConfig {
  EventSet started;
  EventSet terminated;

  EventSet running() const { return started - terminated; }
  bool operator==(const StConfig&) const = default;
  bool operator<(const StConfig& o) const {
    if (started != o.started) return started < o.started;
    return terminated < o.terminated;
  }
};

struct StConfigHash {
  std::size_t operator()(const StConfig& c) const {
    return c.started.hash() * 31 + c.terminated.hash();
  }
};

// Events carry a fixed order (their list position); ordered and unordered
// structures share this type.
struct StStructure {
  std::vector<std::string> events;
  std::set<StConfig> configs;

  int event_index(const std::string& e) const {
    auto it = std::find(events.begin(), events.end(), e);
    if (it == events.end()) throw Error(ErrorKind::InvalidInput, "unknown event " + e);
    return static_cast<int>(it - events.begin());
  }

  EventSet set_of(const std::vector<std::string>& names) const {
    EventSet s;
    for (const auto& n : names) s.insert(event_index(n));
    return s;
  }

  StStructure& add(const std::vector<std::string>& S, const std::vector<std::string>& T) {
    StConfig c{set_of(S), set_of(T)};
    if (!c.terminated.subset_of(c.started))
      throw Error(ErrorKind::InvalidInput, "terminated events must have started");
    configs.insert(c);
    return *this;
  }

  bool contains(const StConfig& c) const { return configs.count(c) > 0; }
  bool operator==(const StStructure&) const = default;
};

// Every T within S within {events}.
inline StStructure complete_st(const std::vector<std::string>& events) {
  StStructure st{events, {}};
  int n = static_cast<int>(events.size());
  std::vector<int> v(n, 0);
  for (;;) {
    StConfig c;
    for (int i = 0; i < n; ++i) {
      if (v[i] >= 1) c.started.insert(i);
      if (v[i] == 2) c.terminated.insert(i);
    }
    st.configs.insert(c);
    int i = 0;
    while (i < n && v[i] == 2) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return st;
}

struct RegularityReport {
  bool rooted = false;
  bool connected = false;
  bool closed = false;
  std::optional<StConfig> unreachable;                  // first config not reached
  std::optional<std::pair<StConfig, int>> not_closed;   // config and running event

  bool regular() const { return rooted && connected && closed; }
};

inline RegularityReport check_regular(const StStructure& st) {
  RegularityReport rep;
  StConfig root;
  rep.rooted = st.contains(root);

  std::set<StConfig> seen;
  if (rep.rooted) {
    std::deque<StConfig> todo{root};
    seen.insert(root);
    int n = static_cast<int>(st.events.size());
    while (!todo.empty()) {
      StConfig c = todo.front();
      todo.pop_front();
      for (int e = 0; e < n; ++e) {
        StConfig next = c;
        if (!c.started.contains(e))
          next.started.insert(e);
        else if (!c.terminated.contains(e))
          next.terminated.insert(e);
        else
          continue;
        if (st.contains(next) && seen.insert(next).second) todo.push_back(next);
      }
    }
  }
  rep.connected = rep.rooted && seen.size() == st.configs.size();
  for (const auto& c : st.configs)
    if (!seen.count(c)) {
      rep.unreachable = c;
      break;
    }

  rep.closed = true;
  for (const auto& c : st.configs) {
    for (int e : c.running().members()) {
      StConfig up{c.started, c.terminated.with(e)};
      StConfig down{c.started.without(e), c.terminated};
      if (!st.contains(up) || !st.contains(down)) {
        rep.closed = false;
        rep.not_closed = std::make_pair(c, e);
        break;
      }
    }
    if (!rep.closed) break;
  }
  return rep;
}

inline std::string block_name(const std::vector<std::string>& events, const std::vector<int>& members) {
  std::string out;
  for (int e : members) {
    if (!out.empty()) out += "~";
    out += events[e];
  }
  return out;
}

// Quotient by an equivalence on events; quotient events are the blocks.
inline StStructure quotient_st(const StStructure& st, const Partition& eq) {
  if (eq.size() != static_cast<int>(st.events.size()))
    throw Error(ErrorKind::InvalidInput, "equivalence does not match the event list");
  StStructure out;
  for (const auto& b : eq.blocks()) out.events.push_back(block_name(st.events, b));
  auto f = [&](int e) { return eq.block(e); };
  for (const auto& c : st.configs) out.configs.insert({c.started.map(f), c.terminated.map(f)});
  return out;
}

struct CollapseWitness {
  StConfig config;
  int first;
  int second;
};

inline std::optional<CollapseWitness> find_collapse(const StStructure& st, const Partition& eq) {
  for (const auto& c : st.configs) {
    auto m = c.started.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (eq.same(m[i], m[j])) return CollapseWitness{c, m[i], m[j]};
  }
  return std::nullopt;
}

inline bool is_collapsing(const StStructure& st, const Partition& eq) {
  return find_collapse(st, eq).has_value();
}

// ---- morphisms ------------------------------------------------------------

// Partial map on events: map[e] is the image position or -1.
struct StMorphism {
  std::vector<int> map;
};

inline std::vector<std::string> check_st_morphism(const StStructure& from, const StStructure& to,
                                                  const StMorphism& f, bool ordered) {
  std::vector<std::string> problems;
  if (f.map.size() != from.events.size()) {
    problems.push_back("map does not list every source event");
    return problems;
  }
  for (const auto& c : from.configs) {
    std::string where = "configuration with " + std::to_string(c.started.count()) + " started events";
    auto started = c.started.members();
    bool total = true;
    for (int e : started)
      if (f.map[e] < 0 || f.map[e] >= static_cast<int>(to.events.size())) total = false;
    if (!total) {
      problems.push_back("not locally total on " + where);
      continue;
    }
    EventSet img = c.started.map([&](int e) { return f.map[e]; });
    if (img.count() != started.size()) problems.push_back("not locally injective on " + where);
    StConfig image{img, c.terminated.map([&](int e) { return f.map[e]; })};
    if (!to.contains(image)) problems.push_back("image of a " + where + " is missing");
    if (ordered)
      for (std::size_t i = 0; i < started.size(); ++i)
        for (std::size_t j = i + 1; j < started.size(); ++j)
          if (f.map[started[i]] > f.map[started[j]])
            problems.push_back("order of " + from.events[started[i]] + ", " +
                               from.events[started[j]] + " not preserved");
  }
  return problems;
}

// Constructs a morphism, enforcing the laws.
inline StMorphism make_st_morphism(const StStructure& from, const StStructure& to,
                                   std::vector<int> map, bool ordered) {
  StMorphism f{std::move(map)};
  auto problems = check_st_morphism(from, to, f, ordered);
  if (!problems.empty()) throw Error(ErrorKind::InvalidInput, "not an ST-morphism: " + problems.front());
  return f;
}

}  // namespace hdasculpt
