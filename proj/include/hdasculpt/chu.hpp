#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/st.hpp"

namespace hdasculpt {

// 0 = not started, half = running, 1 = terminated.
enum class Chu3 : char { zero = '0', half = 'x', one = '1' };

using ChuState = std::vector<Chu3>;

inline std::string tuple_string(const ChuState& v) {
  std::string out;
  for (Chu3 c : v) out += static_cast<char>(c);
  return out;
}

inline ChuState parse_tuple(const std::string& s) {
  ChuState v;
  for (char c : s) {
    if (c == '0') v.push_back(Chu3::zero);
    else if (c == 'x' || c == 'h') v.push_back(Chu3::half);
    else if (c == '1') v.push_back(Chu3::one);
    else throw Error(ErrorKind::InvalidInput, "bad tuple entry '" + std::string(1, c) + "' in " + s);
  }
  return v;
}

struct ChuSpace3 {
  std::vector<std::string> events;
  std::set<ChuState> states;

  bool operator==(const ChuSpace3&) const = default;
};

inline ChuState config_to_state(const StConfig& c, std::size_t n) {
  ChuState v(n, Chu3::zero);
  for (int e : c.started.members()) v[e] = Chu3::half;
  for (int e : c.terminated.members()) v[e] = Chu3::one;
  return v;
}

inline StConfig state_to_config(const ChuState& v) {
  StConfig c;
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (v[e] != Chu3::zero) c.started.insert(static_cast<int>(e));
    if (v[e] == Chu3::one) c.terminated.insert(static_cast<int>(e));
  }
  return c;
}

inline ChuSpace3 st_to_chu(const StStructure& st) {
  ChuSpace3 chu{st.events, {}};
  for (const auto& c : st.configs) chu.states.insert(config_to_state(c, st.events.size()));
  return chu;
}

inline StStructure chu_to_st(const ChuSpace3& chu) {
  StStructure st{chu.events, {}};
  for (const auto& v : chu.states) {
    if (v.size() != chu.events.size())
      throw Error(ErrorKind::InvalidInput, "state length does not match the event count");
    st.configs.insert(state_to_config(v));
  }
  return st;
}

// Rows are events, columns are states.
inline bool is_separable(const ChuSpace3& chu) {
  std::set<std::string> rows;
  for (std::size_t e = 0; e < chu.events.size(); ++e) {
    std::string row;
    for (const auto& v : chu.states) row += static_cast<char>(v[e]);
    if (!rows.insert(row).second) return false;
  }
  return true;
}

inline std::string chu_grid(const ChuSpace3& chu) {
  std::size_t w = 0;
  for (const auto& e : chu.events) w = std::max(w, e.size());
  std::string out;
  for (std::size_t e = 0; e < chu.events.size(); ++e) {
    out += chu.events[e] + std::string(w - chu.events[e].size() + 1, ' ');
    for (const auto& v : chu.states) out += static_cast<char>(v[e]);
    out += "\n";
  }
  return out;
}

}  // namespace hdasculpt
