#pragma once

#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/precubical.hpp"

namespace hdasculpt {

// An s-step enters target through its k-th lower face; a t-step leaves the
// current cell through its k-th upper face.
struct Step {
  Dir dir;
  int k;
  CellIdx target;
  auto operator<=>(const Step&) const = default;
};

struct Path {
  CellIdx start = 0;
  std::vector<Step> steps;

  CellIdx end() const { return steps.empty() ? start : steps.back().target; }
  std::size_t length() const { return steps.size(); }

  std::string type() const {
    std::string out;
    for (const auto& st : steps) out += to_char(st.dir);
    return out;
  }

  // Type with indices, e.g. "s1t1s2".
  std::string indexed_type() const {
    std::string out;
    for (const auto& st : steps) out += to_char(st.dir) + std::to_string(st.k);
    return out;
  }

  std::vector<CellIdx> cells() const {
    std::vector<CellIdx> out{start};
    for (const auto& st : steps) out.push_back(st.target);
    return out;
  }

  auto operator<=>(const Path&) const = default;
};

inline bool step_is_legal(const PrecubicalSet& p, CellIdx from, const Step& st) {
  if (st.target < 0 || st.target >= p.size() || st.k < 1) return false;
  if (st.dir == Dir::s) return st.k <= p.dim(st.target) && p.s(st.target, st.k) == from;
  return st.k <= p.dim(from) && p.t(from, st.k) == st.target;
}

inline bool is_legal(const PrecubicalSet& p, const Path& path) {
  if (path.start < 0 || path.start >= p.size()) return false;
  CellIdx cur = path.start;
  for (const auto& st : path.steps) {
    if (!step_is_legal(p, cur, st)) return false;
    cur = st.target;
  }
  return true;
}

inline void require_legal(const PrecubicalSet& p, const Path& path) {
  if (!is_legal(p, path)) throw Error(ErrorKind::IllegalPath, "path is not a valid path");
}

inline std::string to_string(const PrecubicalSet& p, const Path& path) {
  std::string out = p.name(path.start);
  for (const auto& st : path.steps)
    out += std::string(" -") + to_char(st.dir) + std::to_string(st.k) + "-> " + p.name(st.target);
  return out;
}

namespace detail {

// Alternatives for the two-step segment steps[i], steps[i+1] of a path whose
// cell before steps[i] is `before`.
inline std::vector<std::pair<Step, Step>> swap_segment(const PrecubicalSet& p, CellIdx before,
                                                       const Step& x, const Step& y) {
  std::vector<std::pair<Step, Step>> out;
  CellIdx r = y.target;
  if (x.dir == Dir::s && y.dir == Dir::s) {
    int a = x.k, b = y.k;
    if (a < b)
      out.push_back({{Dir::s, b - 1, p.s(r, a)}, {Dir::s, a, r}});
    else
      out.push_back({{Dir::s, b, p.s(r, a + 1)}, {Dir::s, a + 1, r}});
  } else if (x.dir == Dir::t && y.dir == Dir::t) {
    int a = x.k, b = y.k;
    if (b < a)
      out.push_back({{Dir::t, b, p.t(before, b)}, {Dir::t, a - 1, r}});
    else
      out.push_back({{Dir::t, b + 1, p.t(before, b + 1)}, {Dir::t, a, r}});
  } else if (x.dir == Dir::s && y.dir == Dir::t) {
    int a = x.k, b = y.k;
    if (a < b)
      out.push_back({{Dir::t, b - 1, p.t(before, b - 1)}, {Dir::s, a, r}});
    else if (a > b)
      out.push_back({{Dir::t, b, p.t(before, b)}, {Dir::s, a - 1, r}});
  } else {
    // t then s: go round through a common upper cell instead
    int c = x.k, d = y.k;
    auto try_upper = [&](int si, int tj) {
      for (const auto& cf : p.cofaces(before))
        if (cf.dir == Dir::s && cf.k == si && p.t(cf.cell, tj) == r)
          out.push_back({{Dir::s, si, cf.cell}, {Dir::t, tj, r}});
    };
    if (d <= c) try_upper(d, c + 1);
    if (c <= d) try_upper(d + 1, c);
  }
  return out;
}

}  // namespace detail

// All paths one elementary move away from `path`.
inline std::vector<Path> elementary_homotopies(const PrecubicalSet& p, const Path& path) {
  require_legal(p, path);
  std::set<Path> found;
  auto cells = path.cells();
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
    for (const auto& [x, y] : detail::swap_segment(p, cells[i], path.steps[i], path.steps[i + 1])) {
      Path q = path;
      q.steps[i] = x;
      q.steps[i + 1] = y;
      if (q != path && is_legal(p, q)) found.insert(q);
    }
  }
  return {found.begin(), found.end()};
}

inline std::vector<Path> elementary_homotopies(const Hda& h, const Path& path) {
  return elementary_homotopies(h.cells, path);
}

// Closure under elementary moves. Throws ResourceLimit beyond `limit` paths.
inline std::set<Path> homotopy_class(const PrecubicalSet& p, const Path& path,
                                     std::size_t limit = 100000) {
  std::set<Path> seen{path};
  std::deque<Path> todo{path};
  while (!todo.empty()) {
    Path cur = std::move(todo.front());
    todo.pop_front();
    for (auto& nxt : elementary_homotopies(p, cur))
      if (seen.insert(nxt).second) {
        if (seen.size() > limit)
          throw Error(ErrorKind::ResourceLimit, "homotopy class exceeds path limit");
        todo.push_back(std::move(nxt));
      }
  }
  return seen;
}

inline bool are_homotopic(const PrecubicalSet& p, const Path& a, const Path& b,
                          std::size_t limit = 100000) {
  if (a.start != b.start || a.end() != b.end() || a.length() != b.length()) return false;
  return homotopy_class(p, a, limit).count(b) > 0;
}

// Rewrites a path starting at a 0-cell into the form (s1 t1)^l s1 s2 ... s_{n-1} s_i
// ending at the same cell. `last_index` picks i; 0 means i = n.
inline Path normalize_path(const Hda& h, const Path& path, int last_index = 0) {
  const auto& p = h.cells;
  require_legal(p, path);
  if (p.dim(path.start) != 0)
    throw Error(ErrorKind::IllegalPath, "normal form needs a path starting at a 0-cell");

  Path cur = path;
  std::size_t guard = 0;
  for (;;) {
    std::size_t i = 0;
    auto& st = cur.steps;
    while (i + 2 < st.size() &&
           !(st[i].dir == Dir::s && st[i + 1].dir == Dir::s && st[i + 2].dir == Dir::t))
      ++i;
    if (i + 2 >= st.size()) break;
    if (++guard > 1000000) throw Error(ErrorKind::ResourceLimit, "path normalization did not settle");
    auto cells = cur.cells();
    if (st[i + 1].k == st[i + 2].k) {
      auto alt = detail::swap_segment(p, cells[i], st[i], st[i + 1]);
      st[i] = alt.front().first;
      st[i + 1] = alt.front().second;
      cells = cur.cells();
    }
    auto alt = detail::swap_segment(p, cells[i + 1], st[i + 1], st[i + 2]);
    st[i + 1] = alt.front().first;
    st[i + 2] = alt.front().second;
  }

  // Now of type (st)^m s^k; rebuild the s-tail canonically.
  std::size_t tail = cur.steps.size();
  while (tail > 0 && cur.steps[tail - 1].dir == Dir::s) --tail;
  int n = static_cast<int>(cur.steps.size() - tail);
  if (n == 0) return cur;
  CellIdx q = cur.end();
  int i = last_index == 0 ? n : last_index;
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidInput, "last index out of range");
  std::vector<CellIdx> chain(n + 1);
  chain[n] = q;
  chain[n - 1] = p.s(q, i);
  for (int m = n - 2; m >= 0; --m) chain[m] = p.s(chain[m + 1], m + 1);
  cur.steps.resize(tail);
  for (int m = 1; m <= n; ++m) cur.steps.push_back({Dir::s, m == n ? i : m, chain[m]});
  return cur;
}

// Every path starting at `start` (including the empty one). Returns nothing if
// there are more than `limit`, which is always the case for cyclic inputs.
inline std::optional<std::vector<Path>> enumerate_paths(const PrecubicalSet& p, CellIdx start,
                                                        std::size_t limit) {
  std::vector<Path> out;
  std::vector<Path> stack{Path{start, {}}};
  while (!stack.empty()) {
    Path cur = std::move(stack.back());
    stack.pop_back();
    CellIdx c = cur.end();
    for (int k = p.dim(c); k >= 1; --k) {
      Path nxt = cur;
      nxt.steps.push_back({Dir::t, k, p.t(c, k)});
      stack.push_back(std::move(nxt));
    }
    const auto& cof = p.cofaces(c);
    for (auto it = cof.rbegin(); it != cof.rend(); ++it)
      if (it->dir == Dir::s) {
        Path nxt = cur;
        nxt.steps.push_back({Dir::s, it->k, it->cell});
        stack.push_back(std::move(nxt));
      }
    out.push_back(std::move(cur));
    if (out.size() > limit) return std::nullopt;
  }
  return out;
}

}  // namespace hdasculpt
