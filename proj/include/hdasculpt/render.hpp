#pragma once

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/events.hpp"
#include "hdasculpt/precubical.hpp"

namespace hdasculpt {

namespace detail {

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string tikz_id(const std::string& s) {
  std::string out = "c";
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '-';
  return out;
}

// Corners of a 2-cell: s1s1, t1s2 (= s1t1), s1t2 (= t1s1), t1t1.
inline std::array<CellIdx, 4> square_corners(const PrecubicalSet& p, CellIdx q) {
  return {p.s(p.s(q, 1), 1), p.t(p.s(q, 2), 1), p.t(p.t(q, 2), 1), p.s(p.t(q, 2), 1)};
}

}  // namespace detail

// 0- and 1-cells as a graph, edges labeled by universal event; each 2-cell is
// a shaded point tied to its corners.
inline std::string to_dot(const Hda& h) {
  const auto& p = h.cells;
  auto ue = universal_events(p);
  std::ostringstream os;
  os << "digraph hda {\n  rankdir=LR;\n  node [shape=circle, width=0.3, fontsize=10];\n";
  for (CellIdx v : p.cells_of_dim(0))
    os << "  " << detail::quoted(p.name(v)) << (v == h.initial ? " [shape=doublecircle]" : "") << ";\n";
  for (CellIdx e : p.cells_of_dim(1))
    os << "  " << detail::quoted(p.name(p.s(e, 1))) << " -> " << detail::quoted(p.name(p.t(e, 1)))
       << " [label=" << detail::quoted(p.name(e) + " : " + label_name(p, ue, ue.label(e))) << "];\n";
  for (CellIdx q : p.cells_of_dim(2)) {
    os << "  " << detail::quoted(p.name(q))
       << " [shape=box, style=filled, fillcolor=gray85, color=gray60, fontsize=8, width=0.2, height=0.2];\n";
    for (CellIdx c : detail::square_corners(p, q))
      os << "  " << detail::quoted(p.name(q)) << " -> " << detail::quoted(p.name(c))
         << " [style=dotted, arrowhead=none, color=gray60];\n";
  }
  for (int n = 3; n <= p.max_dim(); ++n)
    for (CellIdx q : p.cells_of_dim(n)) os << "  // " << n << "-cell " << p.name(q) << " not drawn\n";
  os << "}\n";
  return os.str();
}

// Vertices placed by longest distance from the initial state (x) and order
// of appearance within that distance (y); squares filled in gray.
inline std::string to_tikz(const Hda& h) {
  const auto& p = h.cells;
  if (p.max_dim() > 2) throw Error(ErrorKind::InvalidInput, "TikZ export handles at most 2-dimensional HDA");
  const auto& verts = p.cells_of_dim(0);
  std::map<CellIdx, int> depth;
  for (CellIdx v : verts) depth[v] = 0;
  for (std::size_t round = 0; round < verts.size(); ++round)
    for (CellIdx e : p.cells_of_dim(1)) {
      CellIdx a = p.s(e, 1), b = p.t(e, 1);
      if (depth[b] < depth[a] + 1 && depth[a] + 1 <= static_cast<int>(verts.size())) depth[b] = depth[a] + 1;
    }
  std::map<int, int> used;
  std::map<CellIdx, std::pair<int, int>> at;
  for (CellIdx v : verts) at[v] = {depth[v], used[depth[v]]++};

  auto ue = universal_events(p);
  std::ostringstream os;
  os << "\\begin{tikzpicture}[>=stealth', x=1.5cm, y=1.2cm]\n";
  for (CellIdx q : p.cells_of_dim(2)) {
    auto c = detail::square_corners(p, q);
    os << "  \\fill[gray!30]";
    for (int i = 0; i < 4; ++i) os << " (" << at[c[i]].first << "," << at[c[i]].second << ") --";
    os << " cycle;\n";
  }
  for (CellIdx v : verts)
    os << "  \\node[state" << (v == h.initial ? ", initial" : "") << "] (" << detail::tikz_id(p.name(v))
       << ") at (" << at[v].first << "," << at[v].second << ") {};\n";
  for (CellIdx e : p.cells_of_dim(1))
    os << "  \\path[->] (" << detail::tikz_id(p.name(p.s(e, 1))) << ") edge node {$"
       << label_name(p, ue, ue.label(e)) << "$} (" << detail::tikz_id(p.name(p.t(e, 1))) << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace hdasculpt
