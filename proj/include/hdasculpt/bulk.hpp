#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdasculpt/chu.hpp"
#include "hdasculpt/error.hpp"
#include "hdasculpt/events.hpp"
#include "hdasculpt/partition.hpp"
#include "hdasculpt/precubical.hpp"
#include "hdasculpt/st.hpp"

namespace hdasculpt {

inline constexpr int kMaxBulkDim = 12;

inline int count_half(const ChuState& v) {
  int n = 0;
  for (Chu3 c : v) n += c == Chu3::half;
  return n;
}

// Sets the k-th running coordinate to 0 (s) or 1 (t).
inline ChuState bulk_face(ChuState v, Dir d, int k) {
  int seen = 0;
  for (auto& c : v)
    if (c == Chu3::half && ++seen == k) {
      c = d == Dir::s ? Chu3::zero : Chu3::one;
      return v;
    }
  throw Error(ErrorKind::InvalidInput, "tuple " + tuple_string(v) + " has no face " + std::to_string(k));
}

// Bulk cells are named by their tuple; the empty tuple is called "()".
inline std::string tuple_cell_name(const ChuState& v) {
  return v.empty() ? std::string("()") : tuple_string(v);
}

// Builds an HDA on the given tuples, which must be closed under faces.
inline Hda hda_from_tuples(const std::vector<ChuState>& tuples) {
  CellTable raw;
  std::vector<std::vector<const ChuState*>> by_dim;
  for (const auto& v : tuples) {
    int n = count_half(v);
    if (static_cast<int>(by_dim.size()) <= n) by_dim.resize(n + 1);
    by_dim[n].push_back(&v);
  }
  for (const auto& level : by_dim)
    for (const ChuState* v : level) {
      std::vector<std::string> sf, tf;
      for (int k = 1; k <= count_half(*v); ++k) {
        sf.push_back(tuple_cell_name(bulk_face(*v, Dir::s, k)));
        tf.push_back(tuple_cell_name(bulk_face(*v, Dir::t, k)));
      }
      raw.add(tuple_cell_name(*v), sf, tf);
    }
  std::size_t d = tuples.empty() ? 0 : tuples.front().size();
  return Hda::from_table(raw, tuple_cell_name(ChuState(d, Chu3::zero)));
}

inline std::vector<ChuState> all_tuples(int d) {
  std::vector<ChuState> out;
  ChuState v(d, Chu3::zero);
  const Chu3 next[] = {Chu3::half, Chu3::one, Chu3::zero};
  for (;;) {
    out.push_back(v);
    int i = d - 1;
    while (i >= 0 && v[i] == Chu3::one) v[i--] = Chu3::zero;
    if (i < 0) break;
    v[i] = v[i] == Chu3::zero ? next[0] : next[1];
  }
  return out;
}

inline Hda make_bulk(int d, int max_d = kMaxBulkDim) {
  if (d < 0) throw Error(ErrorKind::InvalidInput, "bulk dimension must be non-negative");
  if (d > max_d)
    throw Error(ErrorKind::ResourceLimit, "bulk dimension " + std::to_string(d) + " exceeds bound " +
                                              std::to_string(max_d));
  return hda_from_tuples(all_tuples(d));
}

// ---- sculptures -----------------------------------------------------------

struct Sculpture {
  Hda hda;
  int d = 0;
  std::vector<ChuState> em;  // per cell of hda
};

struct SculptureReport {
  std::vector<std::string> shape;        // wrong tuple lengths or dimensions
  std::vector<std::string> faces;        // faces not commuting
  std::vector<std::string> injectivity;  // two cells on one tuple
  std::vector<std::string> initial;

  bool ok() const { return shape.empty() && faces.empty() && injectivity.empty() && initial.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto* list : {&shape, &faces, &injectivity, &initial})
      for (const auto& s : *list) out += s + "\n";
    return out;
  }
};

inline SculptureReport validate_sculpture(const Sculpture& sc) {
  SculptureReport rep;
  const auto& p = sc.hda.cells;
  if (static_cast<CellIdx>(sc.em.size()) != p.size()) {
    rep.shape.push_back("embedding lists " + std::to_string(sc.em.size()) + " tuples for " +
                        std::to_string(p.size()) + " cells");
    return rep;
  }
  for (CellIdx q = 0; q < p.size(); ++q) {
    if (static_cast<int>(sc.em[q].size()) != sc.d)
      rep.shape.push_back("tuple of " + p.name(q) + " has length " + std::to_string(sc.em[q].size()));
    else if (count_half(sc.em[q]) != p.dim(q))
      rep.shape.push_back("tuple of " + p.name(q) + " has the wrong dimension");
  }
  if (!rep.shape.empty()) return rep;
  for (CellIdx q = 0; q < p.size(); ++q)
    for (int k = 1; k <= p.dim(q); ++k)
      for (Dir dir : {Dir::s, Dir::t})
        if (sc.em[p.face(q, dir, k)] != bulk_face(sc.em[q], dir, k))
          rep.faces.push_back(std::string("face ") + to_char(dir) + std::to_string(k) + " of " +
                              p.name(q) + " does not commute");
  std::map<ChuState, CellIdx> owner;
  for (CellIdx q = 0; q < p.size(); ++q) {
    auto [it, fresh] = owner.emplace(sc.em[q], q);
    if (!fresh)
      rep.injectivity.push_back(p.name(it->second) + " and " + p.name(q) + " both map to " +
                                tuple_string(sc.em[q]));
  }
  if (sc.em[sc.hda.initial] != ChuState(sc.d, Chu3::zero))
    rep.initial.push_back("initial cell maps to " + tuple_string(sc.em[sc.hda.initial]));
  return rep;
}

// Builds a sculpture from cell-name -> tuple-string pairs.
inline Sculpture make_sculpture(const Hda& h, int d, const std::map<std::string, std::string>& em) {
  Sculpture sc{h, d, std::vector<ChuState>(h.cells.size())};
  for (CellIdx q = 0; q < h.cells.size(); ++q) {
    auto it = em.find(h.cells.name(q));
    if (it == em.end())
      throw Error(ErrorKind::InvalidInput, "no tuple given for cell " + h.cells.name(q));
    sc.em[q] = parse_tuple(it->second);
  }
  return sc;
}

inline Sculpture st_to_sculpture(const StStructure& st) {
  auto rep = check_regular(st);
  if (!rep.regular()) {
    std::string what = !rep.rooted ? "not rooted" : !rep.connected ? "not connected" : "not closed under single events";
    throw Error(ErrorKind::NotRegular, "ST-structure is " + what);
  }
  std::vector<ChuState> tuples;
  for (const auto& c : st.configs) tuples.push_back(config_to_state(c, st.events.size()));
  Sculpture sc;
  sc.hda = hda_from_tuples(tuples);
  sc.d = static_cast<int>(st.events.size());
  for (CellIdx q = 0; q < sc.hda.cells.size(); ++q) {
    const auto& name = sc.hda.cells.name(q);
    sc.em.push_back(name == "()" ? ChuState{} : parse_tuple(name));
  }
  return sc;
}

// Events are the bulk coordinates, named "1".."d".
inline StStructure sculpture_to_st(const Sculpture& sc) {
  StStructure st;
  for (int i = 1; i <= sc.d; ++i) st.events.push_back(std::to_string(i));
  for (const auto& v : sc.em) st.configs.insert(state_to_config(v));
  return st;
}

// Drops coordinates that stay 0 on every image cell.
inline Sculpture simplify_sculpture(const Sculpture& sc) {
  std::vector<int> keep;
  for (int i = 0; i < sc.d; ++i)
    for (const auto& v : sc.em)
      if (v[i] != Chu3::zero) {
        keep.push_back(i);
        break;
      }
  Sculpture out{sc.hda, static_cast<int>(keep.size()), {}};
  for (const auto& v : sc.em) {
    ChuState w;
    for (int i : keep) w.push_back(v[i]);
    out.em.push_back(w);
  }
  return out;
}

struct SculptedEvents {
  Partition partition;          // on universal labels of the sculpted HDA
  std::vector<int> coordinate;  // per block, 0-based bulk coordinate
};

// Labels are equivalent when their edges run along the same bulk coordinate.
inline SculptedEvents event_equiv_sculpt(const Sculpture& sc) {
  auto ue = universal_events(sc.hda.cells);
  std::vector<int> coord(ue.size());
  for (int c = 0; c < ue.size(); ++c) {
    const auto& v = sc.em[ue.classes[c].front()];
    coord[c] = static_cast<int>(std::find(v.begin(), v.end(), Chu3::half) - v.begin());
  }
  SculptedEvents out{Partition::from_labels(coord), {}};
  out.coordinate.resize(out.partition.num_blocks());
  for (int c = 0; c < ue.size(); ++c) out.coordinate[out.partition.block(c)] = coord[c];
  return out;
}

// Same bulk, same image: the HDA bijection is then forced and commutes with faces.
inline bool sculptures_isomorphic(const Sculpture& a, const Sculpture& b) {
  if (a.d != b.d || a.hda.cells.size() != b.hda.cells.size()) return false;
  std::set<ChuState> ia(a.em.begin(), a.em.end()), ib(b.em.begin(), b.em.end());
  return ia == ib && ia.size() == a.em.size();
}

// Same configurations once events are identified by position.
inline bool same_configs(const StStructure& a, const StStructure& b) {
  return a.events.size() == b.events.size() && a.configs == b.configs;
}

// The bulk map induced by a strictly increasing coordinate map {1..d} -> {1..d2}.
inline Morphism bulk_index_map(const Hda& from, const Hda& to, const std::vector<int>& index) {
  Morphism f;
  int d2 = static_cast<int>(to.cells.name(to.initial) == "()" ? 0 : to.cells.name(to.initial).size());
  for (CellIdx q = 0; q < from.cells.size(); ++q) {
    const auto& name = from.cells.name(q);
    ChuState v = name == "()" ? ChuState{} : parse_tuple(name);
    ChuState w(d2, Chu3::zero);
    for (std::size_t i = 0; i < v.size(); ++i) w[index[i] - 1] = v[i];
    f.image.push_back(to.cells.at(tuple_cell_name(w)));
  }
  return f;
}

}  // namespace hdasculpt
