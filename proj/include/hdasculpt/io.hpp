#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hdasculpt/bulk.hpp"
#include "hdasculpt/chu.hpp"
#include "hdasculpt/decide.hpp"
#include "hdasculpt/error.hpp"
#include "hdasculpt/grid.hpp"
#include "hdasculpt/precubical.hpp"
#include "hdasculpt/st.hpp"

namespace hdasculpt {

using Json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::vector<std::string> string_list(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected a list of ids");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

}  // namespace detail

inline Json load_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("not valid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json load_json_file(const std::string& path) { return load_json_text(read_file(path)); }

// ---- HDA ------------------------------------------------------------------

inline Json to_json(const Hda& h) {
  const auto& p = h.cells;
  Json cells = Json::object();
  for (int n = 0; n <= p.max_dim(); ++n) {
    Json ids = Json::array();
    for (CellIdx q : p.cells_of_dim(n)) ids.push_back(p.name(q));
    cells[std::to_string(n)] = ids;
  }
  Json s = Json::object(), t = Json::object();
  for (CellIdx q = 0; q < p.size(); ++q) {
    if (p.dim(q) == 0) continue;
    Json sf = Json::array(), tf = Json::array();
    for (int k = 1; k <= p.dim(q); ++k) {
      sf.push_back(p.name(p.s(q, k)));
      tf.push_back(p.name(p.t(q, k)));
    }
    s[p.name(q)] = sf;
    t[p.name(q)] = tf;
  }
  Json out = Json::object();
  out["cells"] = cells;
  out["s"] = s;
  out["t"] = t;
  out["initial"] = p.name(h.initial);
  return out;
}

inline CellTable cell_table_from_json(const Json& j) {
  return detail::guarded("HDA", [&] {
    CellTable raw;
    const auto& cells = detail::field(j, "cells");
    if (!cells.is_object()) throw Error(ErrorKind::InvalidInput, "'cells' must map dimensions to id lists");
    for (const auto& [key, ids] : cells.items()) {
      std::size_t pos = 0;
      int n = -1;
      try {
        n = std::stoi(key, &pos);
      } catch (const std::exception&) {
      }
      if (n < 0 || pos != key.size()) throw Error(ErrorKind::InvalidInput, "bad dimension key '" + key + "'");
      if (raw.cells.size() <= static_cast<std::size_t>(n)) raw.cells.resize(n + 1);
      for (auto& id : detail::string_list(ids)) raw.cells[n].push_back(id);
    }
    for (const char* key : {"s", "t"}) {
      if (!j.contains(key)) continue;
      const auto& m = j.at(key);
      if (!m.is_object()) throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' must be an object");
      auto& table = key[0] == 's' ? raw.s : raw.t;
      for (const auto& [id, faces] : m.items()) table[id] = detail::string_list(faces);
    }
    return raw;
  });
}

inline Hda hda_from_json(const Json& j) {
  CellTable raw = cell_table_from_json(j);
  std::string init = detail::guarded("HDA", [&] { return detail::field(j, "initial").get<std::string>(); });
  return Hda::from_table(raw, init);
}

// ---- ST-structures and Chu spaces -----------------------------------------

inline Json to_json(const StStructure& st) {
  Json configs = Json::array();
  for (const auto& c : st.configs) {
    Json S = Json::array(), T = Json::array();
    for (int e : c.started.members()) S.push_back(st.events[e]);
    for (int e : c.terminated.members()) T.push_back(st.events[e]);
    configs.push_back(Json::array({S, T}));
  }
  Json out = Json::object();
  out["events"] = st.events;
  out["configs"] = configs;
  return out;
}

inline StStructure st_from_json(const Json& j) {
  return detail::guarded("ST-structure", [&] {
    StStructure st;
    st.events = detail::string_list(detail::field(j, "events"));
    std::set<std::string> uniq(st.events.begin(), st.events.end());
    if (uniq.size() != st.events.size()) throw Error(ErrorKind::InvalidInput, "duplicate event names");
    for (const auto& c : detail::field(j, "configs")) {
      if (!c.is_array() || c.size() != 2)
        throw Error(ErrorKind::InvalidInput, "a configuration is a pair [started, terminated]");
      st.add(detail::string_list(c[0]), detail::string_list(c[1]));
    }
    return st;
  });
}

inline Json to_json(const ChuSpace3& chu) {
  Json states = Json::array();
  for (const auto& v : chu.states) states.push_back(tuple_string(v));
  Json out = Json::object();
  out["events"] = chu.events;
  out["states"] = states;
  return out;
}

inline ChuSpace3 chu_from_json(const Json& j) {
  return detail::guarded("Chu space", [&] {
    ChuSpace3 chu;
    chu.events = detail::string_list(detail::field(j, "events"));
    for (const auto& s : detail::string_list(detail::field(j, "states"))) {
      auto v = parse_tuple(s);
      if (v.size() != chu.events.size())
        throw Error(ErrorKind::InvalidInput, "state " + s + " does not match the event count");
      chu.states.insert(v);
    }
    return chu;
  });
}

// ---- sculptures -----------------------------------------------------------

inline Json to_json(const Sculpture& sc) {
  Json em = Json::object();
  for (CellIdx q = 0; q < sc.hda.cells.size(); ++q) em[sc.hda.cells.name(q)] = tuple_string(sc.em[q]);
  Json out = Json::object();
  out["hda"] = to_json(sc.hda);
  out["d"] = sc.d;
  out["embedding"] = em;
  return out;
}

inline Sculpture sculpture_from_json(const Json& j) {
  Hda h = hda_from_json(detail::field(j, "hda"));
  return detail::guarded("sculpture", [&] {
    int d = detail::field(j, "d").get<int>();
    if (d < 0) throw Error(ErrorKind::InvalidInput, "negative bulk dimension");
    std::map<std::string, std::string> em;
    for (const auto& [id, v] : detail::field(j, "embedding").items()) em[id] = v.get<std::string>();
    Sculpture sc = make_sculpture(h, d, em);
    auto rep = validate_sculpture(sc);
    if (!rep.ok()) throw Error(ErrorKind::InvalidInput, "invalid sculpture:\n" + rep.summary());
    return sc;
  });
}

// ---- Euclidean complexes --------------------------------------------------

inline Json to_json(const EuclideanComplex& cx) {
  Json cubes = Json::array();
  for (const auto& c : cx.cubes) {
    Json cj = Json::object();
    cj["a"] = c.a;
    cj["b"] = c.b;
    cubes.push_back(cj);
  }
  Json out = Json::object();
  out["n"] = cx.n;
  out["cubes"] = cubes;
  return out;
}

// Accepts {"n", "cubes"} or a bare list of cubes.
inline EuclideanComplex complex_from_json(const Json& j) {
  return detail::guarded("complex", [&] {
    EuclideanComplex cx;
    const Json& list = j.is_array() ? j : detail::field(j, "cubes");
    if (!list.is_array()) throw Error(ErrorKind::InvalidInput, "'cubes' must be a list");
    for (const auto& cj : list) {
      Cube c{detail::field(cj, "a").get<std::vector<int>>(), detail::field(cj, "b").get<std::vector<int>>()};
      if (c.a.size() != c.b.size()) throw Error(ErrorKind::InvalidInput, "cube corners differ in length");
      cx.cubes.push_back(c);
    }
    if (j.is_object() && j.contains("n"))
      cx.n = j.at("n").get<int>();
    else
      cx.n = cx.cubes.empty() ? 0 : static_cast<int>(cx.cubes.front().a.size());
    return cx;
  });
}

// ---- verdicts -------------------------------------------------------------

inline Json path_json(const PrecubicalSet& p, const Path& path) {
  Json cells = Json::array();
  for (CellIdx q : path.cells()) cells.push_back(p.name(q));
  Json out = Json::object();
  out["cells"] = cells;
  out["type"] = path.indexed_type();
  return out;
}

inline Json config_json(const StConfig& c, const std::vector<std::string>& names) {
  Json S = Json::array(), T = Json::array();
  for (int e : c.started.members()) S.push_back(names[e]);
  for (int e : c.terminated.members()) T.push_back(names[e]);
  return Json::array({S, T});
}

inline std::vector<std::string> block_names(const Partition& part, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& b : part.blocks()) out.push_back(block_name(labels, b));
  return out;
}

inline Json witness_json(const Hda& h, const Witness& w, const std::vector<std::string>& labels) {
  const auto& p = h.cells;
  Json out = Json::object();
  out["kind"] = witness_kind(w);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RepeatingWitness>) {
          out["path"] = path_json(p, x.path);
          out["label"] = x.label >= 0 ? Json(labels[x.label]) : Json(nullptr);
          Json cyc = Json::array();
          for (CellIdx q : x.cycle) cyc.push_back(p.name(q));
          out["cycle"] = cyc;
        } else if constexpr (std::is_same_v<T, OrderWitness>) {
          Json cyc = Json::array();
          for (int l : x.cycle) cyc.push_back(labels[l]);
          out["cycle"] = cyc;
        } else if constexpr (std::is_same_v<T, LengthWitness>) {
          out["cell"] = p.name(x.cell);
          out["lengths"] = Json::array({x.first, x.second});
          out["paths"] = Json::array({path_json(p, x.first_path), path_json(p, x.second_path)});
        } else if constexpr (std::is_same_v<T, ClashWitness>) {
          out["cells"] = Json::array({p.name(x.first), p.name(x.second)});
          out["config"] = config_json(x.config, block_names(x.partition, labels));
          Json part = Json::array();
          for (const auto& b : x.partition.blocks()) {
            Json blk = Json::array();
            for (int l : b) blk.push_back(labels[l]);
            part.push_back(blk);
          }
          out["partition"] = part;
        } else {
          out["nodes"] = x.nodes;
          out["backtracks"] = x.backtracks;
          out["branch_points"] = x.branch_points;
          out["heuristic_incomplete"] = x.heuristic_incomplete;
          out["last_failure"] = x.last_failure;
        }
      },
      w);
  return out;
}

inline Json to_json(const Hda& h, const Verdict& v) {
  Json out = Json::object();
  out["sculptable"] = v.sculptable;
  out["verdict"] = v.kind();
  if (v.sculptable) {
    out["d"] = v.d();
    Json part = Json::array();
    for (const auto& b : v.partition.blocks()) {
      Json blk = Json::array();
      for (int l : b) blk.push_back(v.label_names[l]);
      part.push_back(blk);
    }
    out["partition"] = part;
    Json em = Json::object();
    for (CellIdx q = 0; q < h.cells.size(); ++q) em[h.cells.name(q)] = tuple_string(v.sculpture->em[q]);
    out["embedding"] = em;
  } else {
    out["witness"] = witness_json(h, *v.witness, v.label_names);
  }
  out["nodes"] = v.nodes;
  out["backtracks"] = v.backtracks;
  return out;
}

inline Json error_json(const Error& e) {
  Json out = Json::object();
  out["error"] = to_string(e.kind());
  out["message"] = e.what();
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = pe->line();
    out["column"] = pe->column();
  }
  return out;
}

}  // namespace hdasculpt
