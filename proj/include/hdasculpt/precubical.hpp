#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdasculpt/error.hpp"

namespace hdasculpt {

using CellIdx = int;

enum class Dir : char { s = 's', t = 't' };

inline char to_char(Dir d) { return static_cast<char>(d); }

// Name-based description of a precubical set, as read from a file. Nothing is
// checked here; see validate_precubical.
struct CellTable {
  std::vector<std::vector<std::string>> cells;  // cells[n]: n-cells in declaration order
  std::unordered_map<std::string, std::vector<std::string>> s;
  std::unordered_map<std::string, std::vector<std::string>> t;

  // Adds a cell whose dimension is the length of its face lists.
  CellTable& add(const std::string& id, std::vector<std::string> sf = {},
                 std::vector<std::string> tf = {}) {
    std::size_t n = sf.size();
    if (cells.size() <= n) cells.resize(n + 1);
    cells[n].push_back(id);
    if (n > 0) {
      s[id] = std::move(sf);
      t[id] = std::move(tf);
    }
    return *this;
  }
};

struct IdentityViolation {
  std::string cell;
  int k = 0;
  int l = 0;
  Dir alpha = Dir::s;
  Dir beta = Dir::s;
  std::string lhs;  // alpha_k beta_l q
  std::string rhs;  // beta_{l-1} alpha_k q
};

struct DanglingFace {
  std::string cell;
  Dir dir = Dir::s;
  int k = 0;
  std::string target;
  std::string problem;
};

struct ValidationReport {
  std::vector<std::string> structural;  // duplicate ids, wrong face counts, ...
  std::vector<DanglingFace> dangling;
  std::vector<IdentityViolation> identities;

  bool ok() const { return structural.empty() && dangling.empty() && identities.empty(); }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& p : structural) os << p << "\n";
    for (const auto& d : dangling)
      os << "face " << to_char(d.dir) << d.k << "(" << d.cell << ") = " << d.target << ": "
         << d.problem << "\n";
    for (const auto& v : identities)
      os << to_char(v.alpha) << v.k << to_char(v.beta) << v.l << "(" << v.cell << ") = " << v.lhs
         << " but " << to_char(v.beta) << (v.l - 1) << to_char(v.alpha) << v.k << "(" << v.cell
         << ") = " << v.rhs << "\n";
    return os.str();
  }
};

inline ValidationReport validate_precubical(const CellTable& raw) {
  ValidationReport rep;
  std::unordered_map<std::string, int> dim_of;
  for (std::size_t n = 0; n < raw.cells.size(); ++n)
    for (const auto& id : raw.cells[n]) {
      if (!dim_of.emplace(id, static_cast<int>(n)).second)
        rep.structural.push_back("duplicate cell id " + id);
    }

  auto faces_ok = [&](const std::string& id, int n, Dir d) {
    const auto& table = d == Dir::s ? raw.s : raw.t;
    auto it = table.find(id);
    if (it == table.end()) {
      rep.structural.push_back(std::string("missing ") + to_char(d) + "-faces of " + id);
      return false;
    }
    if (static_cast<int>(it->second.size()) != n) {
      rep.structural.push_back(std::string("cell ") + id + " has " +
                               std::to_string(it->second.size()) + " " + to_char(d) +
                               "-faces, expected " + std::to_string(n));
      return false;
    }
    bool good = true;
    for (int k = 1; k <= n; ++k) {
      const auto& f = it->second[k - 1];
      auto jt = dim_of.find(f);
      if (jt == dim_of.end()) {
        rep.dangling.push_back({id, d, k, f, "unknown cell"});
        good = false;
      } else if (jt->second != n - 1) {
        rep.dangling.push_back({id, d, k, f, "has dimension " + std::to_string(jt->second)});
        good = false;
      }
    }
    return good;
  };

  std::unordered_map<std::string, bool> usable;
  for (std::size_t n = 1; n < raw.cells.size(); ++n)
    for (const auto& id : raw.cells[n]) {
      bool a = faces_ok(id, static_cast<int>(n), Dir::s);
      bool b = faces_ok(id, static_cast<int>(n), Dir::t);
      usable[id] = a && b;
    }
  for (const auto& [id, fs] : raw.s)
    if (!dim_of.count(id)) rep.structural.push_back("faces given for unknown cell " + id);
  for (const auto& [id, fs] : raw.t)
    if (!dim_of.count(id) && !raw.s.count(id))
      rep.structural.push_back("faces given for unknown cell " + id);

  auto face = [&](const std::string& id, Dir d, int k) -> const std::string& {
    return (d == Dir::s ? raw.s : raw.t).at(id)[k - 1];
  };
  auto is_usable = [&](const std::string& id) {
    auto it = usable.find(id);
    return it != usable.end() && it->second;
  };

  for (std::size_t n = 2; n < raw.cells.size(); ++n)
    for (const auto& q : raw.cells[n]) {
      if (!is_usable(q)) continue;
      for (int l = 2; l <= static_cast<int>(n); ++l)
        for (int k = 1; k < l; ++k)
          for (Dir alpha : {Dir::s, Dir::t})
            for (Dir beta : {Dir::s, Dir::t}) {
              const auto& bq = face(q, beta, l);
              const auto& aq = face(q, alpha, k);
              if (!is_usable(bq) || !is_usable(aq)) continue;
              const auto& lhs = face(bq, alpha, k);
              const auto& rhs = face(aq, beta, l - 1);
              if (lhs != rhs) rep.identities.push_back({q, k, l, alpha, beta, lhs, rhs});
            }
    }
  return rep;
}

struct Coface {
  CellIdx cell;
  Dir dir;
  int k;
};

// Validated, index-based precubical set. Cells are numbered by dimension, then
// by declaration order.
class PrecubicalSet {
 public:
  PrecubicalSet() = default;

  static PrecubicalSet from_table(const CellTable& raw) {
    auto rep = validate_precubical(raw);
    if (!rep.ok()) throw Error(ErrorKind::InvalidInput, "invalid precubical set:\n" + rep.summary());
    return from_table_unchecked(raw);
  }

  // Caller guarantees the table is valid.
  static PrecubicalSet from_table_unchecked(const CellTable& raw) {
    PrecubicalSet p;
    for (std::size_t n = 0; n < raw.cells.size(); ++n)
      for (const auto& id : raw.cells[n]) {
        p.index_[id] = static_cast<CellIdx>(p.names_.size());
        p.names_.push_back(id);
        p.dim_.push_back(static_cast<int>(n));
      }
    p.by_dim_.assign(raw.cells.size(), {});
    p.s_.resize(p.names_.size());
    p.t_.resize(p.names_.size());
    p.cofaces_.resize(p.names_.size());
    for (CellIdx q = 0; q < static_cast<CellIdx>(p.names_.size()); ++q) {
      p.by_dim_[p.dim_[q]].push_back(q);
      if (p.dim_[q] == 0) continue;
      for (const auto& f : raw.s.at(p.names_[q])) p.s_[q].push_back(p.index_.at(f));
      for (const auto& f : raw.t.at(p.names_[q])) p.t_[q].push_back(p.index_.at(f));
      for (int k = 1; k <= p.dim_[q]; ++k) {
        p.cofaces_[p.s_[q][k - 1]].push_back({q, Dir::s, k});
        p.cofaces_[p.t_[q][k - 1]].push_back({q, Dir::t, k});
      }
    }
    while (!p.by_dim_.empty() && p.by_dim_.back().empty()) p.by_dim_.pop_back();
    return p;
  }

  CellTable table() const {
    CellTable raw;
    raw.cells.resize(by_dim_.size());
    for (CellIdx q = 0; q < size(); ++q) {
      raw.cells[dim_[q]].push_back(names_[q]);
      if (dim_[q] == 0) continue;
      auto& sv = raw.s[names_[q]];
      auto& tv = raw.t[names_[q]];
      for (int k = 1; k <= dim_[q]; ++k) {
        sv.push_back(names_[s_[q][k - 1]]);
        tv.push_back(names_[t_[q][k - 1]]);
      }
    }
    return raw;
  }

  CellIdx size() const { return static_cast<CellIdx>(names_.size()); }
  int dim(CellIdx q) const { return dim_[q]; }
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::string& name(CellIdx q) const { return names_[q]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<CellIdx> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  CellIdx at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorKind::InvalidInput, "unknown cell " + id);
    return it->second;
  }

  const std::vector<CellIdx>& cells_of_dim(int n) const {
    static const std::vector<CellIdx> none;
    if (n < 0 || n >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[n];
  }

  CellIdx face(CellIdx q, Dir d, int k) const {
    return d == Dir::s ? s_[q][k - 1] : t_[q][k - 1];
  }
  CellIdx s(CellIdx q, int k) const { return s_[q][k - 1]; }
  CellIdx t(CellIdx q, int k) const { return t_[q][k - 1]; }
  const std::vector<Coface>& cofaces(CellIdx q) const { return cofaces_[q]; }

  // Same cells, new face tables (used by re-orderings). Cofaces are rebuilt.
  PrecubicalSet with_faces(std::vector<std::vector<CellIdx>> sf,
                           std::vector<std::vector<CellIdx>> tf) const {
    PrecubicalSet p = *this;
    p.s_ = std::move(sf);
    p.t_ = std::move(tf);
    for (auto& c : p.cofaces_) c.clear();
    for (CellIdx q = 0; q < p.size(); ++q)
      for (int k = 1; k <= p.dim_[q]; ++k) {
        p.cofaces_[p.s_[q][k - 1]].push_back({q, Dir::s, k});
        p.cofaces_[p.t_[q][k - 1]].push_back({q, Dir::t, k});
      }
    return p;
  }

  bool operator==(const PrecubicalSet& o) const {
    return names_ == o.names_ && dim_ == o.dim_ && s_ == o.s_ && t_ == o.t_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> dim_;
  std::unordered_map<std::string, CellIdx> index_;
  std::vector<std::vector<CellIdx>> by_dim_;
  std::vector<std::vector<CellIdx>> s_, t_;
  std::vector<std::vector<Coface>> cofaces_;
};

struct Hda {
  PrecubicalSet cells;
  CellIdx initial = 0;

  static Hda from_table(const CellTable& raw, const std::string& initial) {
    Hda h;
    h.cells = PrecubicalSet::from_table(raw);
    h.initial = h.cells.at(initial);
    if (h.cells.dim(h.initial) != 0)
      throw Error(ErrorKind::InvalidInput, "initial cell " + initial + " is not a 0-cell");
    return h;
  }

  bool operator==(const Hda& o) const { return cells == o.cells && initial == o.initial; }
};

// ---- iterated faces -------------------------------------------------------

struct FaceOp {
  Dir dir;
  int k;
  bool operator==(const FaceOp&) const = default;
};

// Written left to right, applied right to left: {a,b} means a(b(q)).
using FaceWord = std::vector<FaceOp>;

// Rewrites with the precubical identities until indices strictly increase.
inline FaceWord canonical_face_word(FaceWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].k >= w[i + 1].k) {
        // gamma_i delta_j = delta_j gamma_{i+1} for i >= j
        FaceOp a = w[i], b = w[i + 1];
        w[i] = b;
        w[i + 1] = {a.dir, a.k + 1};
        changed = true;
      }
    }
  }
  return w;
}

inline std::optional<CellIdx> apply_face_word(const PrecubicalSet& p, CellIdx q,
                                              const FaceWord& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->k < 1 || it->k > p.dim(q)) return std::nullopt;
    q = p.face(q, it->dir, it->k);
  }
  return q;
}

inline std::string to_string(const FaceWord& w) {
  std::string out;
  for (const auto& f : w) out += to_char(f.dir) + std::to_string(f.k);
  return out.empty() ? "id" : out;
}

struct SelflinkWitness {
  CellIdx cell;  // the higher cell
  CellIdx face;  // reached twice
  FaceWord first;
  FaceWord second;
};

// Every canonical face word of every cell must reach a different cell.
inline std::optional<SelflinkWitness> find_selflink(const PrecubicalSet& p) {
  for (CellIdx q = 0; q < p.size(); ++q) {
    int n = p.dim(q);
    std::unordered_map<CellIdx, FaceWord> seen;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i + 1);
      for (unsigned dirs = 0; dirs < (1u << idx.size()); ++dirs) {
        FaceWord w;
        for (std::size_t j = 0; j < idx.size(); ++j)
          w.push_back({(dirs & (1u << j)) ? Dir::t : Dir::s, idx[j]});
        CellIdx f = *apply_face_word(p, q, w);
        auto [it, fresh] = seen.emplace(f, w);
        if (!fresh) return SelflinkWitness{q, f, it->second, w};
      }
    }
  }
  return std::nullopt;
}

inline bool is_non_selflinked(const PrecubicalSet& p) { return !find_selflink(p).has_value(); }

// ---- reachability ---------------------------------------------------------

// Successors in the step graph: s-steps go up to cofaces, t-steps go down.
inline std::vector<CellIdx> step_successors(const PrecubicalSet& p, CellIdx q) {
  std::vector<CellIdx> out;
  for (const auto& c : p.cofaces(q))
    if (c.dir == Dir::s) out.push_back(c.cell);
  for (int k = 1; k <= p.dim(q); ++k) out.push_back(p.t(q, k));
  return out;
}

inline std::vector<bool> reachable_from(const PrecubicalSet& p, CellIdx start) {
  std::vector<bool> seen(p.size(), false);
  std::queue<CellIdx> todo;
  seen[start] = true;
  todo.push(start);
  while (!todo.empty()) {
    CellIdx q = todo.front();
    todo.pop();
    for (CellIdx r : step_successors(p, q))
      if (!seen[r]) {
        seen[r] = true;
        todo.push(r);
      }
  }
  return seen;
}

inline bool is_connected(const Hda& h) {
  auto seen = reachable_from(h.cells, h.initial);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// A directed cycle in the step graph, or empty if there is none.
inline std::vector<CellIdx> find_step_cycle(const PrecubicalSet& p) {
  enum : char { white, grey, black };
  std::vector<char> color(p.size(), white);
  for (CellIdx root = 0; root < p.size(); ++root) {
    if (color[root] != white) continue;
    std::vector<std::pair<CellIdx, std::size_t>> stack{{root, 0}};
    color[root] = grey;
    while (!stack.empty()) {
      auto& [q, i] = stack.back();
      auto succ = step_successors(p, q);
      if (i == succ.size()) {
        color[q] = black;
        stack.pop_back();
        continue;
      }
      CellIdx r = succ[i++];
      if (color[r] == grey) {
        std::vector<CellIdx> cyc;
        bool on = false;
        for (const auto& entry : stack) {
          if (entry.first == r) on = true;
          if (on) cyc.push_back(entry.first);
        }
        return cyc;
      }
      if (color[r] == white) {
        color[r] = grey;
        stack.push_back({r, 0});
      }
    }
  }
  return {};
}

inline bool is_acyclic(const PrecubicalSet& p) { return find_step_cycle(p).empty(); }
inline bool is_acyclic(const Hda& h) { return is_acyclic(h.cells); }

// ---- morphisms ------------------------------------------------------------

// image[q] is the image of cell q.
struct Morphism {
  std::vector<CellIdx> image;
};

inline std::vector<std::string> check_morphism(const PrecubicalSet& from, const PrecubicalSet& to,
                                               const Morphism& f) {
  std::vector<std::string> problems;
  if (static_cast<CellIdx>(f.image.size()) != from.size()) {
    problems.push_back("morphism does not cover every cell");
    return problems;
  }
  for (CellIdx q = 0; q < from.size(); ++q) {
    CellIdx fq = f.image[q];
    if (fq < 0 || fq >= to.size()) {
      problems.push_back("image of " + from.name(q) + " is out of range");
      continue;
    }
    if (from.dim(q) != to.dim(fq)) {
      problems.push_back("dimension not preserved at " + from.name(q));
      continue;
    }
    for (int k = 1; k <= from.dim(q); ++k)
      for (Dir d : {Dir::s, Dir::t})
        if (f.image[from.face(q, d, k)] != to.face(fq, d, k))
          problems.push_back(std::string("face ") + to_char(d) + std::to_string(k) +
                             " does not commute at " + from.name(q));
  }
  return problems;
}

inline std::vector<std::string> check_morphism(const Hda& from, const Hda& to, const Morphism& f) {
  auto problems = check_morphism(from.cells, to.cells, f);
  if (problems.empty() && f.image[from.initial] != to.initial)
    problems.push_back("initial cell not preserved");
  return problems;
}

}  // namespace hdasculpt
