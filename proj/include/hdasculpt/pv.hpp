#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hdasculpt/error.hpp"
#include "hdasculpt/grid.hpp"

namespace hdasculpt {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct PvAction {
  bool lock;  // P(x) locks, V(x) releases
  std::string resource;
  int line = 0;
  int column = 0;
};

struct PvProgram {
  std::map<std::string, std::size_t> capacity;  // declared; others default to 1
  std::vector<std::string> resources;            // in order of first mention
  std::vector<std::vector<PvAction>> processes;

  std::size_t capacity_of(const std::string& r) const {
    auto it = capacity.find(r);
    return it == capacity.end() ? 1 : it->second;
  }
};

namespace detail {

inline bool ident_char(char c, bool first) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         (!first && std::isdigit(static_cast<unsigned char>(c)));
}

inline bool is_ident(const std::string& s) {
  if (s.empty() || !ident_char(s[0], true)) return false;
  for (char c : s)
    if (!ident_char(c, false)) return false;
  return true;
}

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

// One process per line of P(x) / V(x) tokens; "resource x capacity k" lines
// set capacities (k may be "inf"); '#' starts a comment.
inline PvProgram parse_pv(const std::string& text) {
  PvProgram prog;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto mention = [&](const std::string& r) {
    if (std::find(prog.resources.begin(), prog.resources.end(), r) == prog.resources.end())
      prog.resources.push_back(r);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].text == "resource") {
      if (toks.size() != 4 || toks[2].text != "capacity")
        throw ParseError(ErrorKind::SyntaxError, "expected 'resource <name> capacity <k>'", lineno,
                         toks[0].column);
      if (!detail::is_ident(toks[1].text))
        throw ParseError(ErrorKind::SyntaxError, "bad resource name", lineno, toks[1].column);
      std::size_t cap = 0;
      if (toks[3].text == "inf") {
        cap = kUnbounded;
      } else {
        const auto& k = toks[3].text;
        if (k.empty() || k.size() > 18 ||
            !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw ParseError(ErrorKind::SyntaxError, "capacity must be a positive integer", lineno, toks[3].column);
        cap = std::stoull(k);
        if (cap == 0)
          throw ParseError(ErrorKind::SyntaxError, "capacity must be a positive integer", lineno, toks[3].column);
      }
      prog.capacity[toks[1].text] = cap;
      mention(toks[1].text);
      continue;
    }
    std::vector<PvAction> proc;
    std::map<std::string, int> held;
    std::map<std::string, int> last_lock_col;
    for (const auto& tok : toks) {
      const auto& s = tok.text;
      if (s.size() < 4 || (s[0] != 'P' && s[0] != 'V') || s[1] != '(' || s.back() != ')' ||
          !detail::is_ident(s.substr(2, s.size() - 3)))
        throw ParseError(ErrorKind::SyntaxError, "expected P(name) or V(name), got '" + s + "'", lineno,
                         tok.column);
      PvAction act{s[0] == 'P', s.substr(2, s.size() - 3), lineno, tok.column};
      mention(act.resource);
      if (act.lock) {
        ++held[act.resource];
        last_lock_col[act.resource] = tok.column;
      } else if (held[act.resource] == 0) {
        throw ParseError(ErrorKind::UnmatchedV, "V(" + act.resource + ") without a matching P", lineno,
                         tok.column);
      } else {
        --held[act.resource];
      }
      proc.push_back(act);
    }
    for (const auto& [r, n] : held)
      if (n > 0)
        throw ParseError(ErrorKind::HeldAtEnd, "process ends holding " + r, lineno, last_lock_col[r]);
    prog.processes.push_back(std::move(proc));
  }
  return prog;
}

// held[r][j]: whether the process holds r after its first j actions.
inline std::vector<std::vector<bool>> holding_table(const PvProgram& prog, std::size_t proc) {
  const auto& acts = prog.processes[proc];
  std::vector<std::vector<bool>> out(prog.resources.size(), std::vector<bool>(acts.size() + 1, false));
  for (std::size_t r = 0; r < prog.resources.size(); ++r) {
    long count = 0;
    for (std::size_t j = 0; j < acts.size(); ++j) {
      if (acts[j].resource == prog.resources[r]) count += acts[j].lock ? 1 : -1;
      out[r][j + 1] = count > 0;
    }
  }
  return out;
}

struct PvComplex {
  EuclideanComplex complex;
  ComplexHda hda;
  ComplexHda reachable;    // cells reachable from the starting corner
  std::vector<int> sizes;  // actions per process
};

// Between positions j and j+1 a process holds what it held after j actions;
// at position j it holds a resource only if it does so on both sides. A cell
// stays unless some resource is held by more processes than its capacity.
inline PvComplex pv_to_complex(const PvProgram& prog) {
  PvComplex out;
  std::size_t d = prog.processes.size();
  for (const auto& p : prog.processes) out.sizes.push_back(static_cast<int>(p.size()));
  std::vector<std::vector<std::vector<bool>>> held;
  for (std::size_t i = 0; i < d; ++i) held.push_back(holding_table(prog, i));

  out.complex.n = static_cast<int>(d);
  for (const auto& c : detail::grid_cubes(out.sizes)) {
    bool keep = true;
    for (std::size_t r = 0; r < prog.resources.size() && keep; ++r) {
      std::size_t users = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const auto& h = held[i][r];
        int j = c.a[i];
        bool holds = c.b[i] > j ? h[j] : (j > 0 && h[j - 1] && h[j]);
        users += holds;
      }
      keep = users <= prog.capacity_of(prog.resources[r]);
    }
    if (keep) out.complex.cubes.push_back(c);
  }
  std::vector<int> zero(d, 0);
  if (std::find(out.complex.cubes.begin(), out.complex.cubes.end(), vertex_cube(zero)) ==
      out.complex.cubes.end())
    throw Error(ErrorKind::InitialForbidden, "the starting corner is forbidden");
  out.hda = complex_to_hda(out.complex, zero, false);
  // a cell is reachable iff its lowest corner is, so this stays face closed
  auto seen = reachable_from(out.hda.hda.cells, out.hda.hda.initial);
  EuclideanComplex live{out.complex.n, {}};
  for (CellIdx q = 0; q < out.hda.hda.cells.size(); ++q)
    if (seen[q]) live.cubes.push_back(out.hda.cubes[q]);
  out.reachable = complex_to_hda(live, zero, false);
  return out;
}

}  // namespace hdasculpt
