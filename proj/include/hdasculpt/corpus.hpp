#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hdasculpt/bulk.hpp"
#include "hdasculpt/decide.hpp"
#include "hdasculpt/events.hpp"
#include "hdasculpt/io.hpp"
#include "hdasculpt/precubical.hpp"
#include "hdasculpt/st.hpp"

namespace hdasculpt {

struct Shape {
  std::optional<bool> consistent;
  std::optional<bool> ordered;
  std::optional<bool> non_selflinked;
  std::optional<bool> acyclic;
};

struct Fixture {
  std::string name;
  std::string description;
  Hda hda;
  bool sculptable = false;
  std::optional<int> d;                      // bulk dimension of the decided certificate
  std::optional<std::string> witness;        // witness kind when not sculptable
  std::optional<int> classes;                // number of event classes when sculptable
  std::vector<std::vector<std::string>> partition;  // expected blocks of label names, if fixed
  Shape shape;
  std::optional<StStructure> st;
  std::vector<Sculpture> sculptures;         // hand-built embeddings
  std::string unfolding;                     // another fixture holding this HDA's unfolding
};

namespace corpus_detail {

using Edge = std::array<std::string, 3>;    // name, source, target
using Square = std::array<std::string, 5>;  // name, s1, t1, s2, t2

inline Hda build(const std::vector<std::string>& vertices, const std::vector<Edge>& edges,
                 const std::vector<Square>& squares, const std::string& initial) {
  CellTable raw;
  for (const auto& v : vertices) raw.add(v);
  for (const auto& [n, s, t] : edges) raw.add(n, {s}, {t});
  for (const auto& [n, s1, t1, s2, t2] : squares) raw.add(n, {s1, s2}, {t1, t2});
  return Hda::from_table(raw, initial);
}

// Sculpture whose cells are named by their own bulk tuples.
inline Sculpture tuple_named(const Hda& h, int d) {
  Sculpture sc{h, d, {}};
  for (CellIdx q = 0; q < h.cells.size(); ++q) {
    const auto& n = h.cells.name(q);
    sc.em.push_back(n == "()" ? ChuState{} : parse_tuple(n));
  }
  return sc;
}

inline std::vector<ChuState> matchbox_tuples() {
  std::vector<ChuState> out;
  for (const auto& v : all_tuples(3))
    if (tuple_string(v) != "xxx" && tuple_string(v) != "0xx") out.push_back(v);
  return out;
}

inline Hda matchbox() { return hda_from_tuples(matchbox_tuples()); }

// The matchbox with corner 011 split in two: one copy is reached through 0x1
// and bounds square xx1, the other through 01x and bounds x1x.
inline Hda broken_box() {
  Hda mb = matchbox();
  const auto& p = mb.cells;
  auto fix = [](const std::string& parent, const std::string& f) {
    if (f == "011" && parent == "0x1") return std::string("011a");
    if (f == "011" && parent == "01x") return std::string("011b");
    if (f == "x11" && parent == "xx1") return std::string("x11a");
    if (f == "x11" && parent == "x1x") return std::string("x11b");
    return f;
  };
  CellTable raw;
  for (CellIdx q = 0; q < p.size(); ++q) {
    const auto& n = p.name(q);
    if (n == "011") {
      raw.add("011a");
      raw.add("011b");
      continue;
    }
    if (n == "x11") {
      raw.add("x11a", {"011a"}, {"111"});
      raw.add("x11b", {"011b"}, {"111"});
      continue;
    }
    std::vector<std::string> sf, tf;
    for (int k = 1; k <= p.dim(q); ++k) {
      sf.push_back(fix(n, p.name(p.s(q, k))));
      tf.push_back(fix(n, p.name(p.t(q, k))));
    }
    raw.add(n, sf, tf);
  }
  return Hda::from_table(raw, "000");
}

inline Hda example_order_cycle() {
  return build({"0", "1", "2", "3", "4", "5", "6"},
               {{"a", "0", "1"}, {"b", "0", "5"}, {"c", "0", "3"}, {"d", "1", "2"}, {"e", "3", "2"},
                {"f", "3", "4"}, {"g", "5", "4"}, {"h", "5", "6"}, {"i", "1", "6"}},
               {{"A", "c", "d", "a", "e"}, {"B", "a", "h", "b", "i"}, {"C", "b", "f", "c", "g"}}, "0");
}

}  // namespace corpus_detail

inline std::vector<Fixture> fixtures() {
  using namespace corpus_detail;
  std::vector<Fixture> out;

  {
    Fixture f;
    f.name = "matchbox";
    f.description = "open box: the 3-cube without its interior and one side";
    f.hda = matchbox();
    f.sculptable = true;
    f.d = 3;
    f.classes = 3;
    f.shape = {true, true, true, true};
    f.sculptures.push_back(tuple_named(f.hda, 3));
    f.unfolding = "broken_box";
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "broken_box";
    f.description = "unfolded open box: corner 011 reached along two separate faces";
    f.hda = broken_box();
    f.witness = "LabelClash";
    f.shape = {true, true, true, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "ab_loop";
    f.description = "two states joined by a and b in a cycle";
    f.hda = build({"p", "q"}, {{"a", "p", "q"}, {"b", "q", "p"}}, {}, "p");
    f.witness = "RepeatingEvents";
    f.shape = {true, true, true, false};
    f.unfolding = "ab_loop_unfolding";
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "ab_loop_unfolding";
    f.description = "the a/b loop unrolled to depth 3";
    f.hda = build({"u0", "u1", "u2", "u3"}, {{"a1", "u0", "u1"}, {"b1", "u1", "u2"}, {"a2", "u2", "u3"}}, {},
                  "u0");
    f.sculptable = true;
    f.d = 3;
    f.classes = 3;
    f.shape = {true, true, true, true};
    f.sculptures.push_back(make_sculpture(
        f.hda, 3,
        {{"u0", "000"}, {"a1", "x00"}, {"u1", "100"}, {"b1", "1x0"}, {"u2", "110"}, {"a2", "11x"}, {"u3", "111"}}));
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "triangle";
    f.description = "one edge and a two-edge path between the same states";
    f.hda = build({"I", "1", "2"}, {{"b", "I", "1"}, {"c", "1", "2"}, {"a", "I", "2"}}, {}, "I");
    f.witness = "LengthMismatch";
    f.shape = {true, true, true, true};
    f.unfolding = "triangle_unfolding";
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "triangle_unfolding";
    f.description = "the triangle with its end state split";
    f.hda = build({"I", "1", "2a", "2b"}, {{"b", "I", "1"}, {"c", "1", "2a"}, {"a", "I", "2b"}}, {}, "I");
    f.sculptable = true;
    f.d = 3;
    f.classes = 3;
    f.shape = {true, true, true, true};
    f.sculptures.push_back(make_sculpture(
        f.hda, 3, {{"I", "000"}, {"b", "x00"}, {"1", "100"}, {"c", "1x0"}, {"2a", "110"}, {"a", "00x"}, {"2b", "001"}}));
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "speed_game";
    f.description = "two racing d-moves followed by different continuations";
    f.hda = build({"00", "10a", "20a", "10b", "20b", "01", "11", "21a", "21b"},
                  {{"d1", "00", "10a"}, {"d2", "00", "10b"}, {"d3", "01", "11"}, {"b1", "10a", "20a"},
                   {"b2", "11", "21a"}, {"c1", "10b", "20b"}, {"c2", "11", "21b"}, {"a1", "00", "01"},
                   {"a2", "10a", "11"}, {"a3", "10b", "11"}, {"a4", "20a", "21a"}, {"a5", "20b", "21b"}},
                  {{"S1", "a1", "a2", "d1", "d3"},
                   {"S2", "a2", "a4", "b1", "b2"},
                   {"S3", "a1", "a3", "d2", "d3"},
                   {"S4", "a3", "a5", "c1", "c2"}},
                  "00");
    f.witness = "LabelClash";
    f.shape = {true, true, true, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "asymmetric_conflict";
    f.description = "a disables b: three transitions read in a 2- or a 3-dimensional bulk";
    f.hda = build({"00", "10", "01", "11"}, {{"a", "00", "10"}, {"b", "00", "01"}, {"a2", "01", "11"}}, {},
                  "00");
    f.sculptable = true;
    f.d = 3;
    f.classes = 3;
    f.shape = {true, true, true, true};
    StStructure st{{"a", "b"}, {}};
    st.add({}, {}).add({"a"}, {}).add({"a"}, {"a"}).add({"b"}, {}).add({"b"}, {"b"});
    st.add({"a", "b"}, {"b"}).add({"a", "b"}, {"a", "b"});
    f.st = st;
    f.sculptures.push_back(make_sculpture(
        f.hda, 2, {{"00", "00"}, {"a", "x0"}, {"10", "10"}, {"b", "0x"}, {"01", "01"}, {"a2", "x1"}, {"11", "11"}}));
    f.sculptures.push_back(make_sculpture(
        f.hda, 3,
        {{"00", "000"}, {"a", "x00"}, {"10", "100"}, {"b", "0x0"}, {"01", "010"}, {"a2", "01x"}, {"11", "011"}}));
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "empty_square";
    f.description = "four edges around an unfilled square";
    f.hda = build({"00", "10", "01", "11"},
                  {{"q1", "00", "10"}, {"q2", "00", "01"}, {"q3", "01", "11"}, {"q4", "10", "11"}}, {}, "00");
    f.sculptable = true;
    f.d = 2;
    f.classes = 2;
    f.partition = {{"q1", "q3"}, {"q2", "q4"}};
    f.shape = {true, true, true, true};
    f.sculptures.push_back(make_sculpture(
        f.hda, 2,
        {{"00", "00"}, {"q1", "x0"}, {"10", "10"}, {"q2", "0x"}, {"01", "01"}, {"q3", "x1"}, {"q4", "1x"}, {"11", "11"}}));
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "interleaving_wheel";
    f.description = "one-dimensional HDA whose forced interleavings identify two distinct states";
    f.hda = build({"9", "5", "10", "6", "1", "2", "3", "7", "11", "12"},
                  {{"c1", "9", "5"},
                   {"b2", "5", "6"},
                   {"b1", "9", "10"},
                   {"c2", "10", "6"},
                   {"c4", "11", "1"},
                   {"b3", "1", "2"},
                   {"e23", "2", "3"},
                   {"e73", "7", "3"},
                   {"b4", "11", "12"},
                   {"c3", "12", "7"},
                   {"a2", "5", "1"},
                   {"a1", "6", "2"},
                   {"a5", "6", "7"},
                   {"a3", "9", "11"},
                   {"a4", "10", "12"}},
                  {}, "9");
    f.witness = "LabelClash";
    f.shape = {true, true, true, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "backtracker";
    f.description = "one-dimensional HDA where a wrong homotopy-pair repair must be undone";
    f.hda = build({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"},
                  {{"e1_2", "1", "2"},
                   {"e5_1", "5", "1"},
                   {"e6_2", "6", "2"},
                   {"e2_3", "2", "3"},
                   {"e7_3", "7", "3"},
                   {"e1_4", "1", "4"},
                   {"e5_6", "5", "6"},
                   {"e6_7", "6", "7"},
                   {"e8_4", "8", "4"},
                   {"e11_8", "11", "8"},
                   {"e9_5", "9", "5"},
                   {"e9_10", "9", "10"},
                   {"e10_6", "10", "6"},
                   {"e9_11", "9", "11"},
                   {"e11_12", "11", "12"},
                   {"e12_7", "12", "7"},
                   {"e10_12", "10", "12"}},
                  {}, "9");
    f.sculptable = true;
    f.d = 4;
    f.classes = 4;
    f.shape = {true, true, true, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "self_concurrent_loop";
    f.description = "a square all of whose faces are one loop edge";
    CellTable raw;
    raw.add("q0").add("q1", {"q0"}, {"q0"}).add("q2", {"q1", "q1"}, {"q1", "q1"});
    f.hda = Hda::from_table(raw, "q0");
    f.witness = "NotOrdered";
    f.shape = {false, false, false, false};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "three_squares_shared_edge";
    f.description = "three adjacent squares where the first and the last share an edge";
    // vertices 00 = 20 and 01 = 30 are glued through the shared edge e
    f.hda = build({"A", "B", "10", "11", "21", "31"},
                  {{"e", "A", "B"},
                   {"x1", "A", "10"},
                   {"x2", "B", "11"},
                   {"v1", "10", "11"},
                   {"x3", "10", "A"},
                   {"x4", "11", "21"},
                   {"v2", "A", "21"},
                   {"x5", "21", "31"},
                   {"v3", "B", "31"}},
                  {{"q2", "e", "v1", "x1", "x2"}, {"q2p", "v1", "v2", "x3", "x4"}, {"q2pp", "v2", "v3", "e", "x5"}},
                  "A");
    f.witness = "NotOrdered";
    f.shape = {false, false, true, false};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "pinched_square";
    f.description = "a square whose two middle corners are the same state";
    f.hda = build({"x", "v", "y"}, {{"a", "x", "v"}, {"c", "x", "v"}, {"b", "v", "y"}, {"d", "v", "y"}},
                  {{"q", "a", "b", "c", "d"}}, "x");
    f.witness = "RepeatingEvents";
    f.shape = {true, true, false, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "order_cycle";
    f.description = "three squares around a corner with face numbering that cycles";
    f.hda = example_order_cycle();
    f.witness = "NotOrdered";
    f.shape = {true, false, true, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "order_cycle_reordered";
    f.description = "the cyclic three-square corner with faces renumbered along c < b < a";
    Hda h = example_order_cycle();
    auto ue = universal_events(h.cells);
    std::vector<int> inc{ue.label(h.cells.at("c")), ue.label(h.cells.at("b")), ue.label(h.cells.at("a"))};
    f.hda = Hda{symmetric_variant(h.cells, ue, rank_from_order(inc)), h.initial};
    f.sculptable = true;
    f.d = 3;
    f.classes = 3;
    f.shape = {true, true, true, true};
    out.push_back(f);
  }
  {
    Fixture f;
    f.name = "empty_box";
    f.description = "the full 3-dimensional bulk";
    f.hda = make_bulk(3);
    f.sculptable = true;
    f.d = 3;
    f.classes = 3;
    f.shape = {true, true, true, true};
    f.sculptures.push_back(tuple_named(f.hda, 3));
    out.push_back(f);
  }
  return out;
}

inline const Fixture& find_fixture(const std::vector<Fixture>& all, const std::string& name) {
  for (const auto& f : all)
    if (f.name == name) return f;
  throw Error(ErrorKind::InvalidInput, "no fixture named " + name);
}

inline Json to_json(const Fixture& f) {
  Json exp = Json::object();
  exp["sculptable"] = f.sculptable;
  if (f.d) exp["d"] = *f.d;
  if (f.classes) exp["classes"] = *f.classes;
  if (f.witness) exp["witness"] = *f.witness;
  if (!f.partition.empty()) exp["partition"] = f.partition;
  Json shape = Json::object();
  if (f.shape.consistent) shape["consistent"] = *f.shape.consistent;
  if (f.shape.ordered) shape["ordered"] = *f.shape.ordered;
  if (f.shape.non_selflinked) shape["non_selflinked"] = *f.shape.non_selflinked;
  if (f.shape.acyclic) shape["acyclic"] = *f.shape.acyclic;
  exp["shape"] = shape;
  Json out = Json::object();
  out["name"] = f.name;
  out["description"] = f.description;
  out["expected"] = exp;
  if (!f.unfolding.empty()) out["unfolding"] = f.unfolding;
  out["hda"] = to_json(f.hda);
  if (f.st) out["st"] = to_json(*f.st);
  if (!f.sculptures.empty()) {
    Json scs = Json::array();
    for (const auto& s : f.sculptures) scs.push_back(to_json(s));
    out["sculptures"] = scs;
  }
  return out;
}

struct FixtureOutcome {
  Verdict verdict;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

inline std::vector<std::vector<std::string>> sorted_blocks(std::vector<std::vector<std::string>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// Decide the fixture's HDA and compare against everything it expects.
inline FixtureOutcome check_fixture(const Fixture& f, const SearchOptions& opt = {}) {
  FixtureOutcome out;
  auto& bad = out.problems;
  const auto& p = f.hda.cells;
  auto expect = [&](const char* what, std::optional<bool> want, bool got) {
    if (want && *want != got)
      bad.push_back(std::string(what) + ": expected " + (*want ? "true" : "false") + ", got " + (got ? "true" : "false"));
  };
  expect("consistent", f.shape.consistent, is_consistent(p));
  expect("ordered", f.shape.ordered, is_ordered(p));
  expect("non_selflinked", f.shape.non_selflinked, is_non_selflinked(p));
  expect("acyclic", f.shape.acyclic, is_acyclic(f.hda));

  out.verdict = decide_sculptable(f.hda, opt);
  const auto& v = out.verdict;
  if (v.sculptable != f.sculptable) bad.push_back("verdict: expected " + std::string(f.sculptable ? "Sculptable" : "not sculptable") + ", got " + v.kind());
  if (f.witness && v.kind() != *f.witness) bad.push_back("witness: expected " + *f.witness + ", got " + v.kind());
  if (v.sculptable) {
    if (f.d && v.d() != *f.d) bad.push_back("d: expected " + std::to_string(*f.d) + ", got " + std::to_string(v.d()));
    if (f.classes && v.partition.num_blocks() != *f.classes)
      bad.push_back("classes: expected " + std::to_string(*f.classes) + ", got " + std::to_string(v.partition.num_blocks()));
    if (!f.partition.empty()) {
      std::vector<std::vector<std::string>> got;
      for (const auto& b : v.partition.blocks()) {
        got.emplace_back();
        for (int l : b) got.back().push_back(v.label_names[l]);
      }
      if (sorted_blocks(got) != sorted_blocks(f.partition)) bad.push_back("partition differs from the expected one");
    }
  }
  for (std::size_t i = 0; i < f.sculptures.size(); ++i) {
    auto rep = validate_sculpture(f.sculptures[i]);
    if (!rep.ok()) bad.push_back("sculpture " + std::to_string(i) + " invalid: " + rep.summary());
  }
  return out;
}

// Plain HDA JSON or a fixture file wrapping one under "hda".
inline Hda hda_from_any_json(const Json& j) {
  if (j.is_object() && j.contains("hda") && !j.contains("cells")) return hda_from_json(j.at("hda"));
  return hda_from_json(j);
}

}  // namespace hdasculpt
