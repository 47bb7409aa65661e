#include <gtest/gtest.h>

#include <set>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

const char* kTwoMutex =
    "P(a) P(b) V(b) V(a)\n"
    "P(b) P(a) V(a) V(b)\n";

// A process holds a resource strictly between its P (action i) and its V
// (action k), counted in actions; a cell survives if at its center no
// resource is held by more processes than it has capacity.
struct Interval {
  double lo, hi;
};

bool open_contains(const Interval& iv, double x) { return iv.lo < x && x < iv.hi; }

std::set<Cube> surviving(const std::vector<int>& sizes,
                         const std::vector<std::vector<Interval>>& per_resource, std::size_t capacity) {
  std::set<Cube> out;
  for (const auto& c : detail::grid_cubes(sizes)) {
    bool ok = true;
    for (const auto& holds : per_resource) {
      std::size_t n = 0;
      for (std::size_t i = 0; i < holds.size(); ++i) n += open_contains(holds[i], (c.a[i] + c.b[i]) / 2.0);
      ok = ok && n <= capacity;
    }
    if (ok) out.insert(c);
  }
  return out;
}

}  // namespace

TEST(Pv, ParsesProcessesAndResources) {
  auto prog = parse_pv(kTwoMutex);
  ASSERT_EQ(prog.processes.size(), 2u);
  EXPECT_EQ(prog.resources, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(prog.processes[1][0].resource, "b");
  EXPECT_TRUE(prog.processes[1][0].lock);
  EXPECT_EQ(prog.processes[1][0].column, 1);
  EXPECT_EQ(prog.processes[1][1].column, 6);
  EXPECT_EQ(prog.capacity_of("a"), 1u);
}

TEST(Pv, TwoMutexBoardLosesFiveSquares) {
  auto pv = pv_to_complex(parse_pv(kTwoMutex));
  EXPECT_EQ(pv.sizes, (std::vector<int>{4, 4}));
  // a: process 0 holds on (1,4), process 1 on (2,3); b: (2,3) and (1,4)
  auto expected = surviving({4, 4}, {{{1, 4}, {2, 3}}, {{2, 3}, {1, 4}}}, 1);
  std::set<Cube> got(pv.complex.cubes.begin(), pv.complex.cubes.end());
  EXPECT_EQ(got, expected);
  std::size_t squares = 0;
  for (const auto& c : got) squares += c.dim() == 2;
  EXPECT_EQ(squares, 16u - 5u);
  // nothing enters the top corner square from below
  EXPECT_FALSE(is_connected(pv.hda.hda));
  EXPECT_TRUE(validate_sculpture(complex_to_sculpture(pv.hda)).ok());
}

TEST(Pv, ReachablePartOfTwoMutexBoard) {
  auto pv = pv_to_complex(parse_pv(kTwoMutex));
  const auto& r = pv.reachable;
  EXPECT_TRUE(is_connected(r.hda));
  std::set<Cube> got(r.cubes.begin(), r.cubes.end());
  std::set<Cube> full(pv.hda.cubes.begin(), pv.hda.cubes.end());
  for (const auto& c : got) EXPECT_TRUE(full.count(c)) << cube_name(c);
  // lost: the cells whose lowest corner is (3,3)
  std::set<std::string> lost;
  for (const auto& c : full)
    if (!got.count(c)) lost.insert(cube_name(c));
  EXPECT_EQ(lost, (std::set<std::string>{"3,3", "3+,3", "3,3+", "3+,3+"}));
  auto v = decide_sculptable(r.hda);
  EXPECT_TRUE(v.sculptable);
  EXPECT_TRUE(validate_sculpture(*v.sculpture).ok());
}

TEST(Pv, ForbiddenSquaresAreTheCross) {
  auto pv = pv_to_complex(parse_pv(kTwoMutex));
  std::set<std::pair<int, int>> kept;
  for (const auto& c : pv.complex.cubes)
    if (c.dim() == 2) kept.insert({c.a[0], c.a[1]});
  std::set<std::pair<int, int>> missing;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!kept.count({i, j})) missing.insert({i, j});
  EXPECT_EQ(missing, (std::set<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 1}, {2, 3}}));
}

TEST(Pv, HoldingTableCountsActions) {
  auto prog = parse_pv(kTwoMutex);
  auto held = holding_table(prog, 0);
  EXPECT_EQ(held[0], (std::vector<bool>{false, true, true, true, false}));
  EXPECT_EQ(held[1], (std::vector<bool>{false, false, true, false, false}));
}

TEST(Pv, CapacityTwoKeepsTheWholeBoard) {
  auto pv = pv_to_complex(parse_pv("resource a capacity 2\nresource b capacity inf\n" + std::string(kTwoMutex)));
  EXPECT_EQ(pv.complex.cubes.size(), detail::grid_cubes({4, 4}).size());
}

TEST(Pv, ThreeProcessesOnASemaphore) {
  auto prog = parse_pv("resource s capacity 2\nP(s) V(s)\nP(s) V(s)\nP(s) V(s)\n");
  auto pv = pv_to_complex(prog);
  std::vector<Interval> iv(3, Interval{1, 2});
  auto expected = surviving({2, 2, 2}, {iv}, 2);
  EXPECT_EQ(std::set<Cube>(pv.complex.cubes.begin(), pv.complex.cubes.end()), expected);
  // only the center cube is removed
  EXPECT_EQ(pv.complex.cubes.size(), detail::grid_cubes({2, 2, 2}).size() - 1);
  EXPECT_TRUE(decide_sculptable(pv.hda.hda).sculptable);
}

TEST(Pv, EmptyProgramHasNoProcesses) {
  auto prog = parse_pv("");
  EXPECT_TRUE(prog.processes.empty());
  auto pv = pv_to_complex(prog);
  EXPECT_EQ(pv.hda.hda.cells.size(), 1);
  auto c = parse_pv("# only a comment\n\n   \n");
  EXPECT_TRUE(c.processes.empty());
}

TEST(Pv, CommentsAndSpacing) {
  auto prog = parse_pv("  P(a)   V(a)  # trailing\n#P(b)\nP(a)\tV(a)\n");
  ASSERT_EQ(prog.processes.size(), 2u);
  EXPECT_EQ(prog.resources, (std::vector<std::string>{"a"}));
}

TEST(Pv, Errors) {
  auto kind_of = [](const std::string& text) {
    try {
      parse_pv(text);
    } catch (const ParseError& e) {
      return std::make_tuple(e.kind(), e.line(), e.column());
    }
    return std::make_tuple(ErrorKind::InvalidInput, 0, 0);
  };
  EXPECT_EQ(kind_of("P(a)\n"), std::make_tuple(ErrorKind::HeldAtEnd, 1, 1));
  EXPECT_EQ(kind_of("P(a) V(a)\nV(b)\n"), std::make_tuple(ErrorKind::UnmatchedV, 2, 1));
  EXPECT_EQ(std::get<0>(kind_of("P(a) Q(a)\n")), ErrorKind::SyntaxError);
  EXPECT_EQ(std::get<2>(kind_of("P(a) Q(a)\n")), 6);
  EXPECT_EQ(std::get<0>(kind_of("resource a capacity lots\n")), ErrorKind::SyntaxError);
  EXPECT_EQ(std::get<0>(kind_of("P(1x)\n")), ErrorKind::SyntaxError);
}
