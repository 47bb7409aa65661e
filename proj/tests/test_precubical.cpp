#include <gtest/gtest.h>

#include <set>
#include <string>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

CellTable square_table() {
  CellTable raw;
  raw.add("00").add("10").add("01").add("11");
  raw.add("a0", {"00"}, {"10"}).add("a1", {"01"}, {"11"});
  raw.add("b0", {"00"}, {"01"}).add("b1", {"10"}, {"11"});
  // s1 / t1 are the b-edges (first coordinate fixed), s2 / t2 the a-edges
  raw.add("q", {"b0", "a0"}, {"b1", "a1"});
  return raw;
}

// face of a tuple name: the k-th running coordinate becomes 0 or 1
std::string tuple_face(std::string v, Dir d, int k) {
  int seen = 0;
  for (char& c : v)
    if (c == 'x' && ++seen == k) {
      c = d == Dir::s ? '0' : '1';
      break;
    }
  return v;
}

}  // namespace

TEST(Validate, SquareIsValid) {
  auto rep = validate_precubical(square_table());
  EXPECT_TRUE(rep.ok()) << rep.summary();
  auto p = PrecubicalSet::from_table(square_table());
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.max_dim(), 2);
  EXPECT_EQ(p.cells_of_dim(0).size(), 4u);
  EXPECT_EQ(p.cells_of_dim(1).size(), 4u);
}

TEST(Validate, CellsOrderedByDimensionThenDeclaration) {
  CellTable raw;
  raw.add("e", {"u"}, {"v"});
  raw.add("v").add("u");
  auto p = PrecubicalSet::from_table(raw);
  EXPECT_EQ(p.name(0), "v");
  EXPECT_EQ(p.name(1), "u");
  EXPECT_EQ(p.name(2), "e");
}

TEST(Validate, BrokenCornerIdentityReported) {
  CellTable raw = square_table();
  raw.t["b1"] = {"01"};  // t1 s2 q should be 11... b1 now ends at 01
  auto rep = validate_precubical(raw);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.identities.empty());
  EXPECT_THROW(PrecubicalSet::from_table(raw), Error);
}

TEST(Validate, DanglingFaceReported) {
  CellTable raw;
  raw.add("u").add("e", {"u"}, {"nowhere"});
  auto rep = validate_precubical(raw);
  ASSERT_EQ(rep.dangling.size(), 1u);
  EXPECT_EQ(rep.dangling[0].target, "nowhere");
}

TEST(Validate, FaceOfWrongDimensionReported) {
  CellTable raw;
  raw.add("u").add("v").add("e", {"u"}, {"v"});
  raw.add("q", {"e", "u"}, {"e", "e"});
  auto rep = validate_precubical(raw);
  EXPECT_FALSE(rep.ok());
}

TEST(Validate, DuplicateIdReported) {
  CellTable raw;
  raw.add("u").add("u");
  EXPECT_FALSE(validate_precubical(raw).ok());
}

TEST(FaceIdentities, BulkFacesMatchTupleRewriting) {
  for (int d = 0; d <= 4; ++d) {
    Hda b = make_bulk(d);
    const auto& p = b.cells;
    for (CellIdx q = 0; q < p.size(); ++q)
      for (int k = 1; k <= p.dim(q); ++k)
        for (Dir dir : {Dir::s, Dir::t})
          EXPECT_EQ(p.name(p.face(q, dir, k)), tuple_face(p.name(q), dir, k));
  }
}

TEST(FaceIdentities, HoldOnGridsAndBulks) {
  for (const Hda& h : {make_bulk(4), make_grid({2, 1, 1}), make_grid({3, 2})}) {
    const auto& p = h.cells;
    int checked = 0;
    for (CellIdx q = 0; q < p.size(); ++q)
      for (int l = 2; l <= p.dim(q); ++l)
        for (int k = 1; k < l; ++k)
          for (Dir a : {Dir::s, Dir::t})
            for (Dir b : {Dir::s, Dir::t}) {
              EXPECT_EQ(p.face(p.face(q, b, l), a, k), p.face(p.face(q, a, k), b, l - 1));
              ++checked;
            }
    EXPECT_GT(checked, 0);
  }
}

TEST(Connectivity, EmptySquareConnectedAcyclic) {
  auto f = find_fixture(fixtures(), "empty_square");
  EXPECT_TRUE(is_connected(f.hda));
  EXPECT_TRUE(is_acyclic(f.hda));
}

TEST(Connectivity, LoopIsConnectedButCyclic) {
  auto f = find_fixture(fixtures(), "ab_loop");
  EXPECT_TRUE(is_connected(f.hda));
  EXPECT_FALSE(is_acyclic(f.hda));
  EXPECT_FALSE(find_step_cycle(f.hda.cells).empty());
}

TEST(Connectivity, IsolatedVertexDisconnects) {
  CellTable raw;
  raw.add("u").add("v").add("w").add("e", {"u"}, {"v"});
  auto h = Hda::from_table(raw, "u");
  EXPECT_FALSE(is_connected(h));
  auto h2 = Hda::from_table(raw, "w");
  EXPECT_FALSE(is_connected(h2));
}

TEST(Paths, LegalityChecksFaces) {
  Hda h{PrecubicalSet::from_table(square_table()), 0};
  const auto& p = h.cells;
  Path ok{p.at("00"), {{Dir::s, 1, p.at("b0")}, {Dir::s, 1, p.at("q")}}};
  EXPECT_TRUE(is_legal(p, ok));
  // b0 is the first lower face of q, not the second
  Path bad{p.at("00"), {{Dir::s, 1, p.at("b0")}, {Dir::s, 2, p.at("q")}}};
  EXPECT_FALSE(is_legal(p, bad));
  EXPECT_THROW(require_legal(p, bad), Error);
}

// In a filled square every length-4 path from the bottom to the top corner is
// homotopic to every other one; without the filling the two sides are not.
TEST(Homotopy, ClosureOfFilledSquareIsAllSameLengthPaths) {
  Hda b = make_bulk(2);
  const auto& p = b.cells;
  auto all = enumerate_paths(p, b.initial, 10000);
  ASSERT_TRUE(all);
  std::set<Path> expected;
  for (const auto& path : *all)
    if (path.end() == p.at("11") && path.length() == 4) expected.insert(path);
  EXPECT_EQ(expected.size(), 6u);  // two sequential, four through the square
  Path seq{b.initial, {{Dir::s, 1, p.at("x0")}, {Dir::t, 1, p.at("10")}, {Dir::s, 1, p.at("1x")}, {Dir::t, 1, p.at("11")}}};
  ASSERT_TRUE(is_legal(p, seq));
  EXPECT_EQ(homotopy_class(p, seq), expected);
}

TEST(Homotopy, EmptySquareSidesNotHomotopic) {
  auto f = find_fixture(fixtures(), "empty_square");
  const auto& p = f.hda.cells;
  auto all = enumerate_paths(p, f.hda.initial, 1000);
  ASSERT_TRUE(all);
  std::vector<Path> to_top;
  for (const auto& path : *all)
    if (path.length() == 4) to_top.push_back(path);
  ASSERT_EQ(to_top.size(), 2u);
  EXPECT_EQ(to_top[0].end(), to_top[1].end());
  EXPECT_FALSE(are_homotopic(p, to_top[0], to_top[1]));
  EXPECT_EQ(homotopy_class(p, to_top[0]).size(), 1u);
}

TEST(Homotopy, ClassesPartitionBulkPaths) {
  // paths of B^3 from the initial vertex, grouped by endpoint and length:
  // each group is exactly one homotopy class
  Hda b = make_bulk(3);
  const auto& p = b.cells;
  auto all = enumerate_paths(p, b.initial, 200000);
  ASSERT_TRUE(all);
  std::map<std::pair<CellIdx, std::size_t>, std::set<Path>> groups;
  for (const auto& path : *all) groups[{path.end(), path.length()}].insert(path);
  for (const auto& [key, group] : groups) EXPECT_EQ(homotopy_class(p, *group.begin()), group);
}

TEST(Normalize, ReachesCanonicalFormAndStaysHomotopic) {
  Hda b = make_bulk(3);
  const auto& p = b.cells;
  auto all = enumerate_paths(p, b.initial, 200000);
  ASSERT_TRUE(all);
  for (const auto& path : *all) {
    Path n = normalize_path(b, path);
    EXPECT_TRUE(is_legal(p, n));
    EXPECT_EQ(n.end(), path.end());
    EXPECT_EQ(n.length(), path.length());
    std::string ty = n.indexed_type();
    // (s1 t1)^l then s1 s2 ... sn
    std::size_t i = 0;
    while (ty.compare(i, 4, "s1t1") == 0) i += 4;
    int m = 1;
    while (i < ty.size()) {
      EXPECT_EQ(ty.substr(i, 2), "s" + std::to_string(m)) << ty;
      i += 2;
      ++m;
    }
    EXPECT_TRUE(are_homotopic(p, path, n));
  }
}

TEST(Selflink, PinchedSquareIsSelflinked) {
  auto f = find_fixture(fixtures(), "pinched_square");
  auto w = find_selflink(f.hda.cells);
  ASSERT_TRUE(w);
  EXPECT_EQ(f.hda.cells.dim(w->face), 0);
  EXPECT_NE(to_string(w->first), to_string(w->second));
}

TEST(Selflink, BulksAreNotSelflinked) {
  for (int d = 0; d <= 4; ++d) EXPECT_TRUE(is_non_selflinked(make_bulk(d).cells));
}

TEST(Morphism, IdentityCommutesWithFaces) {
  Hda b = make_bulk(3);
  Morphism id;
  for (CellIdx q = 0; q < b.cells.size(); ++q) id.image.push_back(q);
  EXPECT_TRUE(check_morphism(b, b, id).empty());
  std::swap(id.image[b.cells.at("x00")], id.image[b.cells.at("0x0")]);
  EXPECT_FALSE(check_morphism(b, b, id).empty());
}
