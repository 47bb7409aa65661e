#include <gtest/gtest.h>

#include <bit>
#include <map>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

// n-cells of a grid: choose the n spanning axes, M_k positions along each of
// them and M_k + 1 along the others
std::size_t grid_cells(const std::vector<int>& sizes, int n) {
  std::size_t d = sizes.size(), total = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::size_t c = 1;
    for (std::size_t k = 0; k < d; ++k) c *= (mask >> k) & 1 ? sizes[k] : sizes[k] + 1;
    total += c;
  }
  return total;
}

}  // namespace

TEST(Grid, TwoByOneCounts) {
  Hda g = make_grid({2, 1});
  EXPECT_EQ(g.cells.cells_of_dim(0).size(), 6u);
  EXPECT_EQ(g.cells.cells_of_dim(1).size(), 7u);
  EXPECT_EQ(g.cells.cells_of_dim(2).size(), 2u);
  EXPECT_EQ(g.cells.name(g.initial), "0,0");
}

TEST(Grid, CountsMatchFormulaOnRandomGrids) {
  Rng rng(99);
  for (int round = 0; round < 20; ++round) {
    auto sizes = random_grid_sizes(rng, 9);
    Hda g = make_grid(sizes);
    for (int n = 0; n <= static_cast<int>(sizes.size()); ++n)
      EXPECT_EQ(g.cells.cells_of_dim(n).size(), grid_cells(sizes, n));
  }
}

TEST(Grid, CubeNames) {
  Cube c{{0, 2}, {1, 2}};
  EXPECT_EQ(cube_name(c), "0+,2");
  EXPECT_EQ(parse_cube_name("0+,2"), c);
  EXPECT_EQ(c.dim(), 1);
  EXPECT_EQ(cube_name(c.face(Dir::t, 1)), "1,2");
}

TEST(Grid, UnitGridIsTheBulk) {
  for (int d = 1; d <= 4; ++d) {
    Hda g = make_grid(std::vector<int>(d, 1));
    Hda b = make_bulk(d);
    ASSERT_EQ(g.cells.size(), b.cells.size());
    // 0 -> 0, 0+ -> x, 1 -> 1, coordinate by coordinate
    Morphism f;
    for (CellIdx q = 0; q < g.cells.size(); ++q) {
      Cube c = parse_cube_name(g.cells.name(q));
      std::string t;
      for (int i = 0; i < d; ++i) t += c.b[i] > c.a[i] ? 'x' : static_cast<char>('0' + c.a[i]);
      f.image.push_back(b.cells.at(t));
    }
    EXPECT_TRUE(check_morphism(g, b, f).empty());
    std::set<CellIdx> img(f.image.begin(), f.image.end());
    EXPECT_EQ(img.size(), f.image.size());
  }
}

TEST(Grid, EmbeddingIntoBulkValidates) {
  Rng rng(4);
  for (int round = 0; round < 20; ++round) {
    auto sizes = random_grid_sizes(rng, 9);
    auto sc = grid_to_bulk(sizes);
    int total = 0;
    for (int m : sizes) total += m;
    EXPECT_EQ(sc.d, total);
    auto rep = validate_sculpture(sc);
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}

TEST(Grid, SizesValidated) {
  EXPECT_THROW(make_grid({-1}), Error);
  EXPECT_THROW(make_grid({100, 100, 100, 100}), Error);
  EXPECT_EQ(make_grid({}).cells.size(), 1);
  EXPECT_EQ(make_grid({0, 3}).cells.cells_of_dim(1).size(), 3u);
}

TEST(Complex, FacesCompletedAndReported) {
  EuclideanComplex cx{2, {Cube{{0, 0}, {1, 1}}}};
  auto c = complex_to_hda(cx, {0, 0});
  EXPECT_EQ(c.hda.cells.size(), 9);
  EXPECT_EQ(c.added.size(), 8u);
  EXPECT_EQ(c.sizes, (std::vector<int>{1, 1}));
  try {
    complex_to_hda(cx, {0, 0}, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFaceClosed);
  }
}

TEST(Complex, RejectsBadCubes) {
  EXPECT_THROW(complex_to_hda(EuclideanComplex{2, {Cube{{0, 0}, {2, 0}}}}, {0, 0}), Error);
  EXPECT_THROW(complex_to_hda(EuclideanComplex{2, {Cube{{0}, {1}}}}, {0}), Error);
  EXPECT_THROW(complex_to_hda(EuclideanComplex{1, {Cube{{0}, {1}}}}, {5}), Error);
}

TEST(Complex, LShapeIsSculptedThroughItsBoundingGrid) {
  EuclideanComplex cx{2, {Cube{{0, 0}, {1, 1}}, Cube{{1, 0}, {2, 1}}, Cube{{0, 1}, {1, 2}}}};
  auto c = complex_to_hda(cx, {0, 0});
  auto sc = complex_to_sculpture(c);
  EXPECT_EQ(sc.d, 4);
  EXPECT_TRUE(validate_sculpture(sc).ok());
  EXPECT_TRUE(decide_sculptable(c.hda).sculptable);
}

TEST(Complex, InitialMustBeLowestCornerForEmbedding) {
  EuclideanComplex cx{1, {Cube{{3}, {4}}}};
  auto c = complex_to_hda(cx, {4});
  EXPECT_THROW(complex_to_sculpture(c), Error);
  auto ok = complex_to_hda(cx, {3});
  EXPECT_TRUE(validate_sculpture(complex_to_sculpture(ok)).ok());
}

TEST(Complex, RandomComplexesAreSculptable) {
  Rng rng(8);
  for (int round = 0; round < 30; ++round) {
    auto sizes = random_grid_sizes(rng, 6);
    EuclideanComplex cx{static_cast<int>(sizes.size()), {}};
    for (const auto& c : detail::grid_cubes(sizes))
      if (detail::coin(rng, 0.3)) cx.cubes.push_back(c);
    cx.cubes.push_back(vertex_cube(std::vector<int>(sizes.size(), 0)));
    auto c = complex_to_hda(cx, std::vector<int>(sizes.size(), 0));
    if (!is_connected(c.hda)) continue;
    EXPECT_TRUE(decide_sculptable(c.hda).sculptable) << to_json(cx).dump();
    if (c.low == std::vector<int>(sizes.size(), 0)) EXPECT_TRUE(validate_sculpture(complex_to_sculpture(c)).ok());
  }
}

TEST(Complex, SculptureReadBackAsCubes) {
  const auto f = find_fixture(fixtures(), "matchbox");
  auto v = decide_sculptable(f.hda);
  auto cx = sculpture_to_complex(*v.sculpture);
  EXPECT_EQ(cx.n, v.d());
  auto c = complex_to_hda(cx, std::vector<int>(cx.n, 0), false);
  EXPECT_EQ(c.hda.cells.size(), f.hda.cells.size());
  EXPECT_EQ(c.hda.cells.cells_of_dim(2).size(), f.hda.cells.cells_of_dim(2).size());
  EXPECT_TRUE(decide_sculptable(c.hda).sculptable);
}
