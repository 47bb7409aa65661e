#include <gtest/gtest.h>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Bulk, CellCountsPerDimension) {
  for (int d = 0; d <= 6; ++d) {
    Hda b = make_bulk(d);
    std::size_t total = 0;
    for (int n = 0; n <= d; ++n) {
      std::size_t expected = binomial(d, n) << (d - n);
      EXPECT_EQ(b.cells.cells_of_dim(n).size(), expected) << "d=" << d << " n=" << n;
      total += expected;
    }
    EXPECT_EQ(static_cast<std::size_t>(b.cells.size()), total);
  }
}

TEST(Bulk, ZeroIsOneVertex) {
  Hda b = make_bulk(0);
  EXPECT_EQ(b.cells.size(), 1);
  EXPECT_EQ(b.cells.name(b.initial), "()");
}

TEST(Bulk, BoundsChecked) {
  EXPECT_THROW(make_bulk(-1), Error);
  try {
    make_bulk(kMaxBulkDim + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(Bulk, InitialIsAllZero) {
  EXPECT_EQ(make_bulk(3).cells.name(make_bulk(3).initial), "000");
}

TEST(Sculpture, IdentityEmbeddingOfBulkValidates) {
  for (int d = 0; d <= 4; ++d) {
    Hda b = make_bulk(d);
    Sculpture sc{b, d, {}};
    for (CellIdx q = 0; q < b.cells.size(); ++q)
      sc.em.push_back(d == 0 ? ChuState{} : parse_tuple(b.cells.name(q)));
    EXPECT_TRUE(validate_sculpture(sc).ok()) << validate_sculpture(sc).summary();
  }
}

TEST(Sculpture, BadEmbeddingsRejected) {
  Hda b = make_bulk(2);
  Sculpture sc{b, 2, {}};
  for (CellIdx q = 0; q < b.cells.size(); ++q) sc.em.push_back(parse_tuple(b.cells.name(q)));
  auto swapped = sc;
  std::swap(swapped.em[b.cells.at("x0")], swapped.em[b.cells.at("0x")]);
  EXPECT_FALSE(validate_sculpture(swapped).ok());
  auto collided = sc;
  collided.em[b.cells.at("11")] = parse_tuple("10");
  EXPECT_FALSE(validate_sculpture(collided).ok());
  auto moved = sc;
  for (auto& v : moved.em) v.push_back(Chu3::zero);
  moved.d = 3;
  EXPECT_TRUE(validate_sculpture(moved).ok());
  moved.em[b.initial].back() = Chu3::one;
  EXPECT_FALSE(validate_sculpture(moved).ok());
}

TEST(Sculpture, SimplifyDropsUnusedCoordinates) {
  Hda b = make_bulk(2);
  Sculpture sc{b, 4, {}};
  for (CellIdx q = 0; q < b.cells.size(); ++q) {
    auto v = parse_tuple(b.cells.name(q));
    sc.em.push_back({Chu3::zero, v[0], Chu3::zero, v[1]});
  }
  ASSERT_TRUE(validate_sculpture(sc).ok());
  auto s = simplify_sculpture(sc);
  EXPECT_EQ(s.d, 2);
  EXPECT_TRUE(validate_sculpture(s).ok());
  for (CellIdx q = 0; q < b.cells.size(); ++q) EXPECT_EQ(tuple_string(s.em[q]), b.cells.name(q));
}

TEST(Sculpture, EventEquivalenceFollowsCoordinates) {
  auto sc = grid_to_bulk({2, 1});
  auto ev = event_equiv_sculpt(sc);
  auto ue = universal_events(sc.hda.cells);
  // each universal label of a grid has its own coordinate
  EXPECT_EQ(ev.partition.num_blocks(), ue.size());
  std::set<int> coords(ev.coordinate.begin(), ev.coordinate.end());
  EXPECT_EQ(coords.size(), ev.coordinate.size());
  for (int c : ev.coordinate) EXPECT_LT(c, sc.d);
}

TEST(Sculpture, StRoundTripOfBulkIsComplete) {
  for (int d = 0; d <= 4; ++d) {
    Hda b = make_bulk(d);
    Sculpture sc{b, d, {}};
    for (CellIdx q = 0; q < b.cells.size(); ++q)
      sc.em.push_back(d == 0 ? ChuState{} : parse_tuple(b.cells.name(q)));
    auto st = sculpture_to_st(sc);
    std::vector<std::string> ev;
    for (int i = 1; i <= d; ++i) ev.push_back(std::to_string(i));
    EXPECT_EQ(st, complete_st(ev));
    EXPECT_TRUE(sculptures_isomorphic(st_to_sculpture(st), sc));
  }
}

TEST(Sculpture, MakeFromNames) {
  Hda b = make_bulk(1);
  auto sc = make_sculpture(b, 2, {{"0", "00"}, {"x", "x0"}, {"1", "10"}});
  EXPECT_TRUE(validate_sculpture(sc).ok());
  EXPECT_THROW(make_sculpture(b, 2, {{"0", "00"}}), Error);
}

TEST(Sculpture, IndexMapBetweenBulksIsMorphism) {
  Hda b2 = make_bulk(2), b4 = make_bulk(4);
  auto f = bulk_index_map(b2, b4, {2, 4});
  EXPECT_TRUE(check_morphism(b2, b4, f).empty());
  EXPECT_EQ(b4.cells.name(f.image[b2.cells.at("x1")]), "0x01");
}
