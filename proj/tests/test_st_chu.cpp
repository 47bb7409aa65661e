#include <gtest/gtest.h>

#include <set>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

StStructure asym() {
  StStructure st{{"a", "b"}, {}};
  st.add({}, {}).add({"a"}, {}).add({"a"}, {"a"}).add({"b"}, {}).add({"b"}, {"b"});
  st.add({"a", "b"}, {"b"}).add({"a", "b"}, {"a", "b"});
  return st;
}

// quotient collapses some configuration iff the block map is not injective on
// its started events
bool collapses_by_counting(const StStructure& st, const Partition& eq) {
  for (const auto& c : st.configs) {
    std::set<int> images;
    for (int e : c.started.members()) images.insert(eq.block(e));
    if (images.size() != c.started.count()) return true;
  }
  return false;
}

}  // namespace

TEST(St, ConfigRejectsTerminatedWithoutStart) {
  StStructure st{{"a"}, {}};
  EXPECT_THROW(st.add({}, {"a"}), Error);
  EXPECT_THROW(st.add({"z"}, {}), Error);
}

TEST(St, CompleteStructureIsRegularWithThreeToTheN) {
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::string> ev;
    for (int i = 0; i < n; ++i) ev.push_back("e" + std::to_string(i));
    auto st = complete_st(ev);
    std::size_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    EXPECT_EQ(st.configs.size(), pow3);
    EXPECT_TRUE(check_regular(st).regular());
  }
}

TEST(St, RegularityFailures) {
  auto st = asym();
  EXPECT_TRUE(check_regular(st).regular());
  auto no_root = st;
  no_root.configs.erase(StConfig{});
  EXPECT_FALSE(check_regular(no_root).rooted);

  auto not_closed = st;
  not_closed.configs.erase({not_closed.set_of({"a"}), not_closed.set_of({"a"})});
  auto rep = check_regular(not_closed);
  EXPECT_FALSE(rep.closed);
  ASSERT_TRUE(rep.not_closed);

  StStructure gap{{"a", "b"}, {}};
  gap.add({}, {}).add({"a", "b"}, {"a", "b"});
  auto r2 = check_regular(gap);
  EXPECT_TRUE(r2.rooted);
  EXPECT_FALSE(r2.connected);
  ASSERT_TRUE(r2.unreachable);
}

TEST(Quotient, MergesEventsIntoBlocks) {
  StStructure st{{"a", "b", "c"}, {}};
  st.add({}, {}).add({"a"}, {}).add({"a"}, {"a"}).add({"a", "c"}, {"a"});
  auto q = quotient_st(st, Partition::from_labels({0, 1, 0}));
  EXPECT_EQ(q.events, (std::vector<std::string>{"a~c", "b"}));
  // {a,c} collapses onto one block
  EXPECT_TRUE(is_collapsing(st, Partition::from_labels({0, 1, 0})));
  EXPECT_FALSE(is_collapsing(st, Partition::from_labels({0, 0, 1})));
  // ({a,c},{a}) and ({a},{a}) meet
  EXPECT_EQ(q.configs.size(), 3u);
  auto w = find_collapse(st, Partition::from_labels({0, 1, 0}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first, 0);
  EXPECT_EQ(w->second, 2);
}

TEST(Quotient, CollapseMatchesInjectivityOnRandomStructures) {
  Rng rng(2024);
  int collapsing = 0;
  for (int round = 0; round < 50; ++round) {
    int n = detail::uniform(rng, 1, 6);
    auto st = random_st(rng, n);
    auto eq = random_partition(rng, n);
    bool got = is_collapsing(st, eq);
    EXPECT_EQ(got, collapses_by_counting(st, eq));
    collapsing += got;
  }
  EXPECT_GT(collapsing, 0);
  EXPECT_LT(collapsing, 50);
}

TEST(Chu, TranslationOfAsymmetricConflict) {
  auto chu = st_to_chu(asym());
  std::set<std::string> rows;
  for (const auto& v : chu.states) rows.insert(tuple_string(v));
  EXPECT_EQ(rows, (std::set<std::string>{"00", "x0", "10", "0x", "01", "x1", "11"}));
}

TEST(Chu, RoundTripsBothWays) {
  Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    auto st = random_st(rng, detail::uniform(rng, 0, 5));
    EXPECT_EQ(chu_to_st(st_to_chu(st)), st);
    auto chu = st_to_chu(st);
    EXPECT_EQ(st_to_chu(chu_to_st(chu)), chu);
  }
}

TEST(Chu, TupleParsing) {
  EXPECT_EQ(tuple_string(parse_tuple("0x1")), "0x1");
  EXPECT_EQ(tuple_string(parse_tuple("h1")), "x1");
  EXPECT_THROW(parse_tuple("02"), Error);
}

TEST(StMorphism, IdentityAndEmbedding) {
  auto st = asym();
  StStructure bigger{{"a", "b", "c"}, {}};
  for (const auto& c : complete_st({"a", "b", "c"}).configs) bigger.configs.insert(c);
  EXPECT_TRUE(check_st_morphism(st, st, StMorphism{{0, 1}}, true).empty());
  EXPECT_TRUE(check_st_morphism(st, bigger, StMorphism{{0, 2}}, true).empty());
  EXPECT_FALSE(check_st_morphism(st, bigger, StMorphism{{2, 0}}, true).empty());
  EXPECT_TRUE(check_st_morphism(st, bigger, StMorphism{{2, 0}}, false).empty());
  // swapping a and b maps {a,b},{b} to {a,b},{a}, which is not a configuration
  EXPECT_FALSE(check_st_morphism(st, st, StMorphism{{1, 0}}, false).empty());
  // both onto one event is not locally injective
  EXPECT_FALSE(check_st_morphism(st, bigger, StMorphism{{0, 0}}, false).empty());
  EXPECT_THROW(make_st_morphism(st, st, {1, 0}, false), Error);
}

TEST(StSculpture, RegularStructuresRoundTrip) {
  Rng rng(3);
  int tested = 0;
  for (int round = 0; round < 200 && tested < 40; ++round) {
    auto st = random_st(rng, detail::uniform(rng, 1, 4));
    if (!check_regular(st).regular()) {
      EXPECT_THROW(st_to_sculpture(st), Error);
      continue;
    }
    ++tested;
    auto sc = st_to_sculpture(st);
    EXPECT_TRUE(validate_sculpture(sc).ok());
    EXPECT_TRUE(same_configs(sculpture_to_st(sc), st));
  }
  // sub-structures of complete ones are regular when closed
  auto sc = st_to_sculpture(asym());
  EXPECT_EQ(sc.d, 2);
  EXPECT_EQ(sc.hda.cells.size(), 7);
  EXPECT_TRUE(sculptures_isomorphic(st_to_sculpture(sculpture_to_st(sc)), sc));
}
