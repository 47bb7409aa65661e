#include <gtest/gtest.h>

#include "hdasculpt/hdasculpt.hpp"

using namespace hdasculpt;

namespace {

template <class T, class F>
void expect_text_round_trip(const T& value, F parse) {
  Json j = to_json(value);
  Json again = load_json_text(j.dump(2));
  EXPECT_EQ(again, j);
  EXPECT_EQ(to_json(parse(again)), j);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NonExtensional;  // nothing thrown
}

}  // namespace

TEST(Json, HdaRoundTrips) {
  for (const auto& f : fixtures()) {
    expect_text_round_trip(f.hda, hda_from_json);
    EXPECT_EQ(hda_from_json(to_json(f.hda)), f.hda);
  }
  expect_text_round_trip(make_bulk(0), hda_from_json);
  expect_text_round_trip(make_grid({2, 1}), hda_from_json);
}

TEST(Json, StAndChuRoundTrip) {
  Rng rng(1);
  for (int round = 0; round < 30; ++round) {
    auto st = random_st(rng, detail::uniform(rng, 0, 4));
    expect_text_round_trip(st, st_from_json);
    EXPECT_EQ(st_from_json(to_json(st)), st);
    auto chu = st_to_chu(st);
    expect_text_round_trip(chu, chu_from_json);
    EXPECT_EQ(chu_from_json(to_json(chu)), chu);
  }
}

TEST(Json, SculptureAndComplexRoundTrip) {
  auto sc = grid_to_bulk({2, 1});
  expect_text_round_trip(sc, sculpture_from_json);
  auto back = sculpture_from_json(to_json(sc));
  EXPECT_EQ(back.em, sc.em);
  EXPECT_EQ(back.d, sc.d);

  EuclideanComplex cx{2, {Cube{{0, 0}, {1, 1}}, Cube{{1, 0}, {2, 0}}}};
  expect_text_round_trip(cx, complex_from_json);
  auto bare = complex_from_json(load_json_text(R"([{"a":[0,0],"b":[0,1]}])"));
  EXPECT_EQ(bare.n, 2);
  EXPECT_EQ(bare.cubes.size(), 1u);
}

TEST(Json, VerdictShape) {
  const auto all = fixtures();
  const auto& m = find_fixture(all, "matchbox");
  auto j = to_json(m.hda, decide_sculptable(m.hda));
  EXPECT_EQ(j["sculptable"], true);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["embedding"].size(), static_cast<std::size_t>(m.hda.cells.size()));
  EXPECT_FALSE(j.contains("witness"));

  const auto& b = find_fixture(all, "broken_box");
  auto k = to_json(b.hda, decide_sculptable(b.hda));
  EXPECT_EQ(k["sculptable"], false);
  EXPECT_EQ(k["witness"]["kind"], "LabelClash");
  EXPECT_EQ(k["witness"]["cells"].size(), 2u);
  EXPECT_FALSE(k.contains("embedding"));
}

TEST(Json, ErrorsAreTyped) {
  EXPECT_EQ(kind_of([] { load_json_text("{not json"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { hda_from_json(load_json_text(R"({"cells":{"0":["u"]}})")); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { hda_from_json(load_json_text(R"({"cells":{"x":["u"]},"initial":"u"})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] {
              hda_from_json(load_json_text(R"({"cells":{"0":["u"],"1":["e"]},"s":{"e":["u"]},"t":{"e":["w"]},"initial":"u"})"));
            }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { st_from_json(load_json_text(R"({"events":["a","a"],"configs":[]})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { chu_from_json(load_json_text(R"({"events":["a"],"states":["00"]})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { read_file("/nonexistent/file.json"); }), ErrorKind::InvalidInput);
}

TEST(Json, InvalidSculptureRejected) {
  auto j = to_json(grid_to_bulk({1, 1}));
  j["embedding"]["1,1"] = "00";
  EXPECT_THROW(sculpture_from_json(j), Error);
}

TEST(Json, ErrorJsonCarriesPosition) {
  try {
    parse_pv("P(a) V(b)\n");
    FAIL();
  } catch (const Error& e) {
    auto j = error_json(e);
    EXPECT_EQ(j["error"], "UnmatchedV");
    EXPECT_EQ(j["line"], 1);
    EXPECT_EQ(j["column"], 6);
  }
  auto k = error_json(Error(ErrorKind::NotConnected, "x"));
  EXPECT_FALSE(k.contains("line"));
}
