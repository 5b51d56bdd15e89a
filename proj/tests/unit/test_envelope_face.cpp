#include <gtest/gtest.h>

#include <map>
#include <random>

#include "manyfaces/arrangement.hpp"
#include "manyfaces/envelope_face.hpp"
#include "oracles.hpp"

using namespace manyfaces;

namespace {

struct Extracted {
  Face face;
  LeftKey key;
};

Extracted extract(const Instance& in, const std::vector<Point>& duals, ChainStore& store, const Point& p) {
  std::vector<int> below, above;
  for (int i = 0; i < int(in.lines.size()); ++i) (side_sign(p, in.lines[i]) > 0 ? below : above).push_back(i);
  auto by_x = [&](int a, int b) {
    int c = cmp(duals[a].x, duals[b].x);
    return c != 0 ? c < 0 : cmp(duals[a].y, duals[b].y) < 0;
  };
  std::sort(below.begin(), below.end(), by_x);
  std::sort(above.begin(), above.end(), by_x);
  auto hb = store.hull_of_sorted(below, Orientation::LowerHull);
  auto ha = store.hull_of_sorted(above, Orientation::UpperHull);
  FaceExtractor fx(store, hb, ha, p);
  Extracted e;
  e.key = fx.left_key();
  std::vector<BoundEdge> cyc;
  std::vector<bool> gaps;
  fx.cycle(cyc, gaps);
  e.face = make_face(cyc, gaps, in.lines);
  return e;
}

}  // namespace

TEST(EnvelopeFace, MatchesArrangementFaces) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 1 + trial % 14;
    auto in = oracle::random_instance(rng, n, 40, 2 + trial % 4);
    std::vector<Point> duals;
    for (const auto& l : in.lines) duals.push_back(dualize_line(l));
    ChainStore store(duals);
    auto d = build_arrangement(in.lines, in.points);
    std::map<LeftKey, FaceKey> seen;
    for (const auto& p : in.points) {
      Face want = dcel_face(d, locate_face(d, p));
      auto got = extract(in, duals, store, p);
      ASSERT_EQ(key_string(got.face.key), key_string(want.key)) << "trial " << trial << " p=" << p;
      EXPECT_EQ(got.face.gaps, want.gaps);
      EXPECT_EQ(got.face.vertices, want.vertices);
      EXPECT_EQ(got.face.bounded, want.bounded);
      // The left key identifies the face.
      auto [it, fresh] = seen.emplace(got.key, got.face.key);
      EXPECT_EQ(it->second, got.face.key);
    }
    std::set<FaceKey> distinct;
    for (auto& [k, f] : seen) distinct.insert(f);
    EXPECT_EQ(distinct.size(), seen.size());
  }
}

TEST(EnvelopeFace, EmptyAndOneSidedFaces) {
  Instance in;
  in.lines = {{Coord(1), Coord(0)}, {Coord(-1), Coord(0)}};
  std::vector<Point> duals;
  for (const auto& l : in.lines) duals.push_back(dualize_line(l));
  ChainStore store(duals);
  auto top = extract(in, duals, store, Point{Coord(0), Coord(5)});
  EXPECT_EQ(key_string(top.face.key), "+0 +1");
  EXPECT_FALSE(top.face.bounded);
  EXPECT_EQ(top.face.vertices.size(), 1u);
  auto left = extract(in, duals, store, Point{Coord(-5), Coord(0)});
  EXPECT_EQ(key_string(left.face.key), "+0 -1");
  Instance none;
  none.lines = {};
  ChainStore empty_store(duals);
  FaceExtractor fx(empty_store, HullChain{}, HullChain{-1, Orientation::UpperHull}, Point{});
  std::vector<BoundEdge> c;
  std::vector<bool> g;
  fx.cycle(c, g);
  EXPECT_TRUE(c.empty());
}
