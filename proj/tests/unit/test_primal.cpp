#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "manyfaces/arrangement.hpp"
#include "manyfaces/primal.hpp"
#include "manyfaces/solver.hpp"
#include "oracles.hpp"

using namespace manyfaces;

namespace {

// 0 if l enters the open cell; otherwise +1 when the cell lies above l and
// -1 when below. A line through a corner or along an edge misses the cell.
int brute_side(const Cell& c, const Line& l) {
  int lo = 2, hi = -2;
  for (const auto& v : c.v) {
    int s = side_sign(v, l);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (lo >= 0 && hi > 0) return 1;
  if (hi <= 0 && lo < 0) return -1;
  return 0;
}

struct Sample {
  Instance in;
  std::vector<Line> sorted;
  std::vector<int> all_lines, all_pts;
};

Sample make_sample(std::mt19937_64& rng, int n, int m) {
  Sample s;
  do {
    s.in = oracle::random_instance(rng, n, m, 20);
  } while (!validate_instance(s.in).empty());
  for (int i : dual_order(s.in.lines)) s.sorted.push_back(s.in.lines[i]);
  s.all_lines.resize(s.sorted.size());
  std::iota(s.all_lines.begin(), s.all_lines.end(), 0);
  s.all_pts.resize(s.in.points.size());
  std::iota(s.all_pts.begin(), s.all_pts.end(), 0);
  return s;
}

}  // namespace

TEST(Primal, BelowSetsAreTheParentConflictsMissingTheCell) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    Sample s = make_sample(rng, 20 + trial, 30);
    auto hc = build_hierarchical(s.sorted, 2 + trial % 4, s.in.points);
    for (int side : {+1, -1}) {
      auto sets = compute_below_sets(hc, s.sorted, side);
      for (const auto& c : hc.cells) {
        if (c.parent < 0) continue;
        std::vector<int> want;
        for (int l : hc.cells[c.parent].conflicts)
          if (brute_side(c, s.sorted[l]) == side) want.push_back(l);
        EXPECT_EQ(sets[c.id], want);
      }
    }
  }
}

TEST(Primal, CumulativeChainsAreHullsOfAllLinesMissingTheCell) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    Sample s = make_sample(rng, 10 + trial, 30);
    EnvelopeContext ctx(s.sorted, s.in.points);
    ctx.store.check_preconditions = true;
    auto hc = build_hierarchical(s.sorted, 2 + trial % 5, s.in.points);
    auto ce = cell_envelopes_topdown(ctx.store, hc, s.sorted, s.all_lines);
    for (const auto& c : hc.cells) {
      std::vector<int> below, above;
      for (int l : s.all_lines) {
        int side = brute_side(c, s.sorted[l]);
        if (side > 0) below.push_back(l);
        if (side < 0) above.push_back(l);
      }
      EXPECT_EQ(ctx.store.vertices(ce.below[c.id]), oracle::hull_indices(ctx.duals, below, 1)) << "cell " << c.id;
      EXPECT_EQ(ctx.store.vertices(ce.above[c.id]), oracle::hull_indices(ctx.duals, above, -1)) << "cell " << c.id;
    }
    EXPECT_LE(ctx.store.stats().max_crossings, 4);
  }
}

TEST(Primal, PointGroupsAreCappedAndLocal) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Sample s = make_sample(rng, 30, 40 + 5 * trial);
    const int r = 2 + trial % 3;
    auto hc = build_hierarchical(s.sorted, r, s.in.points);
    auto pa = assign_points(hc, s.in.points, r);
    const int m = int(s.in.points.size());
    EXPECT_EQ(pa.group_cap, std::max(1, (m + r * r - 1) / (r * r)));
    std::vector<int> seen(m, 0);
    std::size_t groups = 0;
    for (int leaf : hc.leaves()) {
      for (const auto& g : pa.groups[leaf]) {
        ++groups;
        EXPECT_GE(int(g.size()), 1);
        EXPECT_LE(int(g.size()), pa.group_cap);
        for (int i : g) {
          ++seen[i];
          EXPECT_EQ(pa.leaf[i], leaf);
          EXPECT_TRUE(detail::in_triangle(hc.cells[leaf].v, s.in.points[i]));
        }
      }
    }
    EXPECT_EQ(groups, pa.group_count);
    EXPECT_LE(groups, hc.leaves().size() + std::size_t(m / pa.group_cap));
    for (int c : seen) EXPECT_EQ(c, 1);
  }
}

TEST(Primal, StepEnvelopesMatchBruteForceHulls) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    Sample s = make_sample(rng, 1 + int(rng() % 48), 1 + int(rng() % 48));
    EnvelopeContext ctx(s.sorted, s.in.points);
    ctx.store.check_preconditions = true;
    const int r = 2 + trial % 3;
    ctx.recurse = [&](const std::vector<int>& pts, const std::vector<int>& lines, const EnvelopeSink& sink) {
      if (pts.size() <= 2 || lines.size() <= 2) brute_envelopes(ctx, pts, lines, sink);
      else primal_step(ctx, pts, lines, r, sink);
    };
    int calls = 0;
    ctx.recurse(s.all_pts, s.all_lines, [&](int p, const HullChain& b, const HullChain& a) {
      ++calls;
      std::vector<int> bl, al;
      for (int l : s.all_lines) (side_sign(s.in.points[p], s.sorted[l]) > 0 ? bl : al).push_back(l);
      EXPECT_EQ(ctx.store.vertices(b), oracle::hull_indices(ctx.duals, bl, 1)) << "trial " << trial;
      EXPECT_EQ(ctx.store.vertices(a), oracle::hull_indices(ctx.duals, al, -1)) << "trial " << trial;
    });
    EXPECT_EQ(calls, int(s.all_pts.size()));
    EXPECT_LE(ctx.store.stats().max_crossings, 4);
  }
}

TEST(Primal, DefaultR) {
  EXPECT_EQ(primal_default_r(100, 10), 10);
  EXPECT_EQ(primal_default_r(101, 10), 11);
  EXPECT_EQ(primal_default_r(27, 27), 3);
  EXPECT_EQ(primal_default_r(10, 28), 4);
}

TEST(Primal, MatchesArrangementOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    Sample s = make_sample(rng, 1 + int(rng() % 40), 1 + int(rng() % 40));
    SolverConfig cfg;
    cfg.baseN = cfg.baseM = 2;
    cfg.check_preconditions = true;
    EXPECT_TRUE(same_faces(primal_solve(s.in, cfg), non_empty_faces_naive(s.in))) << "trial " << trial;
  }
}
