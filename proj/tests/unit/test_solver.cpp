#include <gtest/gtest.h>

#include <random>
#include <set>

#include "manyfaces/arrangement.hpp"
#include "manyfaces/generate.hpp"
#include "manyfaces/solver.hpp"
#include "oracles.hpp"

using namespace manyfaces;

namespace {

// Distinct points, so that m is not reduced by dedup.
Instance sample(std::mt19937_64& rng, int n, int m) {
  Instance in;
  do {
    in = oracle::random_instance(rng, n, m, 30);
  } while (!validate_instance(in).empty() ||
           std::set<Point, detail::PointLess>(in.points.begin(), in.points.end()).size() != in.points.size());
  return in;
}

RawInstance raw_of(std::vector<RawLine> lines, std::vector<Point> pts) {
  RawInstance r;
  r.lines = std::move(lines);
  r.points = std::move(pts);
  return r;
}

}  // namespace

TEST(Solver, DispatchPaths) {
  EXPECT_EQ(dispatch_path(16, 4), DispatchPath::Naive);
  EXPECT_EQ(dispatch_path(17, 4), DispatchPath::Naive);
  EXPECT_EQ(dispatch_path(15, 4), DispatchPath::PrimalThenCore);
  EXPECT_EQ(dispatch_path(4, 16), DispatchPath::DualOnly);
  EXPECT_EQ(dispatch_path(4, 17), DispatchPath::DualOnly);
  EXPECT_EQ(dispatch_path(4, 15), DispatchPath::DualThenCore);
  EXPECT_EQ(dispatch_path(48, 48), DispatchPath::PrimalThenCore);
}

TEST(Solver, CombinedStepChoices) {
  auto c = combined_step(16, 4);
  EXPECT_EQ(c.kind, StepKind::Brute);
  c = combined_step(40, 10);
  EXPECT_EQ(c.kind, StepKind::Primal);
  EXPECT_EQ(c.r, 4);
  c = combined_step(4, 17);
  EXPECT_EQ(c.kind, StepKind::Dual);
  EXPECT_EQ(c.r, 4);
  c = combined_step(10, 45);
  EXPECT_EQ(c.kind, StepKind::Dual);
  EXPECT_EQ(c.r, 5);
  c = combined_step(64, 64);
  EXPECT_EQ(c.kind, StepKind::Dual);
  EXPECT_EQ(c.r, 4);
}

TEST(Solver, TracedPathsAgreeWithOracle) {
  std::mt19937_64 rng(7);
  const std::pair<int, int> cases[] = {{16, 4}, {17, 4}, {4, 16}, {4, 17}, {48, 48}, {30, 12}, {6, 20}};
  for (auto [m, n] : cases) {
    Instance in = sample(rng, n, m);
    SolverConfig cfg;
    cfg.baseN = cfg.baseM = 2;
    cfg.check_preconditions = true;
    SolveResult res = solve(in, cfg);
    EXPECT_EQ(res.trace.m, std::size_t(m));
    EXPECT_EQ(res.trace.path, dispatch_path(std::size_t(m), std::size_t(n))) << m << " " << n;
    EXPECT_TRUE(same_faces(res.faces, non_empty_faces_naive(in))) << m << " " << n;
  }
}

TEST(Solver, BackendsAgree) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    Instance in = sample(rng, 1 + int(rng() % 40), 1 + int(rng() % 40));
    FaceSet ref = non_empty_faces_naive(in);
    for (Backend b : {Backend::Naive, Backend::Primal, Backend::Dual, Backend::Combined}) {
      SolverConfig cfg;
      cfg.backend = b;
      cfg.baseN = cfg.baseM = 3;
      EXPECT_TRUE(same_faces(solve(in, cfg).faces, ref)) << backend_name(b) << " trial " << trial;
    }
  }
}

TEST(Solver, GeneratedKindsAgree) {
  for (GenKind kind : {GenKind::Uniform, GenKind::Grid, GenKind::Clustered}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      Instance in = generate_instance(kind, 40, 40, seed);
      SolverConfig cfg;
      cfg.baseN = cfg.baseM = 4;
      EXPECT_TRUE(same_faces(solve(in, cfg).faces, non_empty_faces_naive(in))) << gen_kind_name(kind) << seed;
    }
  }
}

TEST(Solver, OverrideOfTopR) {
  std::mt19937_64 rng(9);
  Instance in = sample(rng, 30, 30);
  FaceSet ref = non_empty_faces_naive(in);
  for (int r : {2, 3, 5, 8}) {
    SolverConfig cfg;
    cfg.baseN = cfg.baseM = 3;
    cfg.rOverride = r;
    SolveResult res = solve(in, cfg);
    EXPECT_EQ(res.trace.top_r, r);
    EXPECT_TRUE(same_faces(res.faces, ref)) << "r " << r;
  }
}

TEST(Solver, IdenticalPointsShareAFace) {
  Instance in;
  in.lines = {Line{Coord(1), Coord(0)}, Line{Coord(-1), Coord(0)}};
  in.points = {{Coord(0), Coord(5)}, {Coord(3), Coord(1)}, {Coord(0), Coord(5)}, {Coord(0), Coord(5)}};
  SolveResult res = solve(in);
  EXPECT_EQ(res.trace.m, 2u);
  ASSERT_EQ(res.faces.size(), 2u);
  std::vector<std::vector<int>> w;
  for (const auto& [k, e] : res.faces.faces) w.push_back(e.witnesses);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<std::vector<int>>{{0, 2, 3}, {1}}));
}

TEST(Solver, NoLinesGivesThePlane) {
  Instance in;
  in.points = {{Coord(0), Coord(0)}, {Coord(4), Coord(-2)}};
  SolveResult res = solve(in);
  ASSERT_EQ(res.faces.size(), 1u);
  const auto& [key, e] = *res.faces.faces.begin();
  EXPECT_EQ(key_string(key), "plane");
  EXPECT_EQ(e.witnesses, (std::vector<int>{0, 1}));
}

TEST(Solver, NoPointsGivesNoFaces) {
  Instance in;
  in.lines = {Line{Coord(1), Coord(0)}, Line{Coord(2), Coord(1)}};
  EXPECT_EQ(solve(in).faces.size(), 0u);
  EXPECT_EQ(solve(RawInstance{}).faces.size(), 0u);
}

TEST(Solver, VerticalLinesKeepInputIndices) {
  auto raw = raw_of({RawLine::slope(Coord(0), Coord(0)), RawLine::vert(Coord(0))},
                    {{Coord(1), Coord(1)}, {Coord(-1), Coord(1)}, {Coord(-1), Coord(-1)}, {Coord(1), Coord(-1)}});
  SolveResult res = solve(raw);
  EXPECT_EQ(res.trace.normalize.vertical_lines, 1);
  ASSERT_EQ(res.faces.size(), 4u);
  for (const auto& [k, e] : res.faces.faces) {
    ASSERT_EQ(k.size(), 2u);
    EXPECT_EQ(e.witnesses.size(), 1u);
    std::vector<int> ids = {k[0].line, k[1].line};
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(ids, (std::vector<int>{0, 1}));
  }
}

TEST(Solver, DuplicateLinesAreReportedOnce) {
  auto raw = raw_of({RawLine::slope(Coord(1), Coord(0)), RawLine::slope(Coord(1), Coord(0))},
                    {{Coord(0), Coord(1)}, {Coord(0), Coord(-1)}});
  SolveResult res = solve(raw);
  EXPECT_EQ(res.trace.normalize.duplicates_removed, 1);
  ASSERT_EQ(res.faces.size(), 2u);
  for (const auto& [k, e] : res.faces.faces) {
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0].line, 0);
  }
}

TEST(Solver, PointOnLineIsRejectedOrPerturbed) {
  auto raw = raw_of({RawLine::slope(Coord(1), Coord(0))}, {{Coord(2), Coord(2)}, {Coord(0), Coord(3)}});
  try {
    solve(raw);
    FAIL() << "expected PointOnLine";
  } catch (const GeomError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointOnLine);
  }
  SolverConfig cfg;
  cfg.policy = Policy::Perturb;
  SolveResult res = solve(raw, cfg);
  EXPECT_EQ(res.trace.normalize.perturbed_points, (std::vector<int>{0}));
  std::size_t witnesses = 0;
  for (const auto& [k, e] : res.faces.faces) witnesses += e.witnesses.size();
  EXPECT_EQ(witnesses, 2u);
}

TEST(Solver, TrustedInputMatchesNormalizedPath) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    Instance in = sample(rng, 1 + int(rng() % 30), 1 + int(rng() % 30));
    SolverConfig cfg;
    cfg.baseN = cfg.baseM = 3;
    FaceSet a = solve(in, cfg).faces;
    cfg.trust_input = true;
    EXPECT_TRUE(same_faces(a, solve(in, cfg).faces)) << "trial " << trial;
  }
}
