#include <gtest/gtest.h>

#include <cmath>

#include "manyfaces/generate.hpp"
#include "manyfaces/io.hpp"
#include "manyfaces/solver.hpp"

using namespace manyfaces;

namespace {

const GenKind kKinds[] = {GenKind::Uniform, GenKind::Grid, GenKind::Clustered};

}  // namespace

TEST(Generate, DeterministicForAFixedSeed) {
  for (GenKind k : kKinds) {
    EXPECT_EQ(instance_to_string(to_raw(generate_instance(k, 50, 70, 9))),
              instance_to_string(to_raw(generate_instance(k, 50, 70, 9))));
    EXPECT_NE(instance_to_string(to_raw(generate_instance(k, 50, 70, 9))),
              instance_to_string(to_raw(generate_instance(k, 50, 70, 10))));
  }
}

TEST(Generate, CountsAndCleanNormalization) {
  for (GenKind k : kKinds)
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {7, 300}, {200, 5}, {343, 343}}) {
      Instance in = generate_instance(k, n, m, 3);
      ASSERT_EQ(int(in.lines.size()), n);
      ASSERT_EQ(int(in.points.size()), m);
      EXPECT_EQ(validate_instance(in), "") << gen_kind_name(k) << " " << n << " " << m;
      Normalized nz = normalize_instance(in, Policy::Reject);
      EXPECT_TRUE(nz.report.clean());
    }
}

TEST(Generate, NoLines) {
  for (GenKind k : kKinds) {
    Instance in = generate_instance(k, 0, 12, 1);
    EXPECT_TRUE(in.lines.empty());
    EXPECT_EQ(solve(in).faces.size(), 1u);
  }
}

TEST(Generate, KindNames) {
  for (GenKind k : kKinds) EXPECT_EQ(parse_gen_kind(gen_kind_name(k)), k);
  EXPECT_FALSE(parse_gen_kind("spiral"));
}

// Points on the lattice see the lines through them on their face boundary.
TEST(Generate, GridFacesAreComplex) {
  Instance grid = generate_instance(GenKind::Grid, 512, 512, 1);
  Instance uni = generate_instance(GenKind::Uniform, 512, 512, 1);
  const auto g = solve(grid).faces.total_complexity(), u = solve(uni).faces.total_complexity();
  EXPECT_GT(g, u);
  EXPECT_GE(double(g), 0.1 * std::pow(512.0, 4.0 / 3.0));
}
