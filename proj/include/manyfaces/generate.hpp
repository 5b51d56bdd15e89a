#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "manyfaces/geometry.hpp"

namespace manyfaces {

enum class GenKind { Uniform, Grid, Clustered };

inline std::optional<GenKind> parse_gen_kind(const std::string& s) {
  if (s == "uniform") return GenKind::Uniform;
  if (s == "grid") return GenKind::Grid;
  if (s == "clustered") return GenKind::Clustered;
  return std::nullopt;
}

inline std::string gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Uniform: return "uniform";
    case GenKind::Grid: return "grid";
    case GenKind::Clustered: return "clustered";
  }
  return "?";
}

namespace detail {

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Integer lines and points with half-integer ordinates never meet.
inline Point half_point(std::int64_t x, std::int64_t y2) { return Point{Coord(x), Coord(2 * y2 + 1, 2)}; }

}  // namespace detail

// Integer slopes and intercepts; points with integer abscissae in a window
// of width 2X and half-integer ordinates spanning the lines' values there.
inline Instance generate_uniform(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance in;
  const std::int64_t K = std::max<std::int64_t>(16, 4 * std::int64_t(n));
  const std::int64_t X = 2048;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  while (int(in.lines.size()) < n) {
    std::int64_t a = detail::uniform_int(rng, -K, K), b = detail::uniform_int(rng, -K * X, K * X);
    if (!seen.insert({a, b}).second) continue;
    in.lines.push_back(Line{Coord(a), Coord(b)});
  }
  for (int i = 0; i < m; ++i) {
    std::int64_t x = detail::uniform_int(rng, -X, X);
    std::int64_t y = detail::uniform_int(rng, -2 * K * X, 2 * K * X);
    in.points.push_back(detail::half_point(x, y));
  }
  return in;
}

// Lines y = a x + b over slopes 1..k and intercepts 1..k^2, lifted by
// eps + mu a^2 so that the lines through each grid point of
// [1,k] x [1,2k^2] are tangent to a small cap just above it: a point there
// sees every such line on its face boundary.
inline Instance generate_grid(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance in;
  std::int64_t k = 1;
  while (k * k * k < n) ++k;
  const std::int64_t D = 64 * k * k;  // common denominator
  std::vector<std::pair<std::int64_t, std::int64_t>> ab;
  for (std::int64_t a = 1; a <= k; ++a)
    for (std::int64_t b = 1; b <= k * k; ++b) ab.emplace_back(a, b);
  std::shuffle(ab.begin(), ab.end(), rng);
  ab.resize(std::size_t(n));
  std::sort(ab.begin(), ab.end());
  for (auto [a, b] : ab) in.lines.push_back(Line{Coord(a), Coord(b * D + 1 + 8 * a * a, D)});
  const std::int64_t H = 2 * k * k;
  std::vector<std::int64_t> cells(std::size_t(k * H));
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = std::int64_t(i);
  std::shuffle(cells.begin(), cells.end(), rng);
  for (int i = 0; i < m; ++i) {
    std::int64_t c = cells[std::size_t(i) % cells.size()];
    std::int64_t x = 1 + c / H, y = 1 + c % H;
    if (std::size_t(i) >= cells.size()) {
      // Beyond the grid: half-integer heights stay off every line.
      in.points.push_back(detail::half_point(x, y));
    } else {
      in.points.push_back(Point{Coord(x), Coord(y)});
    }
  }
  return in;
}

// Points in a few tight clusters; half the lines pass close to a cluster.
inline Instance generate_clustered(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance in;
  const int C = std::max(1, int(std::sqrt(double(std::max(m, 1)))) / 4);
  const std::int64_t X = 1024, K = std::max<std::int64_t>(16, 2 * std::int64_t(n)), S = 16;
  std::vector<std::pair<std::int64_t, std::int64_t>> centers;
  for (int c = 0; c < C; ++c)
    centers.emplace_back(detail::uniform_int(rng, -X, X), detail::uniform_int(rng, -K * X, K * X));
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  while (int(in.lines.size()) < n) {
    std::int64_t a = detail::uniform_int(rng, -K, K), b;
    if (in.lines.size() % 2 == 0) {
      auto [cx, cy] = centers[std::size_t(detail::uniform_int(rng, 0, C - 1))];
      b = cy - a * cx + detail::uniform_int(rng, -S * K, S * K);
    } else {
      b = detail::uniform_int(rng, -K * X, K * X);
    }
    if (!seen.insert({a, b}).second) continue;
    in.lines.push_back(Line{Coord(a), Coord(b)});
  }
  for (int i = 0; i < m; ++i) {
    auto [cx, cy] = centers[std::size_t(detail::uniform_int(rng, 0, C - 1))];
    std::int64_t x = cx + detail::uniform_int(rng, -S, S);
    std::int64_t y = cy + detail::uniform_int(rng, -S * K, S * K);
    in.points.push_back(detail::half_point(x, y));
  }
  return in;
}

inline Instance generate_instance(GenKind kind, int n, int m, std::uint64_t seed) {
  switch (kind) {
    case GenKind::Uniform: return generate_uniform(n, m, seed);
    case GenKind::Grid: return generate_grid(n, m, seed);
    case GenKind::Clustered: return generate_clustered(n, m, seed);
  }
  return {};
}

}  // namespace manyfaces
