#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "manyfaces/geometry.hpp"

namespace manyfaces {

struct Cell {
  int id = -1;
  int level = 0;
  int parent = -1;
  std::vector<int> children;
  Point v[3];                  // counterclockwise
  std::vector<int> conflicts;  // lines crossing the open interior, ascending
  double vx[3] = {}, vy[3] = {};  // v rounded to doubles

  void set_vertices(const Point& a, const Point& b, const Point& c) {
    v[0] = a;
    v[1] = b;
    v[2] = c;
    for (int i = 0; i < 3; ++i) {
      vx[i] = v[i].x.to_double();
      vy[i] = v[i].y.to_double();
    }
  }
};

struct CuttingParams {
  int rho = 2;
  int sample = 12;  // lines drawn per refinement step
  std::uint64_t seed = 1;
};

struct HierarchicalCutting {
  int r = 1;
  int k = 0;  // number of refinement levels
  int n = 0;
  CuttingParams params;
  std::vector<Cell> cells;                // cells[0] is the root
  std::vector<std::vector<int>> levels;   // cell ids per level
  std::vector<int> below_root, above_root;  // lines missing the root entirely
  int max_fanout = 0;

  // Conflict bound of level lvl: geometric steps from n down to floor(n / r).
  std::size_t level_bound(int lvl) const {
    if (lvl <= 0) return std::size_t(n);
    if (lvl >= k) return std::size_t(n) / std::size_t(r);
    return std::size_t(double(n) / std::pow(double(r), double(lvl) / double(k)));
  }

  const Cell& root() const { return cells[0]; }
  const std::vector<int>& leaves() const { return levels.back(); }
  std::int64_t total_conflicts() const {
    std::int64_t t = 0;
    for (const auto& c : cells) t += std::int64_t(c.conflicts.size());
    return t;
  }
};

namespace detail {

// +1: every vertex on or above l with one strictly above (the cell is above
// the line); -1: the mirror; 0: the line crosses the open interior.
inline int cell_side(const Point (&v)[3], const Line& l) {
  int s0 = side_sign(v[0], l), s1 = side_sign(v[1], l), s2 = side_sign(v[2], l);
  bool pos = s0 > 0 || s1 > 0 || s2 > 0, neg = s0 < 0 || s1 < 0 || s2 < 0;
  if (pos && neg) return 0;
  return pos ? 1 : -1;
}

inline int cell_side(const Cell& c, const Line& l, const ApproxLine& al) {
  bool pos = false, neg = false;
  for (int i = 0; i < 3; ++i) {
    int s = side_sign(c.v[i], c.vx[i], c.vy[i], l, al);
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos && neg) return 0;
  return pos ? 1 : -1;
}

inline bool in_triangle(const Point (&v)[3], const Point& p) {
  return orient(v[0], v[1], p) >= 0 && orient(v[1], v[2], p) >= 0 && orient(v[2], v[0], p) >= 0;
}

inline bool in_triangle_open(const Point (&v)[3], const Point& p) {
  return orient(v[0], v[1], p) > 0 && orient(v[1], v[2], p) > 0 && orient(v[2], v[0], p) > 0;
}

inline Coord triangle_area2(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

using Polygon = std::vector<Point>;

inline Polygon drop_collinear(const Polygon& poly) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = poly[(i + n - 1) % n];
    const Point& next = poly[(i + 1) % n];
    if (orient(prev, poly[i], next) != 0) out.push_back(poly[i]);
  }
  return out;
}

// Splits a convex polygon by a line into the parts above and below it.
inline void split_polygon(const Polygon& poly, const Line& l, Polygon& above, Polygon& below) {
  above.clear();
  below.clear();
  const std::size_t n = poly.size();
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = side_sign(poly[i], l);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    if (s[i] >= 0) above.push_back(p);
    if (s[i] <= 0) below.push_back(p);
    int sq = s[(i + 1) % n];
    if (s[i] * sq < 0) {
      // Edge p-q meets the line strictly inside.
      Coord fp = p.y - l.at(p.x), fq = q.y - l.at(q.x);
      Coord t = fp / (fp - fq);
      Point x{p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t};
      above.push_back(x);
      below.push_back(x);
    }
  }
}

// Fan from the lowest vertex (lowest y, then lowest x).
inline void fan_triangulate(const Polygon& poly, std::vector<std::array<Point, 3>>& out) {
  const std::size_t n = poly.size();
  if (n < 3) return;
  std::size_t b = 0;
  for (std::size_t i = 1; i < n; ++i) {
    int c = cmp(poly[i].y, poly[b].y);
    if (c < 0 || (c == 0 && poly[i].x < poly[b].x)) b = i;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) out.push_back({poly[b], poly[(b + i) % n], poly[(b + i + 1) % n]});
}

inline std::vector<int> conflicts_of(const Point (&v)[3], const std::vector<Line>& lines, const std::vector<int>& cand) {
  std::vector<int> out;
  for (int i : cand)
    if (cell_side(v, lines[i]) == 0) out.push_back(i);
  return out;
}

}  // namespace detail

// A bounded triangle whose interior strictly contains all the given points.
inline std::array<Point, 3> enclosing_triangle(const std::vector<Point>& pts) {
  Coord x0(0), x1(0), y0(0), y1(0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    if (i == 0 || p.x < x0) x0 = p.x;
    if (i == 0 || p.x > x1) x1 = p.x;
    if (i == 0 || p.y < y0) y0 = p.y;
    if (i == 0 || p.y > y1) y1 = p.y;
  }
  x0 = x0 - Coord(1);
  x1 = x1 + Coord(1);
  y0 = y0 - Coord(1);
  y1 = y1 + Coord(1);
  Coord w = x1 - x0, h = y1 - y0;
  Coord xc = (x0 + x1) / Coord(2);
  return {Point{x0 - w, y0}, Point{x1 + w, y0}, Point{xc, y0 + Coord(3) * h}};
}

namespace detail {

struct CuttingBuilder {
  const std::vector<Line>& lines;
  const std::vector<ApproxLine>& approx_lines;
  HierarchicalCutting& hc;
  std::mt19937_64 rng;

  // Cuts `tri` into triangles each crossed by at most `target` of `cand`.
  void refine(const Point (&tri)[3], const std::vector<int>& cand, std::size_t target,
              std::vector<std::pair<std::array<Point, 3>, std::vector<int>>>& out) {
    Cell probe;
    probe.set_vertices(tri[0], tri[1], tri[2]);
    std::vector<int> conf;
    for (int i : cand)
      if (cell_side(probe, lines[i], approx_lines[i]) == 0) conf.push_back(i);
    if (conf.size() <= target) {
      out.push_back({{tri[0], tri[1], tri[2]}, std::move(conf)});
      return;
    }
    const int s = std::min<int>(int(conf.size()), hc.params.sample);
    std::vector<int> pool = conf;
    for (int i = 0; i < s; ++i) {
      std::uniform_int_distribution<int> d(i, int(pool.size()) - 1);
      std::swap(pool[i], pool[d(rng)]);
    }
    std::vector<Polygon> pieces{Polygon{tri[0], tri[1], tri[2]}};
    Polygon up, down;
    for (int i = 0; i < s; ++i) {
      std::vector<Polygon> next;
      for (const auto& poly : pieces) {
        split_polygon(poly, lines[pool[i]], up, down);
        Polygon a = drop_collinear(up), b = drop_collinear(down);
        if (a.size() >= 3) next.push_back(std::move(a));
        if (b.size() >= 3) next.push_back(std::move(b));
      }
      pieces.swap(next);
    }
    std::vector<std::array<Point, 3>> tris;
    for (const auto& poly : pieces) fan_triangulate(poly, tris);
    if (tris.size() <= 1) {
      // The sample failed to split the cell; cut by one conflict line so the
      // recursion always makes progress.
      bisect(tri, conf, target, out);
      return;
    }
    for (const auto& t : tris) {
      Point v[3] = {t[0], t[1], t[2]};
      refine(v, conf, target, out);
    }
  }

  void bisect(const Point (&tri)[3], const std::vector<int>& conf, std::size_t target,
              std::vector<std::pair<std::array<Point, 3>, std::vector<int>>>& out) {
    Polygon up, down;
    split_polygon(Polygon{tri[0], tri[1], tri[2]}, lines[conf[0]], up, down);
    std::vector<std::array<Point, 3>> tris;
    fan_triangulate(drop_collinear(up), tris);
    fan_triangulate(drop_collinear(down), tris);
    for (const auto& t : tris) {
      Point v[3] = {t[0], t[1], t[2]};
      refine(v, conf, target, out);
    }
  }
};

}  // namespace detail

// Levels 0..k with k = floor(log2 r); the root is a bounded triangle around
// `sites`. Leaves are crossed by at most n / r lines.
inline HierarchicalCutting build_hierarchical(const std::vector<Line>& lines, int r, const std::vector<Point>& sites,
                                              CuttingParams params = {}) {
  HierarchicalCutting hc;
  hc.n = int(lines.size());
  hc.r = std::max(1, r);
  hc.params = params;
  hc.k = 0;
  while ((2 << hc.k) <= hc.r) ++hc.k;
  auto tri = enclosing_triangle(sites);
  std::vector<ApproxLine> approx_lines;
  approx_lines.reserve(lines.size());
  for (const auto& l : lines) approx_lines.push_back(approx(l));
  Cell root;
  root.id = 0;
  root.set_vertices(tri[0], tri[1], tri[2]);
  for (int i = 0; i < hc.n; ++i) {
    int s = detail::cell_side(root, lines[i], approx_lines[i]);
    if (s == 0) root.conflicts.push_back(i);
    else if (s > 0) hc.below_root.push_back(i);
    else hc.above_root.push_back(i);
  }
  hc.cells.push_back(std::move(root));
  hc.levels.push_back({0});
  detail::CuttingBuilder b{lines, approx_lines, hc, std::mt19937_64(params.seed)};
  for (int lvl = 1; lvl <= hc.k; ++lvl) {
    const std::size_t target = hc.level_bound(lvl);
    std::vector<int> ids;
    for (int pid : hc.levels[lvl - 1]) {
      std::vector<std::pair<std::array<Point, 3>, std::vector<int>>> out;
      Point pv[3] = {hc.cells[pid].v[0], hc.cells[pid].v[1], hc.cells[pid].v[2]};
      std::vector<int> pconf = hc.cells[pid].conflicts;
      b.refine(pv, pconf, target, out);
      for (auto& [t, conf] : out) {
        Cell c;
        c.id = int(hc.cells.size());
        c.level = lvl;
        c.parent = pid;
        c.set_vertices(t[0], t[1], t[2]);
        c.conflicts = std::move(conf);
        hc.cells[pid].children.push_back(c.id);
        ids.push_back(c.id);
        hc.cells.push_back(std::move(c));
      }
      hc.max_fanout = std::max(hc.max_fanout, int(hc.cells[pid].children.size()));
    }
    hc.levels.push_back(std::move(ids));
  }
  return hc;
}

// Cells containing p from the root down; ties go to the child with the
// smallest id. Empty if p is outside the root.
inline std::vector<int> locate_cell_path(const HierarchicalCutting& hc, const Point& p) {
  std::vector<int> path;
  if (!detail::in_triangle(hc.root().v, p)) return path;
  int c = 0;
  path.push_back(c);
  while (!hc.cells[c].children.empty()) {
    int next = -1;
    for (int ch : hc.cells[c].children)
      if (detail::in_triangle(hc.cells[ch].v, p)) {
        next = ch;
        break;
      }
    if (next < 0) break;
    c = next;
    path.push_back(c);
  }
  return path;
}

struct CuttingReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::size_t cells = 0, leaves = 0;
  std::int64_t total_conflicts = 0;
  int max_fanout = 0;
  double size_constant = 0;      // leaves / r^2
  double conflict_constant = 0;  // total conflicts / (n r)
};

inline CuttingReport verify_cutting(const HierarchicalCutting& hc, const std::vector<Line>& lines,
                                    int probes = 200, std::uint64_t seed = 7) {
  CuttingReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.problems.push_back(s);
  };
  const int n = int(lines.size());
  for (const auto& c : hc.cells) {
    if (detail::triangle_area2(c.v[0], c.v[1], c.v[2]).sign() <= 0) fail("cell " + std::to_string(c.id) + " degenerate");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    if (detail::conflicts_of(c.v, lines, all) != c.conflicts)
      fail("cell " + std::to_string(c.id) + " conflict list mismatch");
    if (c.conflicts.size() > hc.level_bound(c.level))
      fail("cell " + std::to_string(c.id) + " exceeds conflict bound");
    if (c.parent >= 0) {
      const Cell& p = hc.cells[c.parent];
      for (const auto& v : c.v)
        if (!detail::in_triangle(p.v, v)) fail("cell " + std::to_string(c.id) + " leaves its parent");
    }
    if (!c.children.empty()) {
      Coord sum(0);
      for (int ch : c.children) {
        const Cell& x = hc.cells[ch];
        sum += detail::triangle_area2(x.v[0], x.v[1], x.v[2]);
      }
      if (sum != detail::triangle_area2(c.v[0], c.v[1], c.v[2]))
        fail("children of cell " + std::to_string(c.id) + " do not tile it");
    }
  }
  // Random probes inside the root: at most one leaf interior each.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> w(1, 1000);
  const auto& R = hc.root().v;
  for (int t = 0; t < probes; ++t) {
    Coord a(w(rng)), b(w(rng)), c(w(rng));
    Coord s = a + b + c;
    Point p{(a * R[0].x + b * R[1].x + c * R[2].x) / s, (a * R[0].y + b * R[1].y + c * R[2].y) / s};
    int inside = 0, closed = 0;
    for (int id : hc.leaves()) {
      inside += detail::in_triangle_open(hc.cells[id].v, p) ? 1 : 0;
      closed += detail::in_triangle(hc.cells[id].v, p) ? 1 : 0;
    }
    if (inside > 1 || closed == 0) fail("probe covered " + std::to_string(inside) + " times");
  }
  rep.cells = hc.cells.size();
  rep.leaves = hc.leaves().size();
  rep.total_conflicts = hc.total_conflicts();
  rep.max_fanout = hc.max_fanout;
  rep.size_constant = double(rep.leaves) / (double(hc.r) * hc.r);
  rep.conflict_constant = n ? double(rep.total_conflicts) / (double(n) * hc.r) : 0;
  return rep;
}

// One cell per line: level id parent, then a b c for each edge half-plane
// a*x + b*y + c >= 0, then the conflict count.
inline void dump_cutting(const HierarchicalCutting& hc, std::ostream& os) {
  for (const auto& c : hc.cells) {
    os << c.level << ' ' << c.id << ' ' << c.parent;
    for (int e = 0; e < 3; ++e) {
      const Point& p = c.v[e];
      const Point& q = c.v[(e + 1) % 3];
      Coord a = p.y - q.y, b = q.x - p.x;
      Coord cc = (q.y - p.y) * p.x - (q.x - p.x) * p.y;
      os << ' ' << a << ' ' << b << ' ' << cc;
    }
    os << ' ' << c.conflicts.size() << '\n';
  }
}

}  // namespace manyfaces
