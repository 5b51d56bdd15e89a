#pragma once
// Brute-force reference implementations shared by the test suites.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "manyfaces/geometry.hpp"
#include "manyfaces/segment_envelope.hpp"

namespace oracle {

using manyfaces::Coord;
using manyfaces::Point;

// Strictly convex lower (sign=+1) or upper (sign=-1) hull by checking every
// candidate edge against every point. Cubic; for small inputs only.
inline std::vector<int> hull_indices(const std::vector<Point>& p, const std::vector<int>& ids, int sign) {
  std::vector<int> verts;
  if (ids.empty()) return verts;
  auto better = [&](int a, int b) {  // a is the extreme of equal x
    return sign * cmp(p[a].y, p[b].y) < 0;
  };
  std::set<int> vs;
  for (int i : ids)
    for (int j : ids) {
      if (!(p[i].x < p[j].x)) continue;
      bool ok = true;
      for (int k : ids) {
        int o = sign * manyfaces::orient(p[i], p[j], p[k]);
        if (o < 0) {
          ok = false;
          break;
        }
        if (o == 0 && (p[k].x < p[i].x || p[k].x > p[j].x)) {
          ok = false;
          break;
        }
        if (o == 0 && p[k].x == p[i].x && better(k, i)) ok = false;
        if (o == 0 && p[k].x == p[j].x && better(k, j)) ok = false;
      }
      if (ok) {
        vs.insert(i);
        vs.insert(j);
      }
    }
  if (vs.empty()) {
    // All points share one abscissa.
    int best = ids[0];
    for (int i : ids)
      if (better(i, best)) best = i;
    vs.insert(best);
  }
  verts.assign(vs.begin(), vs.end());
  std::sort(verts.begin(), verts.end(), [&](int a, int b) { return p[a].x < p[b].x; });
  return verts;
}

// Max (sign=+1) or min (sign=-1) of the lines dual to the points at x.
inline Coord envelope(const std::vector<Point>& p, const std::vector<int>& ids, const Coord& x, int sign) {
  Coord best;
  bool first = true;
  for (int i : ids) {
    Coord v = p[i].x * x - p[i].y;
    if (first || sign * cmp(v, best) > 0) best = v;
    first = false;
  }
  return best;
}

inline std::vector<Point> random_points(std::mt19937_64& rng, int n, int range, bool distinct_x = false) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Point> out;
  std::set<int> xs;
  std::set<std::pair<int, int>> seen;
  while (int(out.size()) < n) {
    int x = d(rng), y = d(rng);
    if (distinct_x && !xs.insert(x).second) continue;
    if (!seen.insert({x, y}).second) continue;
    out.push_back(Point{Coord(x), Coord(y)});
  }
  return out;
}

// Integer lines with many parallel and concurrent triples; points have
// half-integer ordinates and integer abscissae, so they never lie on a line
// but often sit straight above arrangement vertices.
inline manyfaces::Instance random_instance(std::mt19937_64& rng, int n, int m, int range) {
  using manyfaces::Line;
  std::uniform_int_distribution<int> d(-range, range);
  manyfaces::Instance in;
  std::set<std::pair<int, int>> seen;
  while (int(in.lines.size()) < n) {
    int a = d(rng), b = d(rng);
    if (!seen.insert({a, b}).second) continue;
    in.lines.push_back(Line{Coord(a), Coord(b)});
  }
  std::uniform_int_distribution<int> dx(-3, 3), dy(-4 * range, 4 * range);
  for (int i = 0; i < m; ++i) in.points.push_back(Point{Coord(dx(rng)), Coord(2 * dy(rng) + 1, 2)});
  return in;
}

// Sign vector of p against every line (+1 above, -1 below, 0 on).
inline std::vector<int> sign_vector(const std::vector<manyfaces::Line>& lines, const Point& p) {
  std::vector<int> v;
  for (const auto& l : lines) v.push_back(manyfaces::side_sign(p, l));
  return v;
}

// Every face of the arrangement meets one of a few vertical probe lines: one
// per slab between consecutive vertex abscissae, plus one on either side.
// Sampling between consecutive lines on each probe yields one sign vector per
// face.
inline std::set<std::vector<int>> sign_vector_faces(const std::vector<manyfaces::Line>& lines) {
  std::vector<Coord> xs;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto v = manyfaces::line_intersection(lines[i], lines[j])) xs.push_back(v->x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Coord> probes;
  if (xs.empty()) {
    probes.push_back(Coord(0));
  } else {
    probes.push_back(xs.front() - Coord(1));
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) probes.push_back((xs[i] + xs[i + 1]) / Coord(2));
    probes.push_back(xs.back() + Coord(1));
  }
  std::set<std::vector<int>> out;
  for (const auto& x : probes) {
    std::vector<Coord> ys;
    for (const auto& l : lines) ys.push_back(l.at(x));
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<Coord> samples;
    if (ys.empty()) {
      samples.push_back(Coord(0));
    } else {
      samples.push_back(ys.front() - Coord(1));
      for (std::size_t i = 0; i + 1 < ys.size(); ++i) samples.push_back((ys[i] + ys[i + 1]) / Coord(2));
      samples.push_back(ys.back() + Coord(1));
    }
    for (const auto& y : samples) out.insert(sign_vector(lines, Point{x, y}));
  }
  return out;
}

// Closed segments intersect (including touching).
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  using manyfaces::orient;
  auto on = [](const Point& p, const Point& q, const Point& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on(a, b, c)) return true;
  if (o2 == 0 && on(a, b, d)) return true;
  if (o3 == 0 && on(c, d, a)) return true;
  if (o4 == 0 && on(c, d, b)) return true;
  return false;
}

// Up to k pairwise disjoint segments with integer endpoints in [-range, range];
// some are single points.
inline std::vector<manyfaces::Segment> random_disjoint_segments(std::mt19937_64& rng, int k, int range) {
  std::uniform_int_distribution<int> d(-range, range), len(0, range / 3);
  std::vector<manyfaces::Segment> out;
  int tries = 0;
  while (int(out.size()) < k && tries++ < 50 * k) {
    Point a{Coord(d(rng)), Coord(d(rng))};
    Point b{a.x + Coord(len(rng)), Coord(d(rng))};
    if (a.x == b.x) b = a;
    bool ok = true;
    for (const auto& s : out)
      if (segments_intersect(a, b, s.a, s.b)) ok = false;
    if (ok) out.push_back({a, b, int(out.size())});
  }
  return out;
}

// Lowest segment strictly containing x in its x-range; -1 if none.
inline int lowest_segment_at(const std::vector<manyfaces::Segment>& segs, const Coord& x) {
  int best = -1;
  Coord by;
  for (const auto& s : segs) {
    if (!(s.a.x < x && x < s.b.x)) continue;
    Coord y = s.a.y + (s.b.y - s.a.y) * (x - s.a.x) / (s.b.x - s.a.x);
    if (best < 0 || y < by) {
      best = s.id;
      by = y;
    }
  }
  return best;
}

// Common tangent of two x-separated hulls (v1 left of v2, vertex lists in x
// order): the first pair (u, w) by abscissa with every point of `all` on the
// hull side of the line uw. sign = +1 for lower hulls, -1 for upper.
inline std::pair<int, int> brute_tangent(const std::vector<Point>& p, const std::vector<int>& v1,
                                         const std::vector<int>& v2, const std::vector<int>& all, int sign) {
  for (int u : v1)
    for (int w : v2) {
      bool ok = true;
      for (std::size_t k = 0; k < all.size() && ok; ++k) ok = sign * manyfaces::orient(p[u], p[w], p[all[k]]) >= 0;
      if (ok) return {u, w};
    }
  return {-1, -1};
}

}  // namespace oracle
