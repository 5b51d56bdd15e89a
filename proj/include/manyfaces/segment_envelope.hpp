#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "manyfaces/geometry.hpp"

namespace manyfaces {

// a.x <= b.x; a == b is allowed (a single-vertex hull).
struct Segment {
  Point a, b;
  int id = -1;
};

struct EnvelopePiece {
  int id = -1;
  Coord x0, x1;
};

class SegmentsCross : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct SweepSegment {
  const Segment* s;
  ApproxPoint a, b;
  bool point;
};

// Vertical order of two segments that share an abscissa, at the larger of
// their left endpoints. Valid for the whole common x-range when the segments
// do not cross.
inline int segment_below(const SweepSegment& S, const SweepSegment& T) {
  const Segment &s = *S.s, &t = *T.s;
  if (s.id == t.id) return 0;
  int o;
  if (S.point && T.point) {
    o = S.a.y < T.a.y ? -1 : S.a.y > T.a.y ? 1 : cmp(s.a.y, t.a.y);
  } else if (S.point) {
    o = orient(t.a, t.b, s.a, T.a, T.b, S.a);
  } else if (cmp_x(s.a, S.a, t.a, T.a) <= 0) {
    o = -orient(s.a, s.b, t.a, S.a, S.b, T.a);  // t.a above s: s is lower
    if (o == 0) o = -orient(s.a, s.b, t.b, S.a, S.b, T.b);
  } else {
    o = orient(t.a, t.b, s.a, T.a, T.b, S.a);
    if (o == 0) o = orient(t.a, t.b, s.b, T.a, T.b, S.b);
  }
  if (o != 0) return o < 0 ? -1 : 1;
  return s.id < t.id ? -1 : 1;
}

struct SegmentOrder {
  const std::vector<SweepSegment>* segs;
  bool operator()(int i, int j) const { return segment_below((*segs)[i], (*segs)[j]) < 0; }
};

}  // namespace detail

// Lower envelope of pairwise disjoint segments, as maximal left-to-right
// pieces naming the lowest segment on each x-interval.
inline std::vector<EnvelopePiece> disjoint_segment_lower_envelope(const std::vector<Segment>& segs) {
  std::vector<EnvelopePiece> out;
  const int k = int(segs.size());
  if (k == 0) return out;
  std::vector<detail::SweepSegment> ss(k);
  for (int i = 0; i < k; ++i) {
    ss[i] = {&segs[i], approx(segs[i].a), approx(segs[i].b), segs[i].a.x == segs[i].b.x};
  }
  // Event 2i is the left end of segment i, 2i + 1 its right end.
  auto end_point = [&](int e) -> const Point& { return e & 1 ? segs[e >> 1].b : segs[e >> 1].a; };
  auto end_approx = [&](int e) -> const ApproxPoint& { return e & 1 ? ss[e >> 1].b : ss[e >> 1].a; };
  auto x_cmp = [&](int e, int f) { return cmp_x(end_point(e), end_approx(e), end_point(f), end_approx(f)); };
  std::vector<int> events(2 * std::size_t(k));
  for (int e = 0; e < 2 * k; ++e) events[e] = e;
  // Right ends before left ends at equal x.
  std::sort(events.begin(), events.end(), [&](int e, int f) {
    int c = x_cmp(e, f);
    if (c != 0) return c < 0;
    return (e & 1) > (f & 1);
  });

  std::set<int, detail::SegmentOrder> active(detail::SegmentOrder{&ss});
  auto emit = [&](int id, const Coord& x0, const Coord& x1) {
    if (!out.empty() && out.back().id == id && out.back().x1 == x0) {
      out.back().x1 = x1;
      return;
    }
    out.push_back({id, x0, x1});
  };
  std::vector<int> points;
  std::size_t e = 0;
  while (e < events.size()) {
    const int head = events[e];
    const Coord& x = end_point(head).x;
    std::size_t g = e;
    while (g < events.size() && x_cmp(events[g], head) == 0) ++g;
    int low_before = active.empty() ? -1 : *active.begin();
    points.clear();
    for (std::size_t q = e; q < g; ++q) {
      const int i = events[q] >> 1;
      if (events[q] & 1) {
        if (!ss[i].point) active.erase(i);
      } else if (ss[i].point) {
        points.push_back(i);
      } else if (!active.insert(i).second) {
        throw SegmentsCross("duplicate segment in sweep");
      }
    }
    int low_after = active.empty() ? -1 : *active.begin();
    // A zero-width segment becomes a piece if it lies below everything at x.
    int best_point = -1;
    for (int i : points) {
      if (best_point < 0 || detail::segment_below(ss[i], ss[best_point]) < 0) best_point = i;
    }
    if (best_point >= 0) {
      bool lowest = true;
      for (int other : {low_before, low_after})
        if (other >= 0 && detail::segment_below(ss[other], ss[best_point]) < 0) lowest = false;
      if (lowest) out.push_back({segs[best_point].id, x, x});
    }
    if (low_after >= 0 && g < events.size()) emit(segs[low_after].id, x, end_point(events[g]).x);
    e = g;
  }
  return out;
}

// For convex polygons (counterclockwise vertex lists) and a family of
// directions (1, slope), the vertices extreme along each direction, found by
// processing the directions in angular order and only ever advancing each
// polygon's pointers counterclockwise.
struct ExtremesSchedule {
  // extremes[line][hull] = (min vertex index, max vertex index)
  std::vector<std::vector<std::pair<int, int>>> extremes;
  std::int64_t advances = 0;
};

namespace detail {

// Lexicographic (projection on d, projection on d's left normal); a strict
// total order on distinct points.
inline int directional_cmp(const Point& p, const Point& q, const Coord& slope) {
  int c = cmp(p.x + slope * p.y, q.x + slope * q.y);
  if (c != 0) return c;
  return cmp(p.y - slope * p.x, q.y - slope * q.x);
}

}  // namespace detail

inline ExtremesSchedule rotational_extremes_schedule(const std::vector<std::vector<Point>>& hulls,
                                                     const std::vector<Coord>& slopes) {
  ExtremesSchedule out;
  const int L = int(slopes.size()), H = int(hulls.size());
  out.extremes.assign(L, std::vector<std::pair<int, int>>(H, {-1, -1}));
  if (L == 0) return out;
  std::vector<int> order(L);
  for (int i = 0; i < L; ++i) order[i] = i;
  // Direction (1, s) turns counterclockwise as s grows.
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return slopes[i] < slopes[j]; });
  for (int h = 0; h < H; ++h) {
    const auto& poly = hulls[h];
    const int k = int(poly.size());
    if (k == 0) continue;
    int lo = 0, hi = 0;
    const Coord& s0 = slopes[order[0]];
    for (int v = 1; v < k; ++v) {
      if (detail::directional_cmp(poly[v], poly[lo], s0) < 0) lo = v;
      if (detail::directional_cmp(poly[v], poly[hi], s0) > 0) hi = v;
    }
    for (int idx : order) {
      const Coord& s = slopes[idx];
      while (k > 1 && detail::directional_cmp(poly[(lo + 1) % k], poly[lo], s) < 0) {
        lo = (lo + 1) % k;
        ++out.advances;
      }
      while (k > 1 && detail::directional_cmp(poly[(hi + 1) % k], poly[hi], s) > 0) {
        hi = (hi + 1) % k;
        ++out.advances;
      }
      out.extremes[idx][h] = {lo, hi};
    }
  }
  return out;
}

}  // namespace manyfaces
