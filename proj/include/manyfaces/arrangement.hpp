#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "manyfaces/face.hpp"
#include "manyfaces/geometry.hpp"

namespace manyfaces {

// Doubly connected edge list of an arrangement of lines, closed off by an
// axis-parallel box. Half-edges have their face on the left.
struct ArrangementDCEL {
  struct HalfEdge {
    int origin = -1;
    int twin = -1;
    int next = -1;
    int prev = -1;
    int face = -1;
    int line = -1;  // -1 for box edges
  };
  std::vector<Line> lines;
  Coord box;  // the box is [-box, box]^2
  std::vector<Point> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<int> face_edge;  // one half-edge per face
  int outer_face = -1;
  // Per line, its half-edges pointing in +x direction, sorted by x.
  std::vector<std::vector<int>> rightward;

  int num_faces() const { return int(face_edge.size()); }
  int num_edges() const { return int(half_edges.size()) / 2; }
  int num_inner_faces() const { return num_faces() - 1; }
};

namespace detail {

struct PointLess {
  bool operator()(const Point& p, const Point& q) const {
    int c = cmp(p.x, q.x);
    if (c != 0) return c < 0;
    return cmp(p.y, q.y) < 0;
  }
};

// Angular order of direction vectors, starting at the positive x-axis.
inline bool angle_less(const Coord& ax, const Coord& ay, const Coord& bx, const Coord& by) {
  auto half = [](const Coord& x, const Coord& y) {
    int sy = y.sign();
    return (sy > 0 || (sy == 0 && x.sign() > 0)) ? 0 : 1;
  };
  int ha = half(ax, ay), hb = half(bx, by);
  if (ha != hb) return ha < hb;
  return (ax * by - ay * bx).sign() > 0;
}

inline Coord abs_coord(const Coord& c) { return c.sign() < 0 ? -c : c; }

}  // namespace detail

// `extra` points only widen the box.
inline ArrangementDCEL build_arrangement(const std::vector<Line>& lines, const std::vector<Point>& extra = {}) {
  if (lines.empty()) throw GeomError(ErrorCode::EmptyInput, "arrangement needs at least one line");
  ArrangementDCEL d;
  d.lines = lines;
  const int n = int(lines.size());

  Coord bound(1);
  auto widen = [&](const Coord& c) {
    Coord a = detail::abs_coord(c);
    if (a > bound) bound = a;
  };
  std::vector<std::vector<Coord>> cuts(n);
  for (int i = 0; i < n; ++i) {
    widen(lines[i].b);
    for (int j = i + 1; j < n; ++j) {
      auto v = line_intersection(lines[i], lines[j]);
      if (!v) continue;
      widen(v->x);
      widen(v->y);
      cuts[i].push_back(v->x);
      cuts[j].push_back(v->x);
    }
  }
  // Every line must cross the box above every query abscissa.
  for (const auto& p : extra) {
    widen(p.x);
    widen(p.y);
    for (const auto& l : lines) widen(l.at(p.x));
  }
  const Coord B = bound + Coord(1);
  d.box = B;

  std::map<Point, int, detail::PointLess> vid;
  auto vertex = [&](const Point& p) {
    auto [it, fresh] = vid.emplace(p, int(d.vertices.size()));
    if (fresh) d.vertices.push_back(p);
    return it->second;
  };

  struct Seg {
    int u, v, line;
  };
  std::vector<Seg> segs;
  std::vector<std::vector<Point>> on_box(4);  // bottom, right, top, left

  for (int i = 0; i < n; ++i) {
    const Line& l = lines[i];
    // Clip to the box: |x| <= B and |a x + b| <= B.
    Coord lo = -B, hi = B;
    if (!l.a.is_zero()) {
      Coord x1 = (B - l.b) / l.a, x2 = (-B - l.b) / l.a;
      if (x1 > x2) std::swap(x1, x2);
      if (x1 > lo) lo = x1;
      if (x2 < hi) hi = x2;
    }
    auto place = [&](const Coord& x) {
      Point p{x, l.at(x)};
      if (x == -B) on_box[3].push_back(p);
      else if (x == B) on_box[1].push_back(p);
      else if (p.y == -B) on_box[0].push_back(p);
      else on_box[2].push_back(p);
      return p;
    };
    std::vector<Coord> xs = cuts[i];
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<int> chain;
    chain.push_back(vertex(place(lo)));
    for (const auto& x : xs) chain.push_back(vertex(Point{x, l.at(x)}));
    chain.push_back(vertex(place(hi)));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) segs.push_back({chain[k], chain[k + 1], i});
  }

  // Box boundary, counterclockwise.
  std::vector<Point> corners = {{-B, -B}, {B, -B}, {B, B}, {-B, B}};
  for (int side = 0; side < 4; ++side) {
    auto pts = on_box[side];
    pts.push_back(corners[side]);
    pts.push_back(corners[(side + 1) % 4]);
    const Point a = corners[side];
    std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
      Coord dp = detail::abs_coord(p.x - a.x) + detail::abs_coord(p.y - a.y);
      Coord dq = detail::abs_coord(q.x - a.x) + detail::abs_coord(q.y - a.y);
      return dp < dq;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) segs.push_back({vertex(pts[k]), vertex(pts[k + 1]), -1});
  }

  const int V = int(d.vertices.size());
  std::vector<std::vector<int>> out(V);
  d.half_edges.resize(2 * segs.size());
  for (std::size_t s = 0; s < segs.size(); ++s) {
    int h = int(2 * s);
    d.half_edges[h] = {segs[s].u, h + 1, -1, -1, -1, segs[s].line};
    d.half_edges[h + 1] = {segs[s].v, h, -1, -1, -1, segs[s].line};
    out[segs[s].u].push_back(h);
    out[segs[s].v].push_back(h + 1);
  }
  auto dir = [&](int h) {
    const Point& o = d.vertices[d.half_edges[h].origin];
    const Point& t = d.vertices[d.half_edges[d.half_edges[h].twin].origin];
    return std::pair<Coord, Coord>{t.x - o.x, t.y - o.y};
  };
  for (int v = 0; v < V; ++v) {
    auto& o = out[v];
    std::vector<std::pair<Coord, Coord>> dirs;
    std::vector<int> idx(o.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (int h : o) dirs.push_back(dir(h));
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return detail::angle_less(dirs[a].first, dirs[a].second, dirs[b].first, dirs[b].second);
    });
    std::vector<int> sorted;
    for (int k : idx) sorted.push_back(o[k]);
    o = sorted;
    // Arriving along twin(e) the face-left walk continues with the clockwise
    // neighbour of e.
    const int k = int(o.size());
    for (int j = 0; j < k; ++j) {
      int e = o[j];
      int in = d.half_edges[e].twin;
      int nx = o[(j - 1 + k) % k];
      d.half_edges[in].next = nx;
      d.half_edges[nx].prev = in;
    }
  }

  for (int h = 0; h < int(d.half_edges.size()); ++h) {
    if (d.half_edges[h].face != -1) continue;
    int f = int(d.face_edge.size());
    d.face_edge.push_back(h);
    Coord area2(0);
    int e = h;
    do {
      d.half_edges[e].face = f;
      const Point& a = d.vertices[d.half_edges[e].origin];
      const Point& b = d.vertices[d.half_edges[d.half_edges[e].next].origin];
      area2 += a.x * b.y - a.y * b.x;
      e = d.half_edges[e].next;
    } while (e != h);
    if (area2.sign() < 0) d.outer_face = f;
  }

  d.rightward.assign(n, {});
  for (int h = 0; h < int(d.half_edges.size()); ++h) {
    int l = d.half_edges[h].line;
    if (l < 0) continue;
    auto [dx, dy] = dir(h);
    if (dx.sign() > 0) d.rightward[l].push_back(h);
  }
  for (auto& hs : d.rightward)
    std::sort(hs.begin(), hs.end(), [&](int a, int b) {
      return d.vertices[d.half_edges[a].origin].x < d.vertices[d.half_edges[b].origin].x;
    });
  return d;
}

// Walks a face cycle and reports its real bounding lines counterclockwise.
inline Face dcel_face(const ArrangementDCEL& d, int face) {
  std::vector<BoundEdge> edges;
  std::vector<bool> gaps;
  const int start = d.face_edge[face];
  // Begin right after a box edge if there is one so that runs do not wrap.
  int h0 = start;
  {
    int e = start;
    do {
      if (d.half_edges[e].line < 0) {
        h0 = d.half_edges[e].next;
        break;
      }
      e = d.half_edges[e].next;
    } while (e != start);
  }
  int e = h0;
  bool pending_gap = false;
  do {
    const auto& he = d.half_edges[e];
    if (he.line < 0) {
      pending_gap = true;
    } else {
      const Point& o = d.vertices[he.origin];
      const Point& t = d.vertices[d.half_edges[he.twin].origin];
      BoundEdge b{he.line, t.x > o.x};
      if (!edges.empty() && edges.back() == b && !pending_gap) {
        // same line continuing through a vertex
      } else {
        if (!edges.empty()) gaps.back() = pending_gap;
        edges.push_back(b);
        gaps.push_back(false);
      }
      pending_gap = false;
    }
    e = he.next;
  } while (e != h0);
  if (!edges.empty()) {
    gaps.back() = pending_gap;
    if (edges.size() > 1 && edges.front() == edges.back() && !gaps.back()) {
      edges.pop_back();
      gaps.pop_back();
    }
  }
  return make_face(edges, gaps, d.lines);
}

// Face containing p, found from the line directly below (or above) p.
inline int locate_face(const ArrangementDCEL& d, const Point& p) {
  const int n = int(d.lines.size());
  int below = -1, above = -1;
  Coord vb, va;
  for (int i = 0; i < n; ++i) {
    const Line& l = d.lines[i];
    int s = side_sign(p, l);
    if (s == 0) throw GeomError(ErrorCode::PointOnLine, "query point lies on line " + std::to_string(i));
    Coord v = l.at(p.x);
    if (s > 0) {
      if (below < 0 || v > vb || (v == vb && l.a > d.lines[below].a)) {
        below = i;
        vb = v;
      }
    } else {
      if (above < 0 || v < va || (v == va && l.a < d.lines[above].a)) {
        above = i;
        va = v;
      }
    }
  }
  const int line = below >= 0 ? below : above;
  const auto& hs = d.rightward[line];
  // Last rightward half-edge starting at or before p.x.
  auto it = std::upper_bound(hs.begin(), hs.end(), p.x, [&](const Coord& x, int h) {
    return x < d.vertices[d.half_edges[h].origin].x;
  });
  if (it == hs.begin()) throw GeomError(ErrorCode::PointOnLine, "query point outside the box");
  int h = *std::prev(it);
  if (below < 0) h = d.half_edges[h].twin;
  return d.half_edges[h].face;
}

inline FaceSet non_empty_faces_naive(const Instance& in) {
  std::vector<PointFace> pf;
  if (in.lines.empty()) {
    for (int i = 0; i < int(in.points.size()); ++i) {
      Face f;
      pf.push_back({i, f});
    }
    return dedup_faces(std::move(pf));
  }
  ArrangementDCEL d = build_arrangement(in.lines, in.points);
  std::map<int, Face> cache;
  for (int i = 0; i < int(in.points.size()); ++i) {
    int f = locate_face(d, in.points[i]);
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, dcel_face(d, f)).first;
    pf.push_back({i, it->second});
  }
  return dedup_faces(std::move(pf));
}

}  // namespace manyfaces
