#pragma once

#include <tuple>
#include <vector>

#include "manyfaces/face.hpp"
#include "manyfaces/hull_chain.hpp"

namespace manyfaces {

// The face of a point p as seen through two chains over the dual table:
//   below: LowerHull chain of the duals of the lines below p; its vertices in
//          rank order are the pieces of the upper envelope U, left to right.
//   above: UpperHull chain of the duals of the lines above p; its vertices in
//          rank order are the pieces of the lower envelope D, right to left.
// The face is U < y < D over the interval around p.x where U < D.
struct InnerTangents {
  bool has_left = false, has_right = false;
  // Ranks of the pieces bounding the face at its left and right ends.
  int u_left = 0, d_left = 0;
  int u_right = 0, d_right = 0;
};

// Identifies the face by its left end: the lowest vertex-crossing pair, or
// the pair of far-left pieces (-1 for a missing side).
using LeftKey = std::tuple<int, int, int>;

class FaceExtractor {
 public:
  FaceExtractor(const ChainStore& store, const HullChain& below, const HullChain& above, const Point& p)
      : s_(store), below_(below), above_(above), p_(p), nu_(store.size(below)), nd_(store.size(above)) {}

  LeftKey left_key() {
    if (nu_ == 0 || nd_ == 0) {
      int u = nu_ ? s_.at(below_, 0) : -1;
      int d = nd_ ? s_.at(above_, nd_ - 1) : -1;
      return {0, u, d};
    }
    left();
    return {t_.has_left ? 1 : 0, s_.at(below_, t_.u_left), s_.at(above_, t_.d_left)};
  }

  const InnerTangents& tangents() {
    if (nu_ && nd_) {
      left();
      right();
    }
    return t_;
  }

  // Counterclockwise boundary: U pieces left to right (face above them), then
  // D pieces right to left (face below them).
  void cycle(std::vector<BoundEdge>& edges, std::vector<bool>& gaps) {
    edges.clear();
    gaps.clear();
    std::vector<int> ids;
    if (nu_ == 0 && nd_ == 0) return;
    int ulo = 0, uhi = nu_, dlo = 0, dhi = nd_;
    bool gap_right = true, gap_left = true;
    if (nu_ && nd_) {
      tangents();
      if (t_.has_left) {
        ulo = t_.u_left;
        dhi = t_.d_left + 1;
        gap_left = false;
      }
      if (t_.has_right) {
        uhi = t_.u_right + 1;
        dlo = t_.d_right;
        gap_right = false;
      }
    }
    s_.append_range(below_, ulo, uhi, ids);
    for (int v : ids) {
      edges.push_back({v, true});
      gaps.push_back(false);
    }
    if (!edges.empty()) gaps.back() = gap_right;
    ids.clear();
    s_.append_range(above_, dlo, dhi, ids);
    for (int v : ids) {
      edges.push_back({v, false});
      gaps.push_back(false);
    }
    gaps.back() = gap_left;
    if (nu_ == 0 || nd_ == 0) {
      // A single envelope: one gap, after the last edge.
      for (std::size_t i = 0; i + 1 < gaps.size(); ++i) gaps[i] = false;
      gaps.back() = true;
    }
  }

 private:
  const Point& pt(int v) const { return s_.point(v); }
  // Abscissa of the breakpoint between consecutive chain vertices.
  Coord brk(int v, int w) const { return (pt(w).y - pt(v).y) / (pt(w).x - pt(v).x); }
  Coord line_val(int v, const Coord& x) const { return pt(v).x * x - pt(v).y; }

  void left() {
    if (left_done_) return;
    left_done_ = true;
    const int u0 = s_.at(below_, 0), dl = s_.at(above_, nd_ - 1);
    if (!(pt(u0).x < pt(dl).x)) {
      t_.has_left = false;
      t_.u_left = 0;
      t_.d_left = nd_ - 1;
      return;
    }
    t_.has_left = true;
    t_.u_left = s_.find_edge(below_, [&](int v, int w) {
      Coord b = brk(v, w);
      return b < p_.x && line_val(v, b) >= s_.envelope_eval(above_, b);
    });
    const int u = s_.at(below_, t_.u_left);
    t_.d_left = s_.find_edge(above_, [&](int v, int w) {
      Coord g = brk(v, w);
      return !(g < p_.x && line_val(u, g) >= line_val(v, g));
    });
  }

  void right() {
    if (right_done_) return;
    right_done_ = true;
    const int uk = s_.at(below_, nu_ - 1), d0 = s_.at(above_, 0);
    if (!(pt(uk).x > pt(d0).x)) {
      t_.has_right = false;
      t_.u_right = nu_ - 1;
      t_.d_right = 0;
      return;
    }
    t_.has_right = true;
    t_.u_right = s_.find_edge(below_, [&](int v, int w) {
      Coord b = brk(v, w);
      return !(b > p_.x && line_val(w, b) >= s_.envelope_eval(above_, b));
    });
    const int u = s_.at(below_, t_.u_right);
    t_.d_right = s_.find_edge(above_, [&](int v, int w) {
      Coord g = brk(v, w);
      return g > p_.x && line_val(u, g) >= line_val(w, g);
    });
  }

  const ChainStore& s_;
  HullChain below_, above_;
  Point p_;
  int nu_, nd_;
  InnerTangents t_;
  bool left_done_ = false, right_done_ = false;
};

inline InnerTangents inner_common_tangents(const ChainStore& store, const HullChain& below, const HullChain& above,
                                           const Point& p) {
  FaceExtractor fx(store, below, above, p);
  return fx.tangents();
}

}  // namespace manyfaces
