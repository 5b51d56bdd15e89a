#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "manyfaces/geometry.hpp"

namespace manyfaces {

enum class Orientation { LowerHull, UpperHull };

// Handle to an immutable x-monotone convex chain stored in a ChainStore.
struct HullChain {
  int root = -1;
  Orientation orient = Orientation::LowerHull;
  bool empty() const { return root < 0; }
};

struct TangentPair {
  enum class Kind { LowerCommon, UpperCommon, InnerPair };
  int t1 = -1;
  int t2 = -1;
  Kind kind = Kind::LowerCommon;
};

struct ChainStats {
  std::int64_t merges = 0;
  std::int64_t joins = 0;
  std::int64_t crossings_total = 0;
  int max_crossings = 0;
  std::int64_t precondition_failures = 0;
};

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arena of persistent treap nodes over a shared table of points. Priorities
// are a hash of the vertex id, so the tree shape of a chain depends only on
// its vertex set.
class ChainStore {
 public:
  struct Node {
    int vid, l, r, size, lo, hi;
    std::uint32_t pri;
  };

  explicit ChainStore(const std::vector<Point>& pts) : pts_(&pts) {}

  const Point& point(int vid) const { return (*pts_)[vid]; }
  const std::vector<Point>& points() const { return *pts_; }
  ChainStats& stats() { return stats_; }
  const ChainStats& stats() const { return stats_; }
  bool check_preconditions = false;

  std::size_t checkpoint() const { return nodes_.size(); }
  void rollback(std::size_t mark) { nodes_.resize(mark); }
  std::size_t node_count() const { return nodes_.size(); }

  // ---- tree layer -------------------------------------------------------

  int size(const HullChain& c) const { return c.root < 0 ? 0 : nodes_[c.root].size; }
  int first(const HullChain& c) const { return c.root < 0 ? -1 : nodes_[c.root].lo; }
  int last(const HullChain& c) const { return c.root < 0 ? -1 : nodes_[c.root].hi; }

  int at(const HullChain& c, int k) const {
    int t = c.root;
    while (t >= 0) {
      const Node& n = nodes_[t];
      int ls = n.l < 0 ? 0 : nodes_[n.l].size;
      if (k < ls) {
        t = n.l;
      } else if (k == ls) {
        return n.vid;
      } else {
        k -= ls + 1;
        t = n.r;
      }
    }
    throw ChainError("rank out of range");
  }

  int root_vertex(const HullChain& c) const { return c.root < 0 ? -1 : nodes_[c.root].vid; }
  int height(const HullChain& c) const { return height(c.root); }

  std::vector<int> vertices(const HullChain& c) const {
    std::vector<int> out;
    out.reserve(size(c));
    std::vector<int> stack;
    int t = c.root;
    while (t >= 0 || !stack.empty()) {
      while (t >= 0) {
        stack.push_back(t);
        t = nodes_[t].l;
      }
      t = stack.back();
      stack.pop_back();
      out.push_back(nodes_[t].vid);
      t = nodes_[t].r;
    }
    return out;
  }

  // Appends the vertices of ranks [lo, hi) in order.
  void append_range(const HullChain& c, int lo, int hi, std::vector<int>& out) const { append_range(c.root, lo, hi, out); }

  // Builds a chain from vertex ids that already form a valid chain.
  HullChain from_vertices(const std::vector<int>& vids, Orientation o) {
    return HullChain{build(vids.data(), int(vids.size())), o};
  }

  HullChain concat(const HullChain& a, const HullChain& b) { return HullChain{concat(a.root, b.root), a.orient}; }

  // (first k vertices, rest)
  std::pair<HullChain, HullChain> split_rank(const HullChain& c, int k) {
    auto [l, r] = split_rank(c.root, k);
    return {HullChain{l, c.orient}, HullChain{r, c.orient}};
  }

  // Left part holds vertices with go_left(vid) true; go_left must be
  // monotone along the chain.
  template <class Pred>
  std::pair<HullChain, HullChain> split_if(const HullChain& c, Pred go_left) {
    auto [l, r] = split_pred(c.root, go_left);
    return {HullChain{l, c.orient}, HullChain{r, c.orient}};
  }

  // First rank i such that pred(v_i, v_{i+1}) is false; pred must be monotone
  // (true then false). Returns size-1 if it holds on every edge.
  template <class Pred>
  int find_edge(const HullChain& c, Pred pred) const {
    int t = c.root, base = 0, succ_anc = -1, ans = size(c) - 1;
    while (t >= 0) {
      const Node& n = nodes_[t];
      int ls = n.l < 0 ? 0 : nodes_[n.l].size;
      int rank = base + ls;
      int succ = n.r >= 0 ? nodes_[n.r].lo : succ_anc;
      if (succ >= 0 && pred(n.vid, succ)) {
        base = rank + 1;
        t = n.r;
      } else {
        ans = std::min(ans, rank);
        succ_anc = n.vid;
        t = n.l;
      }
    }
    return ans;
  }

  // First rank i with pred(v_i) false; size if none.
  template <class Pred>
  int find_vertex(const HullChain& c, Pred pred) const {
    int t = c.root, base = 0, ans = size(c);
    while (t >= 0) {
      const Node& n = nodes_[t];
      int ls = n.l < 0 ? 0 : nodes_[n.l].size;
      int rank = base + ls;
      if (pred(n.vid)) {
        base = rank + 1;
        t = n.r;
      } else {
        ans = rank;
        t = n.l;
      }
    }
    return ans;
  }

  // ---- geometry helpers -------------------------------------------------

  static int sgn(Orientation o) { return o == Orientation::LowerHull ? 1 : -1; }
  Coord vy(int vid, Orientation o) const { return o == Orientation::LowerHull ? point(vid).y : -point(vid).y; }
  int orientv(int a, int b, int c, Orientation o) const { return sgn(o) * orient(point(a), point(b), point(c)); }

  // ---- chain operations -------------------------------------------------

  // Points must be strictly x-increasing.
  HullChain chain_from_sorted(const std::vector<int>& vids, Orientation o) {
    for (std::size_t i = 1; i < vids.size(); ++i)
      if (cmp(point(vids[i - 1]).x, point(vids[i]).x) >= 0) throw ChainError("DuplicateX: chain input not strictly x-sorted");
    return hull_of_sorted(vids, o);
  }

  // Points sorted by x; among equal x only the extreme one in the chain's
  // direction survives.
  HullChain hull_of_sorted(const std::vector<int>& vids, Orientation o) {
    std::vector<int> st;
    hull_scan(vids, o, st);
    return from_vertices(st, o);
  }

  void hull_scan(const std::vector<int>& vids, Orientation o, std::vector<int>& st) const {
    st.clear();
    for (int v : vids) {
      if (!st.empty() && point(st.back()).x == point(v).x) {
        if (cmp(vy(v, o), vy(st.back(), o)) >= 0) continue;
        st.pop_back();
      }
      while (st.size() >= 2 && orientv(st[st.size() - 2], st.back(), v, o) <= 0) st.pop_back();
      st.push_back(v);
    }
  }

  std::pair<HullChain, HullChain> split_at_x(const HullChain& c, const Coord& x0) {
    return split_if(c, [&](int v) { return cmp(point(v).x, x0) <= 0; });
  }

  // Common tangent of c1 and c2 supporting both from below (LowerHull) or
  // above (UpperHull). Every vertex of c1 must lie left of every vertex of c2.
  TangentPair common_tangent_separated(const HullChain& c1, const HullChain& c2) const {
    if (c1.empty() || c2.empty()) throw ChainError("EmptyChain");
    const Orientation o = c1.orient;
    const Coord m = point(first(c2)).x;
    int x = c1.root, y = c2.root;
    int a_pred = -1, a_succ = -1, b_pred = -1, b_succ = -1;
    int a = -1, b = -1, aL = -1, bL = -1;
    for (int guard = 0;; ++guard) {
      if (x < 0 || y < 0 || guard > 4 * 64) throw ChainError("tangent search lost its way (chains not separated?)");
      const Node& na = nodes_[x];
      const Node& nb = nodes_[y];
      a = na.vid;
      b = nb.vid;
      aL = na.l >= 0 ? nodes_[na.l].hi : a_pred;
      int aR = na.r >= 0 ? nodes_[na.r].lo : a_succ;
      bL = nb.l >= 0 ? nodes_[nb.l].hi : b_pred;
      int bR = nb.r >= 0 ? nodes_[nb.r].lo : b_succ;
      bool A2 = aL >= 0 && orientv(a, b, aL, o) < 0;
      bool A1 = aR >= 0 && orientv(a, b, aR, o) < 0;
      bool B1 = bL >= 0 && orientv(a, b, bL, o) < 0;
      bool B2 = bR >= 0 && orientv(a, b, bR, o) < 0;
      bool A0 = !A1 && !A2, B0 = !B1 && !B2;
      if (A0 && B0) break;
      int move_a = 0, move_b = 0;
      if (A2) move_a = -1;
      if (B2) move_b = 1;
      if (!A2 && !B2) {
        if (A1 && B1) {
          if (cmp(line_at(a, aR, m, o), line_at(bL, b, m, o)) > 0) {
            move_b = -1;
          } else {
            move_a = 1;
          }
        } else if (A0 && B1) {
          move_b = -1;
        } else {
          move_a = 1;
        }
      }
      if (move_a < 0) {
        a_succ = a;
        x = na.l;
      } else if (move_a > 0) {
        a_pred = a;
        x = na.r;
      }
      if (move_b < 0) {
        b_succ = b;
        y = nb.l;
      } else if (move_b > 0) {
        b_pred = b;
        y = nb.r;
      }
    }
    TangentPair tp;
    tp.kind = o == Orientation::LowerHull ? TangentPair::Kind::LowerCommon : TangentPair::Kind::UpperCommon;
    tp.t1 = a;
    tp.t2 = b;
    if (aL >= 0 && orientv(a, b, aL, o) == 0) tp.t1 = aL;
    if (bL >= 0 && orientv(a, b, bL, o) == 0) tp.t2 = bL;
    return tp;
  }

  HullChain join_separated(HullChain c1, HullChain c2) {
    if (c1.empty()) return c2;
    if (c2.empty()) return c1;
    ++stats_.joins;
    const Orientation o = c1.orient;
    // Equal abscissae at the seam: only the extreme vertex can survive.
    while (!c1.empty() && !c2.empty() && point(last(c1)).x == point(first(c2)).x) {
      if (cmp(vy(last(c1), o), vy(first(c2), o)) <= 0) {
        c2 = split_rank(c2, 1).second;
      } else {
        c1 = split_rank(c1, size(c1) - 1).first;
      }
    }
    if (c1.empty()) return c2;
    if (c2.empty()) return c1;
    TangentPair tp = common_tangent_separated(c1, c2);
    // The tangent breaks ties toward smaller x; a collinear successor of t2
    // must not stay on the hull.
    {
      const Coord tx = point(tp.t2).x;
      int r2 = find_vertex(c2, [&](int v) { return cmp(point(v).x, tx) <= 0; });
      if (r2 < size(c2) && orientv(tp.t1, tp.t2, at(c2, r2), o) == 0) tp.t2 = at(c2, r2);
    }
    const Coord x1 = point(tp.t1).x, x2 = point(tp.t2).x;
    HullChain left = split_if(c1, [&](int v) { return cmp(point(v).x, x1) <= 0; }).first;
    HullChain right = split_if(c2, [&](int v) { return cmp(point(v).x, x2) < 0; }).second;
    return concat(left, right);
  }

  // Hull of the union of cA and cB where cA lies on the outer side of the
  // envelope of the separator's dual lines and cB strictly on the inner side.
  // For LowerHull chains the separator envelope is the upper envelope of the
  // duals of `sep` (equivalently the lower hull of `sep`); UpperHull mirrors it.
  HullChain merge_bounded_crossings(const HullChain& cA, const HullChain& cB, const std::vector<Point>& sep) {
    ++stats_.merges;
    if (cB.empty()) return cA;
    if (cA.empty()) return cB;
    const Orientation o = cA.orient;
    if (check_preconditions) verify_separation(cA, cB, sep);

    std::vector<Coord> breaks = separator_breakpoints(sep, o);
    // Straddling edges of cB, as ranks of their left endpoints.
    std::vector<int> edges;
    const int nb = size(cB);
    for (const auto& beta : breaks) {
      int r = find_vertex(cB, [&](int v) { return cmp(point(v).x, beta) < 0; });
      // vertices [0, r) are left of beta
      if (r == 0 || r == nb) continue;
      if (point(at(cB, r)).x == beta) continue;
      edges.push_back(r - 1);
    }
    // Upper hulls list their breakpoints right to left.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<HullChain> pieces;
    const Coord bx0 = point(first(cB)).x, bx1 = point(last(cB)).x;
    pieces.push_back(split_if(cA, [&](int v) { return cmp(point(v).x, bx0) < 0; }).first);

    int crossings = 0;
    HullChain rest_b = cB;
    int consumed = 0;
    for (int e : edges) {
      int u = at(cB, e), w = at(cB, e + 1);
      const Coord ux = point(u).x, wx = point(w).x;
      HullChain mid = split_if(cA, [&](int v) { return cmp(point(v).x, ux) <= 0; }).second;
      mid = split_if(mid, [&](int v) { return cmp(point(v).x, wx) < 0; }).first;
      if (mid.empty()) continue;
      // Vertices of mid strictly beyond the edge u-w (below it for lower hulls).
      auto below = [&](int v) { return orientv(u, w, v, o) < 0; };
      int k = find_edge(mid, [&](int p, int q) {
        // slope(p,q) < slope(u,w)
        return edge_slope_less(p, q, u, w, o);
      });
      int vstar = at(mid, k);
      if (!below(vstar)) continue;
      int i1 = find_vertex(mid, [&](int v) { return cmp(point(v).x, point(vstar).x) < 0 && !below(v); });
      int i2 = find_vertex(mid, [&](int v) { return cmp(point(v).x, point(vstar).x) <= 0 || below(v); });
      auto [lhs, run] = split_rank(mid, i1);
      run = split_rank(run, i2 - i1).first;
      (void)lhs;
      const bool a_left_of_edge = cmp(point(first(cA)).x, ux) < 0 || i1 > 0;
      const bool a_right_of_edge = cmp(point(last(cA)).x, wx) > 0 || i2 < size(mid);
      crossings += (a_left_of_edge ? 1 : 0) + (a_right_of_edge ? 1 : 0);
      auto [bl, br] = split_rank(rest_b, e + 1 - consumed);
      pieces.push_back(bl);
      pieces.push_back(run);
      rest_b = br;
      consumed = e + 1;
    }
    pieces.push_back(rest_b);
    pieces.push_back(split_if(cA, [&](int v) { return cmp(point(v).x, bx1) <= 0; }).second);

    stats_.crossings_total += crossings;
    stats_.max_crossings = std::max(stats_.max_crossings, crossings);

    HullChain acc{-1, o};
    for (const auto& p : pieces) acc = join_separated(acc, p);
    return acc;
  }

  // Rank of the vertex minimising y' - t*x (y' the oriented y).
  int tangent_rank(const HullChain& c, const Coord& t) const {
    const Orientation o = c.orient;
    return find_edge(c, [&](int p, int q) {
      // slope'(p,q) < t
      const Point& P = point(p);
      const Point& Q = point(q);
      return cmp(vy(q, o) - vy(p, o), t * (Q.x - P.x)) < 0;
    });
  }

  // Value at x of the envelope of the lines dual to the chain's vertices:
  // the maximum for a LowerHull chain, the minimum for an UpperHull chain.
  Coord envelope_eval(const HullChain& c, const Coord& x) const {
    if (c.empty()) throw ChainError("EmptyChain");
    Coord t = c.orient == Orientation::LowerHull ? x : -x;
    int v = at(c, tangent_rank(c, t));
    return dualize_point(point(v)).at(x);
  }

  // Breakpoint abscissae of the separator envelope: edge slopes of the lower
  // (or upper) hull of the separator points.
  std::vector<Coord> separator_breakpoints(const std::vector<Point>& sep, Orientation o) const {
    std::vector<Point> q = sep;
    std::sort(q.begin(), q.end(), [](const Point& a, const Point& b) {
      int c = cmp(a.x, b.x);
      return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    });
    const int s = ChainStore::sgn(o);
    std::vector<Point> h;
    for (const auto& p : q) {
      if (!h.empty() && h.back().x == p.x) {
        if (s * cmp(p.y, h.back().y) >= 0) continue;
        h.pop_back();
      }
      while (h.size() >= 2 && s * orient(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
      h.push_back(p);
    }
    std::vector<Coord> out;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) out.push_back((h[i + 1].y - h[i].y) / (h[i + 1].x - h[i].x));
    return out;
  }

 private:
  static std::uint32_t hash_pri(int vid) {
    std::uint64_t z = std::uint64_t(vid) + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return std::uint32_t(z ^ (z >> 31));
  }
  void append_range(int t, int lo, int hi, std::vector<int>& out) const {
    if (t < 0 || lo >= hi) return;
    const Node& n = nodes_[t];
    if (hi <= 0 || lo >= n.size) return;
    int ls = n.l < 0 ? 0 : nodes_[n.l].size;
    append_range(n.l, lo, hi, out);
    if (lo <= ls && ls < hi) out.push_back(n.vid);
    append_range(n.r, lo - ls - 1, hi - ls - 1, out);
  }
  int height(int t) const { return t < 0 ? 0 : 1 + std::max(height(nodes_[t].l), height(nodes_[t].r)); }
  bool higher(int a, int b) const {
    const Node& x = nodes_[a];
    const Node& y = nodes_[b];
    return x.pri != y.pri ? x.pri > y.pri : x.vid < y.vid;
  }

  int mk(int vid, int l, int r, std::uint32_t pri) {
    Node n{vid, l, r, 1, vid, vid, pri};
    if (l >= 0) {
      n.size += nodes_[l].size;
      n.lo = nodes_[l].lo;
    }
    if (r >= 0) {
      n.size += nodes_[r].size;
      n.hi = nodes_[r].hi;
    }
    nodes_.push_back(n);
    return int(nodes_.size()) - 1;
  }

  int concat(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    if (higher(a, b)) {
      Node n = nodes_[a];
      int r = concat(n.r, b);
      return mk(n.vid, n.l, r, n.pri);
    }
    Node n = nodes_[b];
    int l = concat(a, n.l);
    return mk(n.vid, l, n.r, n.pri);
  }

  std::pair<int, int> split_rank(int t, int k) {
    if (t < 0) return {-1, -1};
    if (k <= 0) return {-1, t};
    if (k >= nodes_[t].size) return {t, -1};
    Node n = nodes_[t];
    int ls = n.l < 0 ? 0 : nodes_[n.l].size;
    if (k <= ls) {
      auto [l, r] = split_rank(n.l, k);
      return {l, mk(n.vid, r, n.r, n.pri)};
    }
    auto [l, r] = split_rank(n.r, k - ls - 1);
    return {mk(n.vid, n.l, l, n.pri), r};
  }

  template <class Pred>
  std::pair<int, int> split_pred(int t, Pred& pred) {
    if (t < 0) return {-1, -1};
    Node n = nodes_[t];
    if (pred(n.lo) && pred(n.hi)) return {t, -1};
    if (!pred(n.lo)) return {-1, t};
    if (pred(n.vid)) {
      auto [l, r] = split_pred(n.r, pred);
      return {mk(n.vid, n.l, l, n.pri), r};
    }
    auto [l, r] = split_pred(n.l, pred);
    return {l, mk(n.vid, r, n.r, n.pri)};
  }

  int build(const int* v, int n) {
    if (n == 0) return -1;
    std::vector<int> stack;
    const int base = int(nodes_.size());
    for (int i = 0; i < n; ++i) {
      nodes_.push_back(Node{v[i], -1, -1, 1, v[i], v[i], hash_pri(v[i])});
      int cur = base + i;
      int last = -1;
      while (!stack.empty() && higher(cur, stack.back())) {
        last = stack.back();
        stack.pop_back();
      }
      nodes_[cur].l = last;
      if (!stack.empty()) nodes_[stack.back()].r = cur;
      stack.push_back(cur);
    }
    const int root = stack.front();
    fix_up(root);
    return root;
  }

  void fix_up(int root) {
    // Post-order over freshly built nodes.
    std::vector<std::pair<int, bool>> st{{root, false}};
    while (!st.empty()) {
      auto [t, done] = st.back();
      st.pop_back();
      if (t < 0) continue;
      if (!done) {
        st.push_back({t, true});
        st.push_back({nodes_[t].l, false});
        st.push_back({nodes_[t].r, false});
        continue;
      }
      Node& n = nodes_[t];
      n.size = 1;
      n.lo = n.hi = n.vid;
      if (n.l >= 0) {
        n.size += nodes_[n.l].size;
        n.lo = nodes_[n.l].lo;
      }
      if (n.r >= 0) {
        n.size += nodes_[n.r].size;
        n.hi = nodes_[n.r].hi;
      }
    }
  }

  Coord line_at(int p, int q, const Coord& x, Orientation o) const {
    const Point& P = point(p);
    const Point& Q = point(q);
    Coord py = vy(p, o), qy = vy(q, o);
    return py + (qy - py) * (x - P.x) / (Q.x - P.x);
  }

  // slope'(p,q) < slope'(u,w), all with increasing x.
  bool edge_slope_less(int p, int q, int u, int w, Orientation o) const {
    const Point& P = point(p);
    const Point& Q = point(q);
    const Point& U = point(u);
    const Point& W = point(w);
    return sgn(o) * sgn_of_orient(P, Q, U, W) > 0;
  }
  // sign of cross((Q-P),(W-U)) in oriented coordinates.
  int sgn_of_orient(const Point& P, const Point& Q, const Point& U, const Point& W) const {
    Point d1{Q.x - P.x, Q.y - P.y};
    Point d2{W.x - U.x, W.y - U.y};
    Point zero{Coord(0), Coord(0)};
    return orient(zero, d1, d2);
  }

  void verify_separation(const HullChain& cA, const HullChain& cB, const std::vector<Point>& sep) {
    const Orientation o = cA.orient;
    const int s = sgn(o);
    auto env = [&](const Point& v) {
      // outer side: for LowerHull, v above every dual line q* is v above the
      // upper envelope.
      int worst = 2;
      for (const auto& q : sep) worst = std::min(worst, s * side_sign(v, dualize_point(q)));
      return worst;
    };
    bool bad = false;
    for (int v : vertices(cA))
      if (env(point(v)) < 0) bad = true;
    for (int v : vertices(cB)) {
      bool inner = false;
      for (const auto& q : sep)
        if (s * side_sign(point(v), dualize_point(q)) < 0) inner = true;
      if (!inner) bad = true;
    }
    if (bad) {
      ++stats_.precondition_failures;
      throw GeomError(ErrorCode::PreconditionViolated, "merge_bounded_crossings: separator precondition violated");
    }
  }

  const std::vector<Point>* pts_;
  std::vector<Node> nodes_;
  ChainStats stats_;
};

}  // namespace manyfaces
