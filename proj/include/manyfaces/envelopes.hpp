#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "manyfaces/envelope_face.hpp"
#include "manyfaces/face.hpp"
#include "manyfaces/geometry.hpp"
#include "manyfaces/hull_chain.hpp"

namespace manyfaces {

// Receives, for one point, the chain of the duals of the lines below it
// (LowerHull) and of the lines above it (UpperHull), restricted to the lines
// of the current subproblem. The chains stay valid only during the call.
using EnvelopeSink = std::function<void(int point, const HullChain& below, const HullChain& above)>;

struct RecursionStats {
  std::int64_t brute_calls = 0, primal_steps = 0, dual_steps = 0;
  std::int64_t brute_work = 0;    // sum of |points| * |lines| over brute calls
  std::int64_t hull_set_total = 0;  // sum of hull-set sizes over gathered dual lines
  int max_depth = 0;
  std::int64_t size_violations = 0;  // child subproblems larger than their bound
};

// Shared state of one solve. Global line ids follow the (a, -b) order, so
// they are also the x-order of the dual points.
class EnvelopeContext {
 public:
  using Recurse = std::function<void(const std::vector<int>& pts, const std::vector<int>& lines, const EnvelopeSink&)>;

  EnvelopeContext(std::vector<Line> sorted_lines, std::vector<Point> pts)
      : lines(std::move(sorted_lines)), points(std::move(pts)), duals(make_duals(lines)), store(duals) {}
  EnvelopeContext(const EnvelopeContext&) = delete;
  EnvelopeContext& operator=(const EnvelopeContext&) = delete;

  const std::vector<Line> lines;
  const std::vector<Point> points;
  const std::vector<Point> duals;
  ChainStore store;
  RecursionStats stats;
  std::uint64_t seed = 1;
  int depth = 0;
  // Solves a child subproblem; installed by the chosen strategy.
  Recurse recurse;

  std::vector<Line> subset(const std::vector<int>& ids) const {
    std::vector<Line> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(lines[i]);
    return out;
  }
  std::vector<Point> point_subset(const std::vector<int>& ids) const {
    std::vector<Point> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(points[i]);
    return out;
  }

 private:
  static std::vector<Point> make_duals(const std::vector<Line>& ls) {
    std::vector<Point> d;
    d.reserve(ls.size());
    for (const auto& l : ls) d.push_back(dualize_line(l));
    return d;
  }
};

// Direct O(|pts| |lines|) envelopes: split the lines by side and scan.
inline void brute_envelopes(EnvelopeContext& ctx, const std::vector<int>& pts, const std::vector<int>& lines,
                            const EnvelopeSink& sink) {
  ++ctx.stats.brute_calls;
  ctx.stats.brute_work += std::int64_t(pts.size()) * std::int64_t(lines.size());
  std::vector<int> below, above, st;
  below.reserve(lines.size());
  above.reserve(lines.size());
  for (int p : pts) {
    below.clear();
    above.clear();
    const Point& q = ctx.points[p];
    for (int l : lines) {
      int s = side_sign(q, ctx.lines[l]);
      if (s > 0) below.push_back(l);
      else if (s < 0) above.push_back(l);
      else throw GeomError(ErrorCode::PointOnLine, "point " + std::to_string(p) + " lies on line " + std::to_string(l));
    }
    const std::size_t mark = ctx.store.checkpoint();
    ctx.store.hull_scan(below, Orientation::LowerHull, st);
    HullChain b = ctx.store.from_vertices(st, Orientation::LowerHull);
    ctx.store.hull_scan(above, Orientation::UpperHull, st);
    HullChain a = ctx.store.from_vertices(st, Orientation::UpperHull);
    sink(p, b, a);
    ctx.store.rollback(mark);
  }
}

// Line order used for global ids: dual x, then dual y.
inline std::vector<int> dual_order(const std::vector<Line>& lines) {
  std::vector<int> ord(lines.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int i, int j) {
    int c = cmp(lines[i].a, lines[j].a);
    if (c != 0) return c < 0;
    return cmp(lines[j].b, lines[i].b) < 0;
  });
  return ord;
}

// Collects faces from the per-point chains; the first point reaching a face
// pays for its boundary walk.
class FaceCollector {
 public:
  FaceCollector(const EnvelopeContext& ctx, std::vector<int> origin) : ctx_(ctx), origin_(std::move(origin)) {}

  void operator()(int p, const HullChain& below, const HullChain& above) {
    FaceExtractor fx(ctx_.store, below, above, ctx_.points[p]);
    LeftKey k = fx.left_key();
    auto it = index_.find(k);
    if (it == index_.end()) {
      fx.cycle(edges_, gaps_);
      faces_.push_back(make_face(edges_, gaps_, ctx_.lines, origin_));
      witnesses_.emplace_back();
      it = index_.emplace(k, int(faces_.size()) - 1).first;
    }
    witnesses_[it->second].push_back(p);
  }

  // Witnesses are reported through `point_origin` when it is non-empty.
  FaceSet result(const std::vector<std::vector<int>>& point_origin = {}) {
    FaceSet fs;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      std::vector<int> w;
      for (int p : witnesses_[i]) {
        if (point_origin.empty()) w.push_back(p);
        else w.insert(w.end(), point_origin[p].begin(), point_origin[p].end());
      }
      std::sort(w.begin(), w.end());
      FaceKey key = faces_[i].key;
      auto [it, fresh] = fs.faces.emplace(std::move(key), FaceSet::Entry{faces_[i], std::move(w)});
      if (!fresh) throw std::logic_error("two left keys produced the same face");
    }
    return fs;
  }

 private:
  const EnvelopeContext& ctx_;
  std::vector<int> origin_;
  std::map<LeftKey, int> index_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> witnesses_;
  std::vector<BoundEdge> edges_;
  std::vector<bool> gaps_;
};

}  // namespace manyfaces
