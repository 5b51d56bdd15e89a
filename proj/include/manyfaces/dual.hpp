#pragma once

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "manyfaces/cutting.hpp"
#include "manyfaces/envelopes.hpp"
#include "manyfaces/segment_envelope.hpp"

namespace manyfaces {

// Cutting of the dual lines p* of the points, with the dual points of the
// lines located in it. Local point j is pts[j]; local line i is lines[i].
struct DualStructure {
  std::vector<int> pts, lines;
  std::vector<Line> dual_lines;  // p* per local point
  std::vector<ApproxLine> approx_dual;
  HierarchicalCutting hc;
  std::vector<std::vector<int>> cell_points;  // local line ids per cell, ascending
  std::vector<HullChain> lower, upper;        // per cell hull of its dual points
  // Refined last level: per leaf, consecutive runs of its points.
  std::vector<std::vector<std::vector<int>>> groups;
  std::size_t group_cap = 1;
  std::vector<std::vector<int>> crossed;  // per local point, cells its dual line crosses, ascending
  // Per local point, subproblem chains (vertex ids) of every group of every
  // crossed leaf: dual points above p* (lower chain) and below it (upper).
  std::vector<std::vector<std::vector<int>>> h2_lower, h2_upper;
};

inline int dual_default_r(std::size_t m, std::size_t n) {
  if (n > m && m > 0) {
    if (n >= m * m) return int(m);
    return int(std::ceil(double(n) / double(m)));
  }
  return int(std::ceil(std::cbrt(double(m))));
}

inline DualStructure dual_preprocess(EnvelopeContext& ctx, const std::vector<int>& pts, const std::vector<int>& lines,
                                     int r, CuttingParams params = {}) {
  DualStructure ds;
  ds.pts = pts;
  ds.lines = lines;
  for (int p : pts) {
    ds.dual_lines.push_back(dualize_point(ctx.points[p]));
    ds.approx_dual.push_back(approx(ds.dual_lines.back()));
  }
  std::vector<Point> sites;
  sites.reserve(lines.size());
  for (int l : lines) sites.push_back(ctx.duals[l]);
  params.seed = ctx.seed + 7919 * std::uint64_t(ctx.stats.dual_steps);
  ds.hc = build_hierarchical(ds.dual_lines, r, sites, params);
  const auto& hc = ds.hc;

  ds.cell_points.assign(hc.cells.size(), {});
  for (int i = 0; i < int(lines.size()); ++i) {
    auto path = locate_cell_path(hc, sites[i]);
    if (path.empty()) throw GeomError(ErrorCode::PreconditionViolated, "dual point outside the cutting");
    for (int c : path) ds.cell_points[c].push_back(i);
  }
  std::vector<int> ids;
  ds.lower.resize(hc.cells.size());
  ds.upper.resize(hc.cells.size());
  for (std::size_t c = 0; c < hc.cells.size(); ++c) {
    ids.clear();
    for (int i : ds.cell_points[c]) ids.push_back(lines[i]);
    ds.lower[c] = ctx.store.hull_of_sorted(ids, Orientation::LowerHull);
    ds.upper[c] = ctx.store.hull_of_sorted(ids, Orientation::UpperHull);
  }

  const std::size_t r2 = std::size_t(r) * std::size_t(r);
  ds.group_cap = std::max<std::size_t>(1, (lines.size() + r2 - 1) / r2);
  ds.groups.assign(hc.cells.size(), {});
  for (int leaf : hc.leaves()) {
    const auto& cp = ds.cell_points[leaf];
    for (std::size_t s = 0; s < cp.size(); s += ds.group_cap)
      ds.groups[leaf].emplace_back(cp.begin() + s, cp.begin() + std::min(cp.size(), s + ds.group_cap));
  }

  ds.crossed.assign(pts.size(), {});
  for (const auto& c : hc.cells)
    for (int j : c.conflicts) ds.crossed[j].push_back(c.id);
  ds.h2_lower.assign(pts.size(), {});
  ds.h2_upper.assign(pts.size(), {});
  return ds;
}

// Solves the subproblem of every group of every leaf, keeping the resulting
// chains as vertex lists so that the arena can be unwound in between.
inline void dual_subproblems(EnvelopeContext& ctx, DualStructure& ds) {
  const auto& hc = ds.hc;
  std::unordered_map<int, int> local;
  for (int j = 0; j < int(ds.pts.size()); ++j) local.emplace(ds.pts[j], j);
  std::vector<int> sub_pts, sub_lines;
  const std::size_t point_bound = (ds.pts.size() + std::size_t(hc.r) - 1) / std::size_t(hc.r);
  for (int leaf : hc.leaves()) {
    const Cell& cell = hc.cells[leaf];
    if (cell.conflicts.empty()) continue;
    sub_pts.clear();
    for (int j : cell.conflicts) sub_pts.push_back(ds.pts[j]);
    if (sub_pts.size() > point_bound) ++ctx.stats.size_violations;
    for (const auto& g : ds.groups[leaf]) {
      sub_lines.clear();
      for (int i : g) sub_lines.push_back(ds.lines[i]);
      const std::size_t mark = ctx.store.checkpoint();
      ctx.recurse(sub_pts, sub_lines, [&](int p, const HullChain& b, const HullChain& a) {
        const int j = local.at(p);
        if (!b.empty()) ds.h2_lower[j].push_back(ctx.store.vertices(b));
        if (!a.empty()) ds.h2_upper[j].push_back(ctx.store.vertices(a));
      });
      ctx.store.rollback(mark);
    }
  }
}

// Cell hulls on both sides of p*: cells above p* give lower chains, cells
// below it upper chains. Subproblem chains of crossed leaves are rebuilt in
// the arena.
struct HullSets {
  std::vector<HullChain> above, below;
};

inline HullSets gather_hull_sets(ChainStore& store, const DualStructure& ds, int j) {
  HullSets out;
  const auto& hc = ds.hc;
  const Line& ps = ds.dual_lines[j];
  const ApproxLine& pa = ds.approx_dual[j];
  const auto& crossed = ds.crossed[j];
  auto take = [&](int c) {
    const int s = detail::cell_side(hc.cells[c], ps, pa);
    const HullChain& h = s > 0 ? ds.lower[c] : ds.upper[c];
    if (!h.empty()) (s > 0 ? out.above : out.below).push_back(h);
  };
  if (crossed.empty()) {
    take(0);
    return out;
  }
  for (int c : crossed)
    for (int ch : hc.cells[c].children)
      if (!std::binary_search(crossed.begin(), crossed.end(), ch)) take(ch);
  for (const auto& vs : ds.h2_lower[j]) out.above.push_back(store.from_vertices(vs, Orientation::LowerHull));
  for (const auto& vs : ds.h2_upper[j]) out.below.push_back(store.from_vertices(vs, Orientation::UpperHull));
  return out;
}

// Hull of the union of pairwise disjoint chains of one orientation: the
// envelope of their end-to-end chords says which chain owns each x-range.
inline HullChain assemble_hull(ChainStore& store, const std::vector<HullChain>& hulls, Orientation o,
                               std::size_t* piece_count = nullptr) {
  if (piece_count) *piece_count = hulls.size();
  if (hulls.empty()) return HullChain{-1, o};
  if (hulls.size() == 1) return hulls[0];
  const bool flip = o == Orientation::UpperHull;
  std::vector<Segment> segs;
  segs.reserve(hulls.size());
  for (int i = 0; i < int(hulls.size()); ++i) {
    Point a = store.point(store.first(hulls[i])), b = store.point(store.last(hulls[i]));
    if (flip) {
      a.y = -a.y;
      b.y = -b.y;
    }
    segs.push_back({a, b, i});
  }
  auto pieces = disjoint_segment_lower_envelope(segs);
  if (piece_count) *piece_count = pieces.size();
  // Small pieces are clipped by hand and batched into one scan; large ones
  // are cut out of their trees and joined by tangents.
  constexpr int kSmall = 16;
  HullChain acc{-1, o};
  std::vector<int> pending, scanned;
  auto flush = [&] {
    if (pending.empty()) return;
    store.hull_scan(pending, o, scanned);
    acc = store.join_separated(acc, store.from_vertices(scanned, o));
    pending.clear();
  };
  for (const auto& pc : pieces) {
    const HullChain& h = hulls[pc.id];
    if (store.size(h) <= kSmall) {
      const std::size_t from = pending.size();
      store.append_range(h, 0, store.size(h), pending);
      auto outside = [&](int v) {
        const Coord& x = store.point(v).x;
        return cmp(x, pc.x0) < 0 || cmp(x, pc.x1) > 0;
      };
      pending.erase(std::remove_if(pending.begin() + std::ptrdiff_t(from), pending.end(), outside), pending.end());
      continue;
    }
    flush();
    HullChain c = store.split_if(h, [&](int v) { return cmp(store.point(v).x, pc.x0) < 0; }).second;
    c = store.split_if(c, [&](int v) { return cmp(store.point(v).x, pc.x1) <= 0; }).first;
    acc = store.join_separated(acc, c);
  }
  flush();
  return acc;
}

// One level of the dual recursion.
inline void dual_step(EnvelopeContext& ctx, const std::vector<int>& pts, const std::vector<int>& lines, int r,
                      const EnvelopeSink& sink, CuttingParams params = {}) {
  ++ctx.stats.dual_steps;
  r = std::clamp(r, 2, std::max(2, int(pts.size())));
  const std::size_t mark = ctx.store.checkpoint();
  DualStructure ds = dual_preprocess(ctx, pts, lines, r, params);
  dual_subproblems(ctx, ds);
  for (int j = 0; j < int(pts.size()); ++j) {
    const std::size_t pm = ctx.store.checkpoint();
    auto [up, dn] = gather_hull_sets(ctx.store, ds, j);
    ctx.stats.hull_set_total += std::int64_t(up.size() + dn.size());
    std::size_t pieces = 0;
    HullChain b = assemble_hull(ctx.store, up, Orientation::LowerHull, &pieces);
    if (up.size() > 0 && pieces > 2 * up.size() - 1) ++ctx.stats.size_violations;
    HullChain a = assemble_hull(ctx.store, dn, Orientation::UpperHull, &pieces);
    if (dn.size() > 0 && pieces > 2 * dn.size() - 1) ++ctx.stats.size_violations;
    sink(pts[j], b, a);
    ctx.store.rollback(pm);
  }
  ctx.store.rollback(mark);
}

}  // namespace manyfaces
