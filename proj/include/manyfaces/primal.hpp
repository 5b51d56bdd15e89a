#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "manyfaces/cutting.hpp"
#include "manyfaces/envelopes.hpp"

namespace manyfaces {

// Per cell: the lines of the parent's conflict list lying wholly below (or
// above) the cell, and the chains of every line below (above) the cell.
struct CellEnvelopes {
  std::vector<std::vector<int>> below_sets, above_sets;  // local line ids, ascending
  std::vector<HullChain> below, above;
};

// side = +1: lines below the cell; side = -1: lines above it. Filtering the
// parent's ascending conflict list keeps every result in slope order.
inline std::vector<std::vector<int>> compute_below_sets(const HierarchicalCutting& hc, const std::vector<Line>& lines,
                                                        int side = +1) {
  std::vector<std::vector<int>> out(hc.cells.size());
  std::vector<ApproxLine> al;
  al.reserve(lines.size());
  for (const auto& l : lines) al.push_back(approx(l));
  for (const auto& c : hc.cells) {
    if (c.parent < 0) continue;
    for (int l : hc.cells[c.parent].conflicts)
      if (detail::cell_side(c, lines[l], al[l]) == side) out[c.id].push_back(l);
  }
  return out;
}

// `global[i]` is the dual vertex id of local line i; it must be ascending.
inline CellEnvelopes cell_envelopes_topdown(ChainStore& store, const HierarchicalCutting& hc,
                                            const std::vector<Line>& lines, const std::vector<int>& global) {
  CellEnvelopes ce;
  ce.below_sets = compute_below_sets(hc, lines, +1);
  ce.above_sets = compute_below_sets(hc, lines, -1);
  ce.below.assign(hc.cells.size(), HullChain{-1, Orientation::LowerHull});
  ce.above.assign(hc.cells.size(), HullChain{-1, Orientation::UpperHull});
  std::vector<int> ids;
  auto hull = [&](const std::vector<int>& local, Orientation o) {
    ids.clear();
    for (int l : local) ids.push_back(global[l]);
    return store.hull_of_sorted(ids, o);
  };
  ce.below[0] = hull(hc.below_root, Orientation::LowerHull);
  ce.above[0] = hull(hc.above_root, Orientation::UpperHull);
  // Cells are stored parents first.
  for (const auto& c : hc.cells) {
    if (c.parent < 0) continue;
    const Cell& par = hc.cells[c.parent];
    std::vector<Point> sep(std::begin(par.v), std::end(par.v));
    ce.below[c.id] = store.merge_bounded_crossings(ce.below[c.parent], hull(ce.below_sets[c.id], Orientation::LowerHull), sep);
    ce.above[c.id] = store.merge_bounded_crossings(ce.above[c.parent], hull(ce.above_sets[c.id], Orientation::UpperHull), sep);
  }
  return ce;
}

struct PointAssignment {
  std::vector<int> leaf;  // per point (local index), its leaf cell
  // Per leaf cell id, groups of local point indices.
  std::vector<std::vector<std::vector<int>>> groups;
  int group_cap = 1;
  std::size_t group_count = 0;
};

inline PointAssignment assign_points(const HierarchicalCutting& hc, const std::vector<Point>& pts, int r) {
  PointAssignment pa;
  const std::int64_t m = std::int64_t(pts.size());
  const std::int64_t r2 = std::int64_t(r) * r;
  pa.group_cap = int(std::max<std::int64_t>(1, (m + r2 - 1) / r2));
  pa.leaf.assign(pts.size(), -1);
  pa.groups.assign(hc.cells.size(), {});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto path = locate_cell_path(hc, pts[i]);
    if (path.empty() || hc.cells[path.back()].level != hc.k)
      throw GeomError(ErrorCode::PreconditionViolated, "point outside the cutting");
    const int leaf = path.back();
    pa.leaf[i] = leaf;
    auto& g = pa.groups[leaf];
    if (g.empty() || int(g.back().size()) == pa.group_cap) {
      g.emplace_back();
      ++pa.group_count;
    }
    g.back().push_back(int(i));
  }
  return pa;
}

// Merges a cell's cumulative chain with the chain of the cell's conflict
// lines on the same side of p; the cell's own corners separate the two.
inline HullChain point_upper_envelope(ChainStore& store, const HullChain& cumulative, const HullChain& local,
                                      const Cell& leaf) {
  std::vector<Point> sep(std::begin(leaf.v), std::end(leaf.v));
  return store.merge_bounded_crossings(cumulative, local, sep);
}

inline int primal_default_r(std::size_t m, std::size_t n) {
  if (m > n && n > 0) return int(std::ceil(double(m) / double(n)));
  return int(std::ceil(std::cbrt(double(n))));
}

// One level of the cutting recursion: envelopes of the lines not crossing a
// point's leaf come from the cell chains; the rest from the subproblems.
inline void primal_step(EnvelopeContext& ctx, const std::vector<int>& pts, const std::vector<int>& lines, int r,
                        const EnvelopeSink& sink, CuttingParams params = {}) {
  ++ctx.stats.primal_steps;
  r = std::clamp(r, 2, std::max(2, int(lines.size())));
  ChainStore& store = ctx.store;
  const std::size_t mark = store.checkpoint();
  const std::vector<Line> local = ctx.subset(lines);
  const std::vector<Point> sites = ctx.point_subset(pts);
  params.seed = ctx.seed + std::uint64_t(ctx.stats.primal_steps);
  HierarchicalCutting hc = build_hierarchical(local, r, sites, params);
  CellEnvelopes ce = cell_envelopes_topdown(store, hc, local, lines);
  PointAssignment pa = assign_points(hc, sites, r);

  const std::size_t line_bound = lines.size() / std::size_t(r);
  std::vector<int> sub_lines, sub_pts;
  for (int leaf : hc.leaves()) {
    const Cell& cell = hc.cells[leaf];
    sub_lines.clear();
    for (int l : cell.conflicts) sub_lines.push_back(lines[l]);
    if (sub_lines.size() > line_bound) ++ctx.stats.size_violations;
    for (const auto& group : pa.groups[leaf]) {
      sub_pts.clear();
      for (int i : group) sub_pts.push_back(pts[i]);
      const std::size_t sub_mark = store.checkpoint();
      ctx.recurse(sub_pts, sub_lines, [&](int p, const HullChain& b, const HullChain& a) {
        const std::size_t m2 = store.checkpoint();
        HullChain B = point_upper_envelope(store, ce.below[leaf], b, cell);
        HullChain A = point_upper_envelope(store, ce.above[leaf], a, cell);
        sink(p, B, A);
        store.rollback(m2);
      });
      store.rollback(sub_mark);
    }
  }
  store.rollback(mark);
}

}  // namespace manyfaces
