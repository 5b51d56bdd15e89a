#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "manyfaces/arrangement.hpp"
#include "manyfaces/dual.hpp"
#include "manyfaces/envelopes.hpp"
#include "manyfaces/normalize.hpp"
#include "manyfaces/primal.hpp"

namespace manyfaces {

enum class Backend { Naive, Primal, Dual, Combined };

inline std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Naive: return "naive";
    case Backend::Primal: return "primal";
    case Backend::Dual: return "dual";
    case Backend::Combined: return "combined";
  }
  return "?";
}

inline std::optional<Backend> parse_backend(const std::string& s) {
  for (Backend b : {Backend::Naive, Backend::Primal, Backend::Dual, Backend::Combined})
    if (backend_name(b) == s) return b;
  return std::nullopt;
}

struct SolverConfig {
  Backend backend = Backend::Combined;
  int baseN = 32, baseM = 32;
  std::optional<int> rOverride;  // applies to the top-level step
  bool check_preconditions = false;
  // Skip normalization; the caller guarantees a normalized instance.
  bool trust_input = false;
  Policy policy = Policy::Reject;
  std::uint64_t seed = 1;
};

// The four cases for m points and n lines.
enum class DispatchPath { Naive, PrimalThenCore, DualOnly, DualThenCore };

inline std::string path_name(DispatchPath p) {
  switch (p) {
    case DispatchPath::Naive: return "naive";
    case DispatchPath::PrimalThenCore: return "primal-then-core";
    case DispatchPath::DualOnly: return "dual-only";
    case DispatchPath::DualThenCore: return "dual-then-core";
  }
  return "?";
}

inline DispatchPath dispatch_path(std::size_t m, std::size_t n) {
  const double M = double(m), N = double(n);
  if (M >= N * N) return DispatchPath::Naive;
  if (N <= M) return DispatchPath::PrimalThenCore;
  if (N >= M * M) return DispatchPath::DualOnly;
  return DispatchPath::DualThenCore;
}

enum class StepKind { Brute, Primal, Dual };

struct StepChoice {
  StepKind kind = StepKind::Brute;
  int r = 1;
};

// One node of the combined recursion. m == n is the symmetric core: a dual
// step with r = n^(1/3), after which the children satisfy m' = r n' and take
// a primal step with the same r.
inline StepChoice combined_step(std::size_t m, std::size_t n) {
  switch (dispatch_path(m, n)) {
    case DispatchPath::Naive: return {StepKind::Brute, 1};
    case DispatchPath::PrimalThenCore:
      if (m == n) return {StepKind::Dual, int(std::ceil(std::cbrt(double(n))))};
      return {StepKind::Primal, int(std::ceil(double(m) / double(n)))};
    case DispatchPath::DualOnly: return {StepKind::Dual, int(m)};
    case DispatchPath::DualThenCore: return {StepKind::Dual, int(std::ceil(double(n) / double(m)))};
  }
  return {};
}

struct SolveTrace {
  DispatchPath path = DispatchPath::Naive;
  StepKind top = StepKind::Brute;
  int top_r = 1;
  std::size_t n = 0, m = 0;  // after normalization and point dedup
  RecursionStats stats;
  ChainStats chains;
  NormalizeReport normalize;
  double ms = 0;
};

struct SolveResult {
  FaceSet faces;
  SolveTrace trace;
};

inline StepChoice choose_step(const SolverConfig& cfg, std::size_t m, std::size_t n, int depth) {
  StepChoice c;
  if (m == 0 || n == 0 || n <= std::size_t(cfg.baseN) || m <= std::size_t(cfg.baseM)) return c;
  switch (cfg.backend) {
    case Backend::Naive: return c;
    case Backend::Primal: c = {StepKind::Primal, primal_default_r(m, n)}; break;
    case Backend::Dual: c = {StepKind::Dual, dual_default_r(m, n)}; break;
    case Backend::Combined: c = combined_step(m, n); break;
  }
  if (depth == 0 && cfg.rOverride && c.kind != StepKind::Brute) c.r = *cfg.rOverride;
  if (c.kind == StepKind::Primal) c.r = std::clamp(c.r, 2, std::max(2, int(n)));
  if (c.kind == StepKind::Dual) c.r = std::clamp(c.r, 2, std::max(2, int(m)));
  return c;
}

namespace detail {

// `line_origin[i]` is the input index reported for line i of `in`.
inline void solve_clean(const Instance& in, const std::vector<int>& line_origin, const SolverConfig& cfg,
                        SolveResult& res, std::chrono::steady_clock::time_point t0) {
  if (in.points.empty()) return;

  // Identical points share a face; solve each location once.
  std::vector<Point> upts;
  std::vector<std::vector<int>> point_origin;
  {
    std::map<Point, int, detail::PointLess> seen;
    for (int i = 0; i < int(in.points.size()); ++i) {
      auto [it, fresh] = seen.emplace(in.points[i], int(upts.size()));
      if (fresh) {
        upts.push_back(in.points[i]);
        point_origin.emplace_back();
      }
      point_origin[it->second].push_back(i);
    }
  }
  std::vector<int> ord = dual_order(in.lines);
  std::vector<Line> sorted;
  std::vector<int> origin;
  for (int i : ord) {
    sorted.push_back(in.lines[i]);
    origin.push_back(line_origin[i]);
  }

  const std::size_t n = sorted.size(), m = upts.size();
  EnvelopeContext ctx(std::move(sorted), std::move(upts));
  ctx.store.check_preconditions = cfg.check_preconditions;
  ctx.seed = cfg.seed;
  ctx.recurse = [&](const std::vector<int>& pts, const std::vector<int>& lines, const EnvelopeSink& sink) {
    StepChoice c = choose_step(cfg, pts.size(), lines.size(), ctx.depth);
    ++ctx.depth;
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, ctx.depth);
    switch (c.kind) {
      case StepKind::Brute: brute_envelopes(ctx, pts, lines, sink); break;
      case StepKind::Primal: primal_step(ctx, pts, lines, c.r, sink); break;
      case StepKind::Dual: dual_step(ctx, pts, lines, c.r, sink); break;
    }
    --ctx.depth;
  };

  res.trace.path = dispatch_path(m, n);
  StepChoice top = choose_step(cfg, m, n, 0);
  res.trace.top = top.kind;
  res.trace.top_r = top.r;
  res.trace.n = n;
  res.trace.m = m;

  std::vector<int> all_pts(m), all_lines(n);
  for (std::size_t i = 0; i < m; ++i) all_pts[i] = int(i);
  for (std::size_t i = 0; i < n; ++i) all_lines[i] = int(i);
  FaceCollector collect(ctx, origin);
  ctx.recurse(all_pts, all_lines, [&](int p, const HullChain& b, const HullChain& a) { collect(p, b, a); });
  res.faces = collect.result(point_origin);
  res.trace.stats = ctx.stats;
  res.trace.chains = ctx.store.stats();
  res.trace.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// Vertical lines and degeneracies are handled by normalization.
inline SolveResult solve(const RawInstance& input, const SolverConfig& cfg = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  if (input.points.empty() && input.lines.empty()) return res;
  Normalized nz = normalize_instance(input, cfg.policy);
  res.trace.normalize = nz.report;
  detail::solve_clean(nz.instance, nz.report.line_origin, cfg, res, t0);
  return res;
}

inline SolveResult solve(const Instance& input, const SolverConfig& cfg = {}) {
  if (!cfg.trust_input) return solve(to_raw(input), cfg);
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  std::vector<int> line_origin(input.lines.size());
  for (int i = 0; i < int(input.lines.size()); ++i) line_origin[i] = i;
  detail::solve_clean(input, line_origin, cfg, res, t0);
  return res;
}

inline FaceSet primal_solve(const Instance& in, SolverConfig cfg = {}) {
  cfg.backend = Backend::Primal;
  return solve(in, cfg).faces;
}

inline FaceSet dual_solve(const Instance& in, SolverConfig cfg = {}) {
  cfg.backend = Backend::Dual;
  return solve(in, cfg).faces;
}

}  // namespace manyfaces
