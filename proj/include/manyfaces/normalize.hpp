#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "manyfaces/geometry.hpp"

namespace manyfaces {

// A raw input line: either y = a*x + b or, when vertical, x = c.
struct RawLine {
  bool vertical = false;
  Coord a, b;
  Coord c;

  static RawLine slope(Coord a, Coord b) { return RawLine{false, std::move(a), std::move(b), Coord()}; }
  static RawLine vert(Coord c) { return RawLine{true, Coord(), Coord(), std::move(c)}; }
  friend bool operator==(const RawLine&, const RawLine&) = default;
};

struct RawInstance {
  std::vector<Point> points;
  std::vector<RawLine> lines;
};

enum class Policy { Reject, Perturb };

struct NormalizeReport {
  int duplicates_removed = 0;
  int vertical_lines = 0;
  std::optional<Coord> shear;    // delta in x' = x + delta*y
  std::optional<Coord> epsilon;  // displacement (eps, eps^2) for on-line points
  std::vector<int> perturbed_points;
  // For every kept line, the index it had in the raw input.
  std::vector<int> line_origin;

  bool clean() const { return duplicates_removed == 0 && vertical_lines == 0 && perturbed_points.empty(); }
};

struct Normalized {
  Instance instance;
  NormalizeReport report;
};

inline RawInstance to_raw(const Instance& in) {
  RawInstance r;
  r.points = in.points;
  for (const auto& l : in.lines) r.lines.push_back(RawLine::slope(l.a, l.b));
  return r;
}

namespace detail {

inline std::pair<std::string, std::string> line_sort_key(const RawLine& l) {
  if (l.vertical) return {"v", l.c.str()};
  return {l.a.str(), l.b.str()};
}

}  // namespace detail

inline Normalized normalize_instance(const RawInstance& raw, Policy policy) {
  if (raw.points.empty() && raw.lines.empty()) throw GeomError(ErrorCode::EmptyInput, "instance has no points and no lines");
  Normalized out;
  NormalizeReport& rep = out.report;

  std::vector<int> kept;
  {
    std::set<std::pair<std::string, std::string>> seen;
    for (int i = 0; i < int(raw.lines.size()); ++i) {
      if (!seen.insert(detail::line_sort_key(raw.lines[i])).second) {
        ++rep.duplicates_removed;
        continue;
      }
      kept.push_back(i);
    }
  }

  std::vector<Point> pts = raw.points;
  for (int i : kept) rep.vertical_lines += raw.lines[i].vertical ? 1 : 0;

  std::vector<Line> lines;
  if (rep.vertical_lines > 0) {
    // delta = 1/(M+1) with M >= every |slope| keeps 1 + a*delta > 0.
    Coord m(0);
    for (int i : kept) {
      if (raw.lines[i].vertical) continue;
      Coord a = raw.lines[i].a.sign() < 0 ? -raw.lines[i].a : raw.lines[i].a;
      if (a > m) m = a;
    }
    mpz_class ceil_m = m.to_mpq().get_num() / m.to_mpq().get_den() + 1;
    Coord delta = Coord(1) / (Coord(mpq_class(ceil_m)) + Coord(1));
    rep.shear = delta;
    for (int i : kept) {
      const RawLine& l = raw.lines[i];
      if (l.vertical) {
        lines.push_back(Line{Coord(1) / delta, -l.c / delta});
      } else {
        Coord k = Coord(1) + l.a * delta;
        lines.push_back(Line{l.a / k, l.b / k});
      }
    }
    for (auto& p : pts) p.x = p.x + delta * p.y;
  } else {
    for (int i : kept) lines.push_back(Line{raw.lines[i].a, raw.lines[i].b});
  }
  rep.line_origin = kept;

  std::vector<std::pair<int, int>> on_line;
  for (int pi = 0; pi < int(pts.size()); ++pi)
    for (int li = 0; li < int(lines.size()); ++li)
      if (side_sign(pts[pi], lines[li]) == 0) on_line.emplace_back(pi, li);

  if (!on_line.empty()) {
    if (policy == Policy::Reject) {
      const auto& [pi, li] = on_line.front();
      throw GeomError(ErrorCode::PointOnLine, "point " + std::to_string(pi) + " lies on line " +
                                                  std::to_string(kept[li]) + " (" +
                                                  std::to_string(on_line.size()) + " incidences)");
    }
    // Smallest positive squared distance from any point to any line.
    std::optional<Coord> dmin2;
    for (int pi = 0; pi < int(pts.size()); ++pi)
      for (const auto& l : lines) {
        Coord v = pts[pi].y - l.at(pts[pi].x);
        if (v.is_zero()) continue;
        Coord d2 = v * v / (Coord(1) + l.a * l.a);
        if (!dmin2 || d2 < *dmin2) dmin2 = d2;
      }
    Coord eps(1);
    auto collides = [&](const Coord& e) {
      for (const auto& l : lines)
        if (l.a == e) return true;
      return false;
    };
    while ((dmin2 && Coord(16) * eps * eps >= *dmin2) || collides(eps)) eps = eps / Coord(2);
    rep.epsilon = eps;
    std::set<int> moved;
    for (const auto& [pi, li] : on_line) moved.insert(pi);
    for (int pi : moved) {
      pts[pi].x = pts[pi].x + eps;
      pts[pi].y = pts[pi].y + eps * eps;
      rep.perturbed_points.push_back(pi);
    }
  }

  out.instance.points = std::move(pts);
  out.instance.lines = std::move(lines);
  return out;
}

inline Normalized normalize_instance(const Instance& in, Policy policy) { return normalize_instance(to_raw(in), policy); }

// Returns an empty string when the instance satisfies every invariant.
inline std::string validate_instance(const Instance& in) {
  std::set<std::pair<std::string, std::string>> seen;
  for (int i = 0; i < int(in.lines.size()); ++i)
    if (!seen.insert({in.lines[i].a.str(), in.lines[i].b.str()}).second) return "duplicate line " + std::to_string(i);
  for (int pi = 0; pi < int(in.points.size()); ++pi)
    for (int li = 0; li < int(in.lines.size()); ++li)
      if (side_sign(in.points[pi], in.lines[li]) == 0)
        return "point " + std::to_string(pi) + " on line " + std::to_string(li);
  return {};
}

}  // namespace manyfaces
