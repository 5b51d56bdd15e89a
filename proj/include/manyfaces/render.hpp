#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "manyfaces/face.hpp"
#include "manyfaces/geometry.hpp"

namespace manyfaces {

struct Viewport {
  double x0 = -1, y0 = -1, x1 = 1, y1 = 1;
};

// Box around the points and the finite face vertices, padded by a tenth.
inline Viewport viewport_of(const Instance& in, const FaceSet& fs) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : in.points) pts.emplace_back(p.x.to_double(), p.y.to_double());
  for (const auto& [k, e] : fs.faces)
    for (const auto& v : e.face.vertices) pts.emplace_back(v.x.to_double(), v.y.to_double());
  Viewport vp;
  if (pts.empty()) return vp;
  vp.x0 = vp.x1 = pts[0].first;
  vp.y0 = vp.y1 = pts[0].second;
  for (auto [x, y] : pts) {
    vp.x0 = std::min(vp.x0, x);
    vp.x1 = std::max(vp.x1, x);
    vp.y0 = std::min(vp.y0, y);
    vp.y1 = std::max(vp.y1, y);
  }
  const double pad = 0.1 * std::max({vp.x1 - vp.x0, vp.y1 - vp.y0, 1.0});
  vp.x0 -= pad;
  vp.x1 += pad;
  vp.y0 -= pad;
  vp.y1 += pad;
  return vp;
}

namespace detail {

using Poly = std::vector<std::pair<double, double>>;

// Keeps the part of `poly` with sign * (y - a x - b) >= 0.
inline Poly clip_halfplane(const Poly& poly, double a, double b, int sign) {
  Poly out;
  const std::size_t n = poly.size();
  auto f = [&](const std::pair<double, double>& p) { return sign * (p.second - a * p.first - b); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    const double fp = f(p), fq = f(q);
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      const double t = fp / (fp - fq);
      out.emplace_back(p.first + t * (q.first - p.first), p.second + t * (q.second - p.second));
    }
  }
  return out;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace detail

// Face regions inside the viewport, one polygon per face in key order.
inline std::vector<detail::Poly> face_polygons(const Instance& in, const FaceSet& fs, const Viewport& vp) {
  std::vector<detail::Poly> out;
  for (const auto& [k, e] : fs.faces) {
    detail::Poly poly = {{vp.x0, vp.y0}, {vp.x1, vp.y0}, {vp.x1, vp.y1}, {vp.x0, vp.y1}};
    for (const auto& be : e.face.edges) {
      const Line& l = in.lines[std::size_t(be.line)];
      poly = detail::clip_halfplane(poly, l.a.to_double(), l.b.to_double(), be.above ? 1 : -1);
      if (poly.empty()) break;
    }
    out.push_back(std::move(poly));
  }
  return out;
}

// SVG 1.1 with y pointing up. Output bytes depend only on the input.
inline std::string render_svg(const Instance& in, const FaceSet& fs) {
  const Viewport vp = viewport_of(in, fs);
  const double w = vp.x1 - vp.x0, h = vp.y1 - vp.y0;
  const double scale = 800.0 / std::max(w, h);
  auto X = [&](double x) { return detail::fmt((x - vp.x0) * scale); };
  auto Y = [&](double y) { return detail::fmt((vp.y1 - y) * scale); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fmt(w * scale)
     << "\" height=\"" << detail::fmt(h * scale) << "\">\n";
  os << "<g fill=\"#c8d8f0\" stroke=\"none\">\n";
  for (const auto& poly : face_polygons(in, fs, vp)) {
    if (poly.size() < 3) continue;
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << X(poly[i].first) << "," << Y(poly[i].second);
    os << "\"/>\n";
  }
  os << "</g>\n<g stroke=\"#333\" stroke-width=\"1\">\n";
  for (const auto& l : in.lines) {
    const double a = l.a.to_double(), b = l.b.to_double();
    os << "<line x1=\"" << X(vp.x0) << "\" y1=\"" << Y(a * vp.x0 + b) << "\" x2=\"" << X(vp.x1) << "\" y2=\""
       << Y(a * vp.x1 + b) << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#c03030\">\n";
  for (const auto& p : in.points)
    os << "<circle cx=\"" << X(p.x.to_double()) << "\" cy=\"" << Y(p.y.to_double()) << "\" r=\"3\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

inline void write_svg(const std::string& path, const Instance& in, const FaceSet& fs) {
  std::ofstream f(path);
  if (!f) throw GeomError(ErrorCode::IoError, "cannot write " + path);
  f << render_svg(in, fs);
  if (!f) throw GeomError(ErrorCode::IoError, "cannot write " + path);
}

}  // namespace manyfaces
