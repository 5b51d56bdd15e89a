#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "manyfaces/rational.hpp"

namespace manyfaces {

struct Point {
  Coord x, y;
  friend bool operator==(const Point&, const Point&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << "," << p.y << ")";
  }
};

// y = a*x + b
struct Line {
  Coord a, b;
  Coord at(const Coord& x) const { return a * x + b; }
  friend bool operator==(const Line&, const Line&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Line& l) {
    return os << "y=" << l.a << "x+" << l.b;
  }
};

enum class Side { Below = -1, On = 0, Above = 1 };

struct Instance {
  std::vector<Point> points;
  std::vector<Line> lines;
};

enum class ErrorCode { PointOnLine, EmptyInput, ParseError, CountMismatch, PreconditionViolated, IoError };

class GeomError : public std::runtime_error {
 public:
  GeomError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline constexpr std::int64_t kTiny = std::int64_t(1) << 30;
inline constexpr std::int64_t kHalf = std::int64_t(1) << 62;

inline bool tiny(const Rational& r) {
  return r.is_small() && std::llabs(r.small_num()) < kTiny && r.small_den() < kTiny;
}
inline bool half_int(const Rational& r) {
  return r.is_small() && r.small_den() == 1 && std::llabs(r.small_num()) < kHalf;
}

// Sign of a value computed in doubles from rounded inputs whose magnitude
// sum is `scale`, or 0 when rounding could have flipped it.
inline int filtered_sign(double v, double scale) {
  constexpr double kErr = 32 * std::numeric_limits<double>::epsilon();
  const double bound = kErr * scale;
  if (!(bound > 1e-280) || !(bound < 1e280)) return 0;
  if (v > bound) return 1;
  if (v < -bound) return -1;
  return 0;
}

}  // namespace detail

inline int orient(const Point& p, const Point& q, const Point& r) {
  using detail::i128;
  if (detail::half_int(p.x) && detail::half_int(p.y) && detail::half_int(q.x) &&
      detail::half_int(q.y) && detail::half_int(r.x) && detail::half_int(r.y)) {
    i128 ux = i128(q.x.small_num()) - p.x.small_num(), uy = i128(q.y.small_num()) - p.y.small_num();
    i128 vx = i128(r.x.small_num()) - p.x.small_num(), vy = i128(r.y.small_num()) - p.y.small_num();
    i128 d = ux * vy - uy * vx;
    return (d > 0) - (d < 0);
  }
  {
    const double px = p.x.to_double(), py = p.y.to_double(), qx = q.x.to_double(), qy = q.y.to_double();
    const double rx = r.x.to_double(), ry = r.y.to_double();
    const double d = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    const double perm = (std::fabs(qx) + std::fabs(px)) * (std::fabs(ry) + std::fabs(py)) +
                        (std::fabs(qy) + std::fabs(py)) * (std::fabs(rx) + std::fabs(px));
    if (int s = detail::filtered_sign(d, perm)) return s;
  }
  return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).sign();
}

// Sign of p.y - (a*p.x + b).
inline int side_sign(const Point& p, const Line& l) {
  using detail::i128;
  if (detail::tiny(p.x) && detail::tiny(p.y) && detail::tiny(l.a) && detail::tiny(l.b)) {
    i128 yn = p.y.small_num(), yd = p.y.small_den();
    i128 xn = p.x.small_num(), xd = p.x.small_den();
    i128 an = l.a.small_num(), ad = l.a.small_den();
    i128 bn = l.b.small_num(), bd = l.b.small_den();
    i128 v = yn * ad * xd * bd - an * xn * yd * bd - bn * yd * ad * xd;
    return (v > 0) - (v < 0);
  }
  {
    const double x = p.x.to_double(), y = p.y.to_double(), a = l.a.to_double(), b = l.b.to_double();
    const double ax = a * x;
    if (int s = detail::filtered_sign(y - ax - b, std::fabs(y) + std::fabs(ax) + std::fabs(b))) return s;
  }
  return cmp(p.y, l.at(p.x));
}

// Rounded coefficients of a line, for the filtered side test below.
struct ApproxLine {
  double a = 0, b = 0;
};
inline ApproxLine approx(const Line& l) { return {l.a.to_double(), l.b.to_double()}; }

// side_sign(p, l) given p's coordinates and l's coefficients already rounded.
inline int side_sign(const Point& p, double px, double py, const Line& l, const ApproxLine& al) {
  const double ax = al.a * px;
  if (int s = detail::filtered_sign(py - ax - al.b, std::fabs(py) + std::fabs(ax) + std::fabs(al.b))) return s;
  return side_sign(p, l);
}

// Rounded coordinates of a point. Rounding is monotone, so a strict
// inequality between rounded abscissae is exact.
struct ApproxPoint {
  double x = 0, y = 0;
};
inline ApproxPoint approx(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

inline int cmp_x(const Point& p, const ApproxPoint& pa, const Point& q, const ApproxPoint& qa) {
  if (pa.x < qa.x) return -1;
  if (pa.x > qa.x) return 1;
  return cmp(p.x, q.x);
}

// orient(p, q, r) given the rounded coordinates.
inline int orient(const Point& p, const Point& q, const Point& r, const ApproxPoint& pa, const ApproxPoint& qa,
                  const ApproxPoint& ra) {
  const double d = (qa.x - pa.x) * (ra.y - pa.y) - (qa.y - pa.y) * (ra.x - pa.x);
  const double perm = (std::fabs(qa.x) + std::fabs(pa.x)) * (std::fabs(ra.y) + std::fabs(pa.y)) +
                      (std::fabs(qa.y) + std::fabs(pa.y)) * (std::fabs(ra.x) + std::fabs(pa.x));
  if (int s = detail::filtered_sign(d, perm)) return s;
  return orient(p, q, r);
}

inline Side side_of_line(const Point& p, const Line& l) { return Side(side_sign(p, l)); }

inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  if (l1.a == l2.a) return std::nullopt;
  Coord x = (l2.b - l1.b) / (l1.a - l2.a);
  return Point{x, l1.at(x)};
}

inline Point dualize_line(const Line& l) { return Point{l.a, -l.b}; }
inline Line dualize_point(const Point& p) { return Line{p.x, -p.y}; }

// Sign of the vertex l1∩l2 relative to l3 (+1: vertex above l3). Slopes of
// l1 and l2 must differ.
inline int vertex_side(const Line& l1, const Line& l2, const Line& l3) {
  Coord n = (l3.a - l1.a) * (l2.b - l1.b) - (l3.b - l1.b) * (l2.a - l1.a);
  int s = n.sign() * cmp(l1.a, l2.a);
  return -s;
}

}  // namespace manyfaces
