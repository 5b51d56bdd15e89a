#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "manyfaces/face.hpp"
#include "manyfaces/normalize.hpp"

namespace manyfaces {

// Instance files:
//
//   lines N points M
//   a b        N rows, y = a x + b; a row `v c` is the vertical line x = c
//   x y        M rows
//
// Numbers are integers or p/q. Blank lines and text after '#' are ignored.

class ParseError : public GeomError {
 public:
  ParseError(int line, const std::string& what)
      : GeomError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline Coord parse_coord(const std::string& tok, int line) {
  try {
    return Coord::parse(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "bad number '" + tok + "'");
  }
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

inline int parse_count(const std::string& tok, int line) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
  }
  if (used != tok.size() || v < 0 || v > (1LL << 30)) throw ParseError(line, "bad count '" + tok + "'");
  return int(v);
}

}  // namespace detail

inline RawInstance parse_instance(std::istream& is) {
  RawInstance out;
  int lineno = 0, n = -1, m = -1;
  std::string text;
  while (std::getline(is, text)) {
    ++lineno;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    auto tok = detail::split_ws(text);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 4 || tok[0] != "lines" || tok[2] != "points")
        throw ParseError(lineno, "expected header 'lines N points M'");
      n = detail::parse_count(tok[1], lineno);
      m = detail::parse_count(tok[3], lineno);
      continue;
    }
    if (tok.size() != 2) throw ParseError(lineno, "expected two fields");
    if (int(out.lines.size()) < n) {
      if (tok[0] == "v") out.lines.push_back(RawLine::vert(detail::parse_coord(tok[1], lineno)));
      else out.lines.push_back(RawLine::slope(detail::parse_coord(tok[0], lineno), detail::parse_coord(tok[1], lineno)));
    } else if (int(out.points.size()) < m) {
      out.points.push_back(Point{detail::parse_coord(tok[0], lineno), detail::parse_coord(tok[1], lineno)});
    } else {
      throw GeomError(ErrorCode::CountMismatch, "line " + std::to_string(lineno) + ": more rows than the header declares");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (int(out.lines.size()) != n || int(out.points.size()) != m)
    throw GeomError(ErrorCode::CountMismatch, "header declares " + std::to_string(n) + " lines and " +
                                                  std::to_string(m) + " points, file has " +
                                                  std::to_string(out.lines.size()) + " and " +
                                                  std::to_string(out.points.size()));
  return out;
}

inline RawInstance parse_instance_string(const std::string& s) {
  std::istringstream is(s);
  return parse_instance(is);
}

inline RawInstance parse_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GeomError(ErrorCode::IoError, "cannot read " + path);
  return parse_instance(f);
}

inline void write_instance(std::ostream& os, const RawInstance& in) {
  os << "lines " << in.lines.size() << " points " << in.points.size() << "\n";
  for (const auto& l : in.lines) {
    if (l.vertical) os << "v " << l.c << "\n";
    else os << l.a << " " << l.b << "\n";
  }
  for (const auto& p : in.points) os << p.x << " " << p.y << "\n";
}

inline void write_instance(std::ostream& os, const Instance& in) { write_instance(os, to_raw(in)); }

inline std::string instance_to_string(const RawInstance& in) {
  std::ostringstream os;
  write_instance(os, in);
  return os.str();
}

// One face per line: key, vertices, witnesses.
inline void write_faces(std::ostream& os, const FaceSet& fs) {
  for (const auto& [key, e] : fs.faces) {
    os << key_string(key) << " |";
    for (const auto& v : e.face.vertices) os << " (" << v.x << "," << v.y << ")";
    os << " |";
    for (int w : e.witnesses) os << " " << w;
    os << "\n";
  }
}

}  // namespace manyfaces
