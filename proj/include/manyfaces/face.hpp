#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "manyfaces/geometry.hpp"

namespace manyfaces {

// One boundary edge of a face: the supporting line and the side of that line
// the face lies on.
struct BoundEdge {
  int line = -1;
  bool above = false;
  friend auto operator<=>(const BoundEdge&, const BoundEdge&) = default;
};

using FaceKey = std::vector<BoundEdge>;

struct Face {
  // Counterclockwise, rotated so that edges == key.
  std::vector<BoundEdge> edges;
  // gaps[i]: edges[i] and edges[i+1] do not meet (the boundary runs off to
  // infinity in between).
  std::vector<bool> gaps;
  std::vector<Point> vertices;
  bool bounded = false;
  FaceKey key;
};

inline FaceKey canonical_face_key(const std::vector<BoundEdge>& cycle) {
  const std::size_t n = cycle.size();
  if (n == 0) return {};
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = cycle[(s + k) % n];
      const auto& b = cycle[(best + k) % n];
      if (a < b) {
        best = s;
        break;
      }
      if (b < a) break;
    }
  }
  FaceKey key(n);
  for (std::size_t k = 0; k < n; ++k) key[k] = cycle[(best + k) % n];
  return key;
}

inline FaceKey canonical_face_key(const Face& f) { return canonical_face_key(f.edges); }

// Builds a face from a counterclockwise edge cycle over `lines`. When `remap`
// is non-empty the reported line indices are remap[id].
inline Face make_face(const std::vector<BoundEdge>& cycle, const std::vector<bool>& gaps,
                      const std::vector<Line>& lines, const std::vector<int>& remap = {}) {
  Face f;
  const std::size_t n = cycle.size();
  std::vector<BoundEdge> out(cycle);
  if (!remap.empty())
    for (auto& e : out) e.line = remap[e.line];
  f.key = canonical_face_key(out);
  std::size_t start = 0;
  for (std::size_t s = 0; s < n; ++s) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k) match = out[(s + k) % n] == f.key[k];
    if (match) {
      start = s;
      break;
    }
  }
  f.edges = f.key;
  f.gaps.resize(n);
  f.bounded = n > 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = (start + k) % n;
    f.gaps[k] = gaps[i];
    if (gaps[i]) {
      f.bounded = false;
      continue;
    }
    auto v = line_intersection(lines[cycle[i].line], lines[cycle[(i + 1) % n].line]);
    if (v) f.vertices.push_back(*v);
  }
  return f;
}

// Unsigned convenience form used when sides are irrelevant.
inline std::vector<int> canonical_index_cycle(const std::vector<int>& cycle) {
  std::vector<BoundEdge> e;
  for (int i : cycle) e.push_back({i, false});
  std::vector<int> out;
  for (const auto& b : canonical_face_key(e)) out.push_back(b.line);
  return out;
}

inline std::string key_string(const FaceKey& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ' ';
    s += (k[i].above ? '+' : '-');
    s += std::to_string(k[i].line);
  }
  return s.empty() ? std::string("plane") : s;
}

struct FaceSet {
  struct Entry {
    Face face;
    std::vector<int> witnesses;  // sorted point indices
  };
  std::map<FaceKey, Entry> faces;

  std::size_t size() const { return faces.size(); }

  std::size_t total_complexity() const {
    std::size_t t = 0;
    for (const auto& [k, e] : faces) t += e.face.edges.size();
    return t;
  }

  // Face index for every point; -1 if missing.
  std::vector<int> partition(std::size_t m) const {
    std::vector<int> part(m, -1);
    int id = 0;
    for (const auto& [k, e] : faces) {
      for (int w : e.witnesses)
        if (w >= 0 && std::size_t(w) < m) part[w] = id;
      ++id;
    }
    return part;
  }
};

inline bool same_faces(const FaceSet& a, const FaceSet& b) {
  if (a.faces.size() != b.faces.size()) return false;
  auto ia = a.faces.begin();
  auto ib = b.faces.begin();
  for (; ia != a.faces.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.witnesses != ib->second.witnesses) return false;
  }
  return true;
}

struct PointFace {
  int point = -1;
  Face face;
};

inline FaceSet dedup_faces(std::vector<PointFace> per_point) {
  FaceSet fs;
  for (auto& pf : per_point) {
    if (pf.face.key.empty() && !pf.face.edges.empty()) pf.face.key = canonical_face_key(pf.face);
    auto it = fs.faces.find(pf.face.key);
    if (it == fs.faces.end()) {
      FaceKey k = pf.face.key;
      it = fs.faces.emplace(std::move(k), FaceSet::Entry{std::move(pf.face), {}}).first;
    }
    it->second.witnesses.push_back(pf.point);
  }
  for (auto& [k, e] : fs.faces) std::sort(e.witnesses.begin(), e.witnesses.end());
  return fs;
}

inline std::string format_face_line(const FaceSet::Entry& e) {
  std::ostringstream os;
  os << "key=[" << key_string(e.face.key) << "] " << (e.face.bounded ? "bounded" : "unbounded") << " vertices=[";
  for (std::size_t i = 0; i < e.face.vertices.size(); ++i) os << (i ? " " : "") << e.face.vertices[i];
  os << "] witnesses=[";
  for (std::size_t i = 0; i < e.witnesses.size(); ++i) os << (i ? " " : "") << e.witnesses[i];
  os << "]";
  return os.str();
}

}  // namespace manyfaces
