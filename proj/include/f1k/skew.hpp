#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "f1k/error.hpp"
#include "f1k/textio.hpp"

namespace f1k {

using Point = std::vector<int>;

inline std::string point_str(const Point& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

// A finite convex subposet of Z^n under the componentwise order, stored as a
// sorted point set. Convexity: a <= c <= b with a,b in S forces c in S.
class SkewShape {
public:
  // Full check: deduplicate, verify arity and pairwise box convexity.
  static SkewShape validate(int n, std::vector<Point> raw) {
    if (n < 1) fail(ErrorCode::bad_dimension, "ambient dimension must be positive");
    for (const auto& p : raw)
      if (static_cast<int>(p.size()) != n)
        fail(ErrorCode::bad_dimension, "point (" + point_str(p) + ") is not " + std::to_string(n) + "-dimensional");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    SkewShape s(n, std::move(raw));
    s.check_convex();
    return s;
  }

  // For sets already known convex (intersections, components, translates);
  // tests re-validate these.
  static SkewShape from_convex_points(int n, std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return SkewShape(n, std::move(pts));
  }

  int n() const { return n_; }
  const std::vector<Point>& points() const { return pts_; }
  bool empty() const { return pts_.empty(); }
  int size() const { return static_cast<int>(pts_.size()); }

  bool contains(const Point& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }

  Point min_corner() const { return corner(true); }
  Point max_corner() const { return corner(false); }

  SkewShape translated(const Point& t) const {
    std::vector<Point> pts = pts_;
    for (auto& p : pts)
      for (int i = 0; i < n_; ++i) p[i] += t[i];
    return SkewShape(n_, std::move(pts));  // translation preserves lex order and convexity
  }

  bool operator==(const SkewShape&) const = default;

private:
  SkewShape(int n, std::vector<Point> pts) : n_(n), pts_(std::move(pts)) {}

  Point corner(bool min) const {
    Point c = pts_.at(0);
    for (const auto& p : pts_)
      for (int i = 0; i < n_; ++i) c[i] = min ? std::min(c[i], p[i]) : std::max(c[i], p[i]);
    return c;
  }

  void check_convex() const {
    for (const auto& a : pts_)
      for (const auto& b : pts_) {
        if (a == b) continue;
        bool leq = true;
        for (int i = 0; i < n_ && leq; ++i) leq = a[i] <= b[i];
        if (!leq) continue;
        // walk the box [a,b]
        Point c = a;
        while (true) {
          if (!contains(c))
            fail(ErrorCode::not_convex, "(" + point_str(a) + ") <= (" + point_str(c) + ") <= (" + point_str(b) +
                                            ") but the middle point is missing");
          int axis = 0;
          while (axis < n_) {
            if (c[axis] < b[axis]) {
              ++c[axis];
              break;
            }
            c[axis] = a[axis];
            ++axis;
          }
          if (axis == n_) break;
        }
      }
  }

  int n_ = 0;
  std::vector<Point> pts_;
};

inline SkewShape validate_skew(int n, std::vector<Point> raw) { return SkewShape::validate(n, std::move(raw)); }

// Connected components under unit-step adjacency p ~ p +- e_i. Components of
// a convex set are convex. Ordered by smallest point.
inline std::vector<SkewShape> skew_components(const SkewShape& s) {
  std::vector<SkewShape> out;
  std::set<Point> left(s.points().begin(), s.points().end());
  while (!left.empty()) {
    std::vector<Point> comp;
    std::vector<Point> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      comp.push_back(p);
      for (int i = 0; i < s.n(); ++i)
        for (int d : {-1, 1}) {
          Point q = p;
          q[i] += d;
          auto it = left.find(q);
          if (it != left.end()) {
            left.erase(it);
            stack.push_back(q);
          }
        }
    }
    out.push_back(SkewShape::from_convex_points(s.n(), std::move(comp)));
  }
  return out;
}

inline bool is_connected_shape(const SkewShape& s) { return !s.empty() && skew_components(s).size() == 1; }

// Canonical label of a connected shape: translate so every axis has minimum
// 0, then list the points in ascending lex order. Connected shapes are
// equivalent iff they are translates, so keys coincide exactly on classes.
struct SkewKey {
  int n = 0;
  std::vector<Point> points;  // per-axis minimum 0, sorted

  std::string str() const {
    std::string out;
    for (size_t k = 0; k < points.size(); ++k) {
      if (k) out += ";";
      out += point_str(points[k]);
    }
    return out;
  }

  bool operator==(const SkewKey&) const = default;
  auto operator<=>(const SkewKey&) const = default;
};

inline SkewKey canonicalize_skew(const SkewShape& s) {
  if (s.empty()) fail(ErrorCode::empty_shape, "cannot canonicalize the empty shape");
  if (!is_connected_shape(s)) fail(ErrorCode::not_connected, "shape is not connected");
  const Point lo = s.min_corner();
  std::vector<Point> pts = s.points();
  for (auto& p : pts)
    for (int i = 0; i < s.n(); ++i) p[i] -= lo[i];
  std::sort(pts.begin(), pts.end());
  return SkewKey{s.n(), std::move(pts)};
}

// "x1,..,xn;x1,..,xn" -> shape; inverse of SkewKey::str on canonical keys
inline SkewShape realize_skew(const std::string& key, int n) {
  if (key.empty()) fail(ErrorCode::parse_error, "empty skew key");
  std::vector<Point> pts;
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t end = key.find(';', pos);
    if (end == std::string::npos) end = key.size();
    std::string tok = key.substr(pos, end - pos);
    Point p;
    size_t cpos = 0;
    while (cpos <= tok.size()) {
      size_t cend = tok.find(',', cpos);
      if (cend == std::string::npos) cend = tok.size();
      const std::string num = tok.substr(cpos, cend - cpos);
      try {
        size_t used = 0;
        p.push_back(std::stoi(num, &used));
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        fail(ErrorCode::parse_error, "bad coordinate '" + num + "' in skew key");
      }
      cpos = cend + 1;
      if (cend == tok.size()) break;
    }
    pts.push_back(std::move(p));
    pos = end + 1;
    if (end == key.size()) break;
  }
  return SkewShape::validate(n, std::move(pts));
}

// S1 cap (S2 + t); convex by the intersection lemma, so no re-check here.
inline SkewShape intersect(const SkewShape& s1, const SkewShape& s2, const Point& t) {
  if (s1.n() != s2.n()) fail(ErrorCode::bad_dimension, "shapes live in different ambient dimensions");
  if (static_cast<int>(t.size()) != s1.n()) fail(ErrorCode::bad_dimension, "translation has wrong arity");
  std::vector<Point> pts;
  for (const auto& p : s2.points()) {
    Point q = p;
    for (int i = 0; i < s1.n(); ++i) q[i] += t[i];
    if (s1.contains(q)) pts.push_back(std::move(q));
  }
  return SkewShape::from_convex_points(s1.n(), std::move(pts));
}

// The <x_1..x_n>-module M_S: elements are the points of S and x_i moves one
// step along axis i, falling off the shape to the basepoint.
class PnModule {
public:
  explicit PnModule(const SkewShape& s) : n_(s.n()), elems_(s.points()) {
    act_.assign(n_ * elems_.size(), 0);
    for (size_t k = 0; k < elems_.size(); ++k)
      for (int i = 0; i < n_; ++i) {
        Point q = elems_[k];
        ++q[i];
        auto it = std::lower_bound(elems_.begin(), elems_.end(), q);
        if (it != elems_.end() && *it == q)
          act_[i * elems_.size() + k] = static_cast<int>(it - elems_.begin()) + 1;
      }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Point>& elements() const { return elems_; }

  // x_i acting on element m (1..size); 0 is the basepoint
  int act(int axis, int m) const {
    return m == 0 ? 0 : act_.at(axis * elems_.size() + m - 1);
  }

private:
  int n_;
  std::vector<Point> elems_;
  std::vector<int> act_;
};

inline PnModule to_pn_module(const SkewShape& s) { return PnModule(s); }

// --- text format `skew v1` ----------------------------------------------
//
//   skew <n>
//   <x1> ... <xn>        (one point per line)
//
// '#' starts a comment; blank lines are ignored. Output is sorted.

inline std::string serialize_skew(const SkewShape& s) {
  std::ostringstream out;
  out << "skew " << s.n() << "\n";
  for (const auto& p : s.points()) {
    for (int i = 0; i < s.n(); ++i) out << (i ? " " : "") << p[i];
    out << "\n";
  }
  return out.str();
}

inline SkewShape parse_skew(std::istream& in) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty()) fail(ErrorCode::parse_error, "empty skew input");
  std::istringstream header(lines.front());
  std::string tag;
  int n = 0;
  if (!(header >> tag >> n) || tag != "skew") fail(ErrorCode::parse_error, "expected header 'skew <n>'");
  std::string extra;
  if (header >> extra) fail(ErrorCode::parse_error, "trailing tokens in header");
  std::vector<Point> pts;
  for (size_t k = 1; k < lines.size(); ++k) {
    std::istringstream row(lines[k]);
    Point p;
    int coord = 0;
    while (row >> coord) p.push_back(coord);
    if (!row.eof()) fail(ErrorCode::parse_error, "bad point on line " + std::to_string(k + 1));
    pts.push_back(std::move(p));
  }
  return SkewShape::validate(n, std::move(pts));
}

inline SkewShape parse_skew(const std::string& text) {
  std::istringstream in(text);
  return parse_skew(in);
}

}  // namespace f1k
