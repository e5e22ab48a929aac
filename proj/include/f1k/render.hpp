#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"

namespace f1k {

// DOT digraph mirroring Gamma_M: vertices named by element index, one edge
// per successor arrow. Output is byte-identical across runs.
inline std::string render_dot(const TModule& m) {
  std::ostringstream out;
  out << "digraph tmod {\n";
  for (int i = 1; i <= m.dim(); ++i) out << "  " << i << ";\n";
  for (int i = 1; i <= m.dim(); ++i)
    if (m.succ(i) != 0) out << "  " << i << " -> " << m.succ(i) << ";\n";
  out << "}\n";
  return out.str();
}

// DOT of the shape's action graph: one node per point, one arrow per
// generator step that stays inside the shape.
inline std::string render_dot(const SkewShape& s) {
  std::ostringstream out;
  out << "digraph skew {\n";
  for (const auto& p : s.points()) out << "  \"" << point_str(p) << "\";\n";
  for (const auto& p : s.points())
    for (int i = 0; i < s.n(); ++i) {
      Point q = p;
      ++q[i];
      if (s.contains(q)) out << "  \"" << point_str(p) << "\" -> \"" << point_str(q) << "\";\n";
    }
  out << "}\n";
  return out.str();
}

// 2-D shapes only: rows top to bottom in decreasing y, '#' for cells and '.'
// for gaps. F1K_COLOR=1 highlights cells with ANSI green.
inline std::string render_ascii(const SkewShape& s) {
  if (s.n() != 2) fail(ErrorCode::bad_dimension, "ASCII rendering is limited to 2-dimensional shapes");
  if (s.empty()) return "";
  const char* env = std::getenv("F1K_COLOR");
  const bool color = env != nullptr && std::string(env) == "1";
  const Point lo = s.min_corner(), hi = s.max_corner();
  std::ostringstream out;
  for (int y = hi[1]; y >= lo[1]; --y) {
    for (int x = lo[0]; x <= hi[0]; ++x) {
      if (s.contains(Point{x, y}))
        out << (color ? "\x1b[32m#\x1b[0m" : "#");
      else
        out << '.';
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace f1k
