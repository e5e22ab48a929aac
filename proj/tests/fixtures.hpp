#pragma once

#include <vector>

#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"

namespace fixtures {

using f1k::Point;
using f1k::SkewShape;
using f1k::TModule;

// path 1 -> 2 -> ... -> n -> 0
inline TModule ladder(int n) {
  std::vector<int> succ(n);
  for (int i = 1; i <= n; ++i) succ[i - 1] = i == n ? 0 : i + 1;
  return TModule(std::move(succ));
}

// 1 -> 2 -> ... -> n -> 1
inline TModule pure_cycle(int n) {
  std::vector<int> succ(n);
  for (int i = 1; i <= n; ++i) succ[i - 1] = i == n ? 1 : i + 1;
  return TModule(std::move(succ));
}

// height-2 tree on 4 elements: two leaves -> middle -> root
inline TModule tree4() { return TModule({3, 3, 4, 0}); }

// star on 3 elements: two leaves -> root
inline TModule star3() { return TModule({3, 3, 0}); }

// wheel on 3 elements: 2-cycle {1,2} with 3 hanging off 2
inline TModule wheel3() { return TModule({2, 1, 2}); }

// wheel on 4 elements: 2-cycle {1,2} with 3 and 4 hanging off 2
inline TModule wheel4() { return TModule({2, 1, 2, 2}); }

// wheel on 4 elements: 3-cycle {1,2,3} with 4 hanging off 1
inline TModule wheel4_cycle3() { return TModule({2, 3, 1, 1}); }

// the 10-vertex worked example: chain 1->2->3 into the 4-cycle {4,5,6,7},
// with 9 -> 8 -> 6 and 10 -> 8 hanging off the cycle
inline TModule ten_vertex() { return TModule({2, 3, 4, 5, 6, 7, 4, 6, 8, 8}); }

// same picture with the 8 -> 6 edge dropped, leaving two components
inline TModule ten_vertex_split() { return TModule({2, 3, 4, 5, 6, 7, 4, 0, 8, 8}); }

inline SkewShape shape(int n, std::vector<Point> pts) { return SkewShape::validate(n, std::move(pts)); }

// the two tetrominoes of the worked product example
inline SkewShape tetromino_s() { return shape(2, {{0, 1}, {1, 1}, {2, 1}, {2, 0}}); }
inline SkewShape tetromino_t() { return shape(2, {{0, 0}, {1, 0}, {0, 1}, {0, 2}}); }

// the connected staircase example shape
inline SkewShape staircase() { return shape(2, {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {0, 2}}); }

inline SkewShape cell2() { return shape(2, {{0, 0}}); }
inline SkewShape hdomino() { return shape(2, {{0, 0}, {1, 0}}); }
inline SkewShape vdomino() { return shape(2, {{0, 0}, {0, 1}}); }

}  // namespace fixtures
