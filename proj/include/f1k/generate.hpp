#pragma once

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "f1k/ring.hpp"
#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"

namespace f1k {

// Deterministic RNG for the verification harness. Bounded draws go through
// modulo reduction so streams do not depend on the standard library's
// distribution implementations.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // uniform-ish in [0, n)
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<uint64_t>(n)); }

  // uniform-ish in [lo, hi]
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

private:
  std::mt19937_64 eng_;
};

// any functional map on 1..dim with dim in [1, max_dim]
inline TModule random_tmodule(Rng& rng, int max_dim) {
  const int d = rng.range(1, max_dim);
  std::vector<int> succ(d);
  for (int i = 0; i < d; ++i) succ[i] = rng.range(0, d);
  return TModule(std::move(succ));
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  return perm;
}

// perm[i-1] = new index of element i
inline TModule relabel(const TModule& m, const std::vector<int>& perm) {
  std::vector<int> succ(m.dim());
  for (int i = 1; i <= m.dim(); ++i) {
    const int s = m.succ(i);
    succ[perm[i - 1] - 1] = s == 0 ? 0 : perm[s - 1];
  }
  return TModule(std::move(succ));
}

// connected nilpotent module: a random parent map rooted at one vertex
inline TModule random_tree(Rng& rng, int max_dim) {
  const int d = rng.range(1, max_dim);
  std::vector<int> succ(d, 0);
  for (int i = 2; i <= d; ++i) succ[i - 1] = rng.range(1, i - 1);
  return relabel(TModule(std::move(succ)), random_permutation(rng, d));
}

// connected module with a cycle of random length plus random hanging trees
inline TModule random_wheel(Rng& rng, int max_dim) {
  const int d = rng.range(1, max_dim);
  const int cyc = rng.range(1, d);
  std::vector<int> succ(d);
  for (int i = 1; i <= cyc; ++i) succ[i - 1] = i == cyc ? 1 : i + 1;
  for (int i = cyc + 1; i <= d; ++i) succ[i - 1] = rng.range(1, i - 1);
  return relabel(TModule(std::move(succ)), random_permutation(rng, d));
}

// one weak component of a random functional map
inline TModule random_connected_tmodule(Rng& rng, int max_dim) {
  const auto comps = components(random_tmodule(rng, max_dim));
  return comps[rng.below(static_cast<int>(comps.size()))].module;
}

// Random connected convex shape with at most max_points points: sample a few
// seed points in a small box, close under pairwise box convexity until
// stable, keep one connected component. The closure fixpoint is convex by
// construction, so no rejection loop is needed for validity.
inline SkewShape random_skew_shape(Rng& rng, int n, int max_points) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const int seeds = rng.range(1, 3);
    const int side = rng.range(1, 3);
    std::set<Point> pts;
    for (int k = 0; k < seeds; ++k) {
      Point p(n);
      for (int i = 0; i < n; ++i) p[i] = rng.range(0, side);
      pts.insert(std::move(p));
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Point> snapshot(pts.begin(), pts.end());
      for (const auto& a : snapshot)
        for (const auto& b : snapshot) {
          bool leq = true;
          for (int i = 0; i < n && leq; ++i) leq = a[i] <= b[i];
          if (!leq) continue;
          Point c = a;
          while (true) {
            grew |= pts.insert(c).second;
            int axis = 0;
            while (axis < n) {
              if (c[axis] < b[axis]) {
                ++c[axis];
                break;
              }
              c[axis] = a[axis];
              ++axis;
            }
            if (axis == n) break;
          }
        }
    }
    const auto comps = skew_components(SkewShape::from_convex_points(n, {pts.begin(), pts.end()}));
    const SkewShape& pick = comps[rng.below(static_cast<int>(comps.size()))];
    if (pick.size() <= max_points) return pick;
  }
  // fall back to a single cell
  Point p(n);
  for (int i = 0; i < n; ++i) p[i] = rng.range(0, 3);
  return SkewShape::from_convex_points(n, {p});
}

// element with at most max_terms terms over small random keys
inline RingElement random_ring_element(Rng& rng, const Species& sp, int max_terms, int max_key_size) {
  RingElement out(sp);
  const int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::string key;
    if (sp.kind == Species::Kind::tmod)
      key = canonicalize(random_connected_tmodule(rng, max_key_size));
    else
      key = canonicalize_skew(random_skew_shape(rng, sp.n, max_key_size)).str();
    int c = rng.range(-3, 3);
    if (c == 0) c = 1;
    out.add_term(key, c);
  }
  return out;
}

}  // namespace f1k
