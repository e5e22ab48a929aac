#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "f1k/intmat.hpp"
#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"

namespace f1k {

// Which split Grothendieck ring an element lives in: <t>-modules, or
// n-dimensional skew shapes (the ambient n is part of the species).
struct Species {
  enum class Kind { tmod, skew };

  Kind kind = Kind::tmod;
  int n = 0;

  static Species tmod() { return Species{Kind::tmod, 0}; }
  static Species skew(int n) {
    if (n < 1) fail(ErrorCode::bad_dimension, "skew species needs a positive ambient dimension");
    return Species{Kind::skew, n};
  }

  std::string str() const { return kind == Kind::tmod ? "tmod" : "skew(" + std::to_string(n) + ")"; }

  bool operator==(const Species&) const = default;
};

// Number of non-basepoint elements of the module a canonical key labels.
// Tree/wheel codes carry one '(' per vertex (plus the enclosing "W(" pair on
// wheels); skew keys one point per ';'.
inline int key_size(const Species& sp, const std::string& key) {
  if (sp.kind == Species::Kind::tmod) {
    const int parens = static_cast<int>(std::count(key.begin(), key.end(), '('));
    return key.rfind("W(", 0) == 0 ? parens - 1 : parens;
  }
  return static_cast<int>(std::count(key.begin(), key.end(), ';')) + 1;
}

// An element of the split Grothendieck ring: a finitely-supported Z-linear
// combination of canonical indecomposable keys. Zero coefficients are never
// stored.
class RingElement {
public:
  explicit RingElement(Species sp) : species_(sp) {}

  static RingElement zero(Species sp) { return RingElement(sp); }

  static RingElement term(Species sp, const std::string& key, Int coeff = 1) {
    RingElement x(sp);
    x.add_term(key, coeff);
    return x;
  }

  const Species& species() const { return species_; }
  const std::map<std::string, Int>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coeff(const std::string& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  void add_term(const std::string& key, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_species(a, b);
    RingElement out = a;
    for (const auto& [k, c] : b.coeffs_) out.add_term(k, c);
    return out;
  }

  friend RingElement operator-(const RingElement& a) {
    RingElement out(a.species_);
    for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, -c);
    return out;
  }

  friend RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

  RingElement scaled(const Int& k) const {
    RingElement out(species_);
    if (k == 0) return out;
    for (const auto& [key, c] : coeffs_) out.coeffs_.emplace(key, c * k);
    return out;
  }

  friend RingElement operator*(const RingElement& a, const RingElement& b);

  // dim extended linearly; a ring homomorphism to Z (multiplicative because
  // dim(M ^ N) = dim(M) dim(N)).
  Int dim_character() const {
    Int total = 0;
    for (const auto& [k, c] : coeffs_) total += c * key_size(species_, k);
    return total;
  }

  // Quotient by the ideal of nilpotent classes: keep only wheel keys.
  RingElement project_wheels() const {
    if (species_.kind != Species::Kind::tmod)
      fail(ErrorCode::species_mismatch, "project_wheels applies to species tmod only");
    RingElement out(species_);
    for (const auto& [k, c] : coeffs_)
      if (!k.empty() && k[0] == 'W') out.coeffs_.emplace(k, c);
    return out;
  }

  bool operator==(const RingElement&) const = default;

private:
  static void require_same_species(const RingElement& a, const RingElement& b) {
    if (!(a.species_ == b.species_))
      fail(ErrorCode::species_mismatch, a.species_.str() + " vs " + b.species_.str());
  }

  Species species_;
  std::map<std::string, Int> coeffs_;
};

// [M] as a ring element: Krull-Schmidt decomposition into components, each
// recorded under its canonical key.
inline RingElement from_module(const TModule& m) {
  RingElement out(Species::tmod());
  for (const auto& comp : components(m)) out.add_term(canonicalize(comp.module), 1);
  return out;
}

inline RingElement from_shape(const SkewShape& s) {
  RingElement out(Species::skew(s.n()));
  for (const auto& comp : skew_components(s)) out.add_term(canonicalize_skew(comp).str(), 1);
  return out;
}

// M_{S1} ^ M_{S2} = (+)_t M_{S1 cap (S2 + t)}; t runs over the Minkowski
// difference of the bounding boxes, every intersection outside it is empty.
inline RingElement skew_product(const SkewShape& s1, const SkewShape& s2) {
  if (s1.n() != s2.n()) fail(ErrorCode::bad_dimension, "shapes live in different ambient dimensions");
  RingElement out(Species::skew(s1.n()));
  if (s1.empty() || s2.empty()) return out;
  const int n = s1.n();
  Point lo(n), hi(n);
  const Point lo1 = s1.min_corner(), hi1 = s1.max_corner();
  const Point lo2 = s2.min_corner(), hi2 = s2.max_corner();
  for (int i = 0; i < n; ++i) {
    lo[i] = lo1[i] - hi2[i];
    hi[i] = hi1[i] - lo2[i];
  }
  Point t = lo;
  while (true) {
    const SkewShape inter = intersect(s1, s2, t);
    if (!inter.empty())
      for (const auto& comp : skew_components(inter)) out.add_term(canonicalize_skew(comp).str(), 1);
    int axis = 0;
    while (axis < n) {
      if (t[axis] < hi[axis]) {
        ++t[axis];
        break;
      }
      t[axis] = lo[axis];
      ++axis;
    }
    if (axis == n) break;
  }
  return out;
}

// Independent route to the same decomposition: pairs (a,b) in S1 x S2 under
// the diagonal action, connected by simultaneous unit steps; each component
// keeps a constant difference t = a - b and its a-coordinates form the shape
// S1 cap (S2 + t) piece containing it.
inline RingElement pn_smash_oracle(const SkewShape& s1, const SkewShape& s2) {
  if (s1.n() != s2.n()) fail(ErrorCode::bad_dimension, "shapes live in different ambient dimensions");
  RingElement out(Species::skew(s1.n()));
  const int n = s1.n();
  const int sz1 = s1.size(), sz2 = s2.size();
  if (sz1 == 0 || sz2 == 0) return out;

  std::vector<int> parent(sz1 * sz2);
  for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto index_of = [&](const SkewShape& s, const Point& p) {
    return static_cast<int>(std::lower_bound(s.points().begin(), s.points().end(), p) - s.points().begin());
  };
  for (int i = 0; i < sz1; ++i)
    for (int j = 0; j < sz2; ++j)
      for (int axis = 0; axis < n; ++axis) {
        Point a = s1.points()[i];
        Point b = s2.points()[j];
        ++a[axis];
        ++b[axis];
        if (s1.contains(a) && s2.contains(b)) {
          const int from = i * sz2 + j;
          const int to = index_of(s1, a) * sz2 + index_of(s2, b);
          parent[find(from)] = find(to);
        }
      }

  std::map<int, std::vector<Point>> groups;  // component root -> a-coordinates
  for (int i = 0; i < sz1; ++i)
    for (int j = 0; j < sz2; ++j) groups[find(i * sz2 + j)].push_back(s1.points()[i]);
  for (auto& [root, pts] : groups) {
    const SkewShape piece = SkewShape::from_convex_points(n, std::move(pts));
    out.add_term(canonicalize_skew(piece).str(), 1);
  }
  return out;
}

namespace detail {

// Product of two basis classes as a key multiset. Memoized: bilinear
// expansion revisits identical pairs, and the decomposition of a pair never
// changes within a session.
inline std::vector<std::pair<std::string, long long>> key_product_uncached(const Species& sp, const std::string& a,
                                                                           const std::string& b) {
  std::map<std::string, long long> acc;
  if (sp.kind == Species::Kind::tmod) {
    const TModule product = smash(realize_tmod(a), realize_tmod(b));
    for (const auto& comp : components(product)) ++acc[canonicalize(comp.module)];
  } else {
    const RingElement x = skew_product(realize_skew(a, sp.n), realize_skew(b, sp.n));
    for (const auto& [k, c] : x.terms()) acc[k] = c.convert_to<long long>();
  }
  return {acc.begin(), acc.end()};
}

inline const std::vector<std::pair<std::string, long long>>& key_product(const Species& sp, std::string a,
                                                                         std::string b) {
  using CacheKey = std::tuple<int, int, std::string, std::string>;
  static std::map<CacheKey, std::vector<std::pair<std::string, long long>>> cache;
  static std::mutex mu;
  if (b < a) std::swap(a, b);  // the product is commutative
  CacheKey ck{static_cast<int>(sp.kind), sp.n, a, b};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ck);
  if (it == cache.end()) it = cache.emplace(std::move(ck), key_product_uncached(sp, a, b)).first;
  return it->second;
}

}  // namespace detail

inline RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement::require_same_species(a, b);
  RingElement out(a.species_);
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      const Int cc = ca * cb;
      for (const auto& [key, mult] : detail::key_product(a.species_, ka, kb)) out.add_term(key, cc * mult);
    }
  return out;
}

// --- ring element serialization ------------------------------------------
//
//   <coef>\t<key>        (one term per line, keys ascending; empty = zero)

inline std::string serialize_ring(const RingElement& x) {
  std::ostringstream out;
  for (const auto& [key, c] : x.terms()) out << c.str() << "\t" << key << "\n";
  return out.str();
}

namespace detail {

inline void check_canonical_key(const Species& sp, const std::string& key) {
  if (sp.kind == Species::Kind::tmod) {
    if (canonicalize(realize_tmod(key)) != key) fail(ErrorCode::parse_error, "key is not canonical: " + key);
  } else {
    if (canonicalize_skew(realize_skew(key, sp.n)).str() != key)
      fail(ErrorCode::parse_error, "key is not canonical: " + key);
  }
}

}  // namespace detail

inline RingElement parse_ring(std::istream& in, const Species& sp) {
  RingElement out(sp);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      fail(ErrorCode::parse_error, "expected '<coef>\\t<key>' on line " + std::to_string(lineno));
    const std::string coef_str = line.substr(0, tab);
    std::string key = line.substr(tab + 1);
    while (!key.empty() && (key.back() == '\r' || key.back() == ' ')) key.pop_back();
    Int coef;
    try {
      coef = Int(coef_str);
    } catch (const std::exception&) {
      fail(ErrorCode::parse_error, "bad coefficient '" + coef_str + "' on line " + std::to_string(lineno));
    }
    detail::check_canonical_key(sp, key);
    out.add_term(key, coef);
  }
  return out;
}

inline RingElement parse_ring(const std::string& text, const Species& sp) {
  std::istringstream in(text);
  return parse_ring(in, sp);
}

}  // namespace f1k
