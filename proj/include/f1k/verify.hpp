#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "f1k/generate.hpp"
#include "f1k/jordan.hpp"
#include "f1k/render.hpp"
#include "f1k/ring.hpp"
#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"

namespace f1k {

struct PropertyResult {
  std::string name;
  int pass = 0;
  int fail = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool ok() const {
    for (const auto& p : properties)
      if (p.fail != 0) return false;
    return true;
  }
};

struct VerifyOptions {
  uint64_t seed = 1;
  int iters = 200;
  int max_size = 24;   // tmod dimension bound
  int skew_n = 3;      // skew ambient dimension bound
  int skew_points = 8; // skew shape size bound
};

namespace detail {

// One property = iters independent instances. Each property gets its own RNG
// stream so reordering properties never changes the instances they see.
inline PropertyResult run_property(const std::string& name, uint64_t seed, int iters,
                                   const std::function<std::optional<std::string>(Rng&)>& check) {
  PropertyResult res;
  res.name = name;
  uint64_t mix = 0xcbf29ce484222325ull;
  for (char ch : name) mix = (mix ^ static_cast<uint64_t>(ch)) * 0x100000001b3ull;
  Rng rng(seed ^ mix);
  for (int i = 0; i < iters; ++i) {
    auto failure = check(rng);
    if (!failure) {
      ++res.pass;
    } else {
      ++res.fail;
      if (res.first_failure.empty())
        res.first_failure = "instance " + std::to_string(i) + ": " + *failure;
    }
  }
  return res;
}

inline std::map<std::string, int> component_keys(const TModule& m) {
  std::map<std::string, int> keys;
  for (const auto& comp : components(m)) ++keys[canonicalize(comp.module)];
  return keys;
}

inline bool all_trees(const TModule& m) {
  for (const auto& comp : components(m))
    if (classify(comp.module).kind != IndecKind::Tree) return false;
  return true;
}

inline std::string describe(const TModule& m) {
  std::string s = "tmod[";
  for (int i = 1; i <= m.dim(); ++i) s += (i > 1 ? "," : "") + std::to_string(m.succ(i));
  return s + "]";
}

}  // namespace detail

inline SuiteReport verify_tmod(const VerifyOptions& opt) {
  SuiteReport report{"tmod", {}};
  const int dim_cap = std::max(2, opt.max_size);
  const int small_cap = std::max(2, dim_cap / 3);

  report.properties.push_back(detail::run_property(
      "dim-multiplicativity", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_tmodule(rng, small_cap), b = random_tmodule(rng, small_cap);
        if (smash(a, b).dim() != a.dim() * b.dim()) return "dim(smash) != dim*dim";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "nilpotence-law", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_tmodule(rng, small_cap), b = random_tmodule(rng, small_cap);
        const bool expect = detail::all_trees(a) || detail::all_trees(b);
        if (detail::all_trees(smash(a, b)) != expect)
          return detail::describe(a) + " ^ " + detail::describe(b) + " breaks the nilpotence law";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "depth-law", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_tree(rng, small_cap);
        const bool other_tree = rng.below(2) == 0;
        const TModule b = other_tree ? random_tree(rng, small_cap) : random_wheel(rng, small_cap);
        const TModule p = smash(a, b);
        for (int m = 1; m <= a.dim(); ++m)
          for (int n = 1; n <= b.dim(); ++n) {
            const int got = depth(p, smash_index(m, n, b.dim()));
            const int want = other_tree ? std::min(depth(a, m), depth(b, n)) : depth(a, m);
            if (got != want)
              return "depth((" + std::to_string(m) + "," + std::to_string(n) + ")) = " + std::to_string(got) +
                     ", expected " + std::to_string(want);
          }
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "tree-tree-components", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_tree(rng, small_cap), b = random_tree(rng, small_cap);
        const auto comps = components(smash(a, b));
        if (static_cast<int>(comps.size()) != a.dim() + b.dim() - 1)
          return "expected " + std::to_string(a.dim() + b.dim() - 1) + " components, got " +
                 std::to_string(comps.size());
        const int bound = std::min(classify(a).height, classify(b).height);
        for (const auto& comp : comps) {
          const IndecClass cls = classify(comp.module);
          if (cls.kind != IndecKind::Tree) return "non-tree component in a tree x tree product";
          if (cls.height > bound) return "component height exceeds min(height, height)";
        }
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "tree-wheel-components", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_tree(rng, small_cap);
        const TModule b = random_wheel(rng, small_cap);
        const auto comps = components(smash(a, b));
        if (static_cast<int>(comps.size()) != b.dim())
          return "expected dim(wheel) = " + std::to_string(b.dim()) + " components, got " +
                 std::to_string(comps.size());
        const int bound = classify(a).height;
        for (const auto& comp : comps) {
          const IndecClass cls = classify(comp.module);
          if (cls.kind != IndecKind::Tree) return "non-tree component in a tree x wheel product";
          if (cls.height > bound) return "component height exceeds the tree height";
        }
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "wheel-wheel-law", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_wheel(rng, small_cap), b = random_wheel(rng, small_cap);
        const int la = classify(a).cycle_len, lb = classify(b).cycle_len;
        const auto comps = components(smash(a, b));
        if (static_cast<int>(comps.size()) != std::gcd(la, lb))
          return "expected gcd = " + std::to_string(std::gcd(la, lb)) + " components, got " +
                 std::to_string(comps.size());
        for (const auto& comp : comps) {
          const IndecClass cls = classify(comp.module);
          if (cls.kind != IndecKind::Wheel || cls.cycle_len != la / std::gcd(la, lb) * lb)
            return "component is not a wheel with cycle lcm(" + std::to_string(la) + "," + std::to_string(lb) + ")";
        }
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "canonical-relabeling", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule m = random_connected_tmodule(rng, dim_cap);
        const TModule shuffled = relabel(m, random_permutation(rng, m.dim()));
        if (canonicalize(m) != canonicalize(shuffled))
          return "canonical code changed under relabeling of " + detail::describe(m);
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "realize-roundtrip", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const std::string key = canonicalize(random_connected_tmodule(rng, dim_cap));
        const std::string back = canonicalize(realize_tmod(key));
        if (back != key) return "canonicalize(realize(" + key + ")) = " + back;
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "smash-commutative-associative", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule a = random_tmodule(rng, 6), b = random_tmodule(rng, 6), c = random_tmodule(rng, 6);
        if (detail::component_keys(smash(a, b)) != detail::component_keys(smash(b, a)))
          return "smash component keys are not symmetric";
        if (detail::component_keys(smash(smash(a, b), c)) != detail::component_keys(smash(a, smash(b, c))))
          return "smash component keys are not associative";
        return std::nullopt;
      }));

  return report;
}

inline SuiteReport verify_jordan(const VerifyOptions& opt) {
  SuiteReport report{"jordan", {}};
  const int dim_cap = std::max(2, opt.max_size);

  report.properties.push_back(detail::run_property(
      "base-change-vs-rank-oracle", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule m = random_tmodule(rng, dim_cap);
        const JordanMultiset direct = base_change(m);
        const JordanMultiset oracle = jordan_oracle(matrix_of(m), cycle_lengths(m));
        if (direct != oracle)
          return detail::describe(m) + ": partition route gives\n" + serialize_jordan(direct) +
                 "but rank route gives\n" + serialize_jordan(oracle);
        if (total_size(direct) != m.dim()) return "total block size differs from dim";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "kron-similarity", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const int cap = std::min(16, dim_cap);
        const TModule a = random_tmodule(rng, cap), b = random_tmodule(rng, cap);
        const TModule p = smash(a, b);
        // the row-major pair indexing is itself the pairing permutation
        if (matrix_of(p) != kronecker(matrix_of(a), matrix_of(b)))
          return "Adj(smash) differs from the Kronecker product under the pair indexing";
        const JordanMultiset via_graph = base_change(p);
        const JordanMultiset via_matrix = jordan_oracle(kronecker(matrix_of(a), matrix_of(b)), cycle_lengths(p));
        if (via_graph != via_matrix) return "Jordan multisets disagree on the Kronecker product";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "image-characterization", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule m = random_tmodule(rng, dim_cap);
        for (const auto& [block, mult] : base_change(m)) {
          if (mult <= 0) return "non-positive multiplicity";
          if (!block.nilpotent && block.size != 1) return "root-of-unity block of size > 1";
          if (!block.nilpotent && (block.num < 0 || block.num >= block.den || std::gcd(block.num, block.den) != 1))
            return "eigenvalue label is not a reduced rotation in [0,1)";
        }
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "partition-shape", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule m = random_tmodule(rng, dim_cap);
        const ProperPartition pp = proper_partition(m);
        const auto lens = pp.chain_lengths();
        for (size_t i = 1; i < lens.size(); ++i)
          if (lens[i - 1] < lens[i]) return "chain lengths are not monotone";
        int covered = 0;
        std::vector<bool> seen(m.dim() + 1, false);
        for (const auto* part : {&pp.chains, &pp.cycles})
          for (const auto& seq : *part)
            for (int v : seq) {
              if (v < 1 || v > m.dim() || seen[v]) return "partition repeats or skips a vertex";
              seen[v] = true;
              ++covered;
            }
        if (covered != m.dim()) return "partition does not cover the module";
        for (const auto& z : pp.cycles)
          for (size_t i = 0; i < z.size(); ++i)
            if (m.succ(z[i]) != z[(i + 1) % z.size()]) return "cycle sequence is not a succ cycle";
        for (const auto& c : pp.chains)
          for (size_t i = 0; i + 1 < c.size(); ++i)
            if (m.succ(c[i]) != c[i + 1]) return "chain sequence is not a succ chain";
        return std::nullopt;
      }));

  return report;
}

inline SuiteReport verify_skew(const VerifyOptions& opt) {
  SuiteReport report{"skew", {}};

  struct ShapePair {
    int n;
    SkewShape s1, s2;
  };
  const auto random_pair = [&](Rng& rng) {
    const int n = rng.range(1, std::max(1, opt.skew_n));
    SkewShape s1 = random_skew_shape(rng, n, opt.skew_points);
    SkewShape s2 = random_skew_shape(rng, n, opt.skew_points);
    return ShapePair{n, std::move(s1), std::move(s2)};
  };

  report.properties.push_back(detail::run_property(
      "product-vs-pn-oracle", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const auto [n, s1, s2] = random_pair(rng);
        const RingElement fast = skew_product(s1, s2);
        const RingElement brute = pn_smash_oracle(s1, s2);
        if (!(fast == brute))
          return "translation route and pair route disagree:\n" + serialize_ring(fast) + "vs\n" +
                 serialize_ring(brute);
        if (fast.dim_character() != Int(s1.size()) * s2.size()) return "point count is not conserved";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "commutativity-and-translation", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const auto [n, s1, s2] = random_pair(rng);
        if (!(skew_product(s1, s2) == skew_product(s2, s1))) return "product is not commutative";
        Point shift(n);
        for (int i = 0; i < n; ++i) shift[i] = rng.range(-5, 5);
        if (!(skew_product(s1.translated(shift), s2) == skew_product(s1, s2)))
          return "product changed under translation of a factor";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "intersections-stay-convex", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const auto [n, s1, s2] = random_pair(rng);
        Point t(n);
        for (int i = 0; i < n; ++i) t[i] = rng.range(-3, 3);
        const SkewShape inter = intersect(s1, s2, t);
        try {
          SkewShape::validate(n, inter.points());
          for (const auto& comp : skew_components(inter)) SkewShape::validate(n, comp.points());
        } catch (const Error& e) {
          return std::string("intersection or component failed validation: ") + e.what();
        }
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "single-cell-kills", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, opt.skew_n));
        const SkewShape s = random_skew_shape(rng, n, opt.skew_points);
        const SkewShape cell = SkewShape::validate(n, {Point(n, 0)});
        RingElement expect(Species::skew(n));
        expect.add_term(canonicalize_skew(cell).str(), s.size());
        if (!(skew_product(cell, s) == expect)) return "cell x S is not |S| cells";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "pn-module-laws", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const int n = rng.range(1, std::max(1, opt.skew_n));
        const PnModule mod = to_pn_module(random_skew_shape(rng, n, opt.skew_points));
        for (int m = 1; m <= mod.size(); ++m)
          for (int i = 0; i < mod.n(); ++i)
            for (int j = i + 1; j < mod.n(); ++j)
              if (mod.act(i, mod.act(j, m)) != mod.act(j, mod.act(i, m))) return "generator actions do not commute";
        for (int i = 0; i < mod.n(); ++i)
          for (int m1 = 1; m1 <= mod.size(); ++m1)
            for (int m2 = m1 + 1; m2 <= mod.size(); ++m2) {
              const int a1 = mod.act(i, m1), a2 = mod.act(i, m2);
              if (a1 != 0 && a1 == a2) return "generator action is not injective away from 0";
            }
        return std::nullopt;
      }));

  return report;
}

inline SuiteReport verify_ring(const VerifyOptions& opt) {
  SuiteReport report{"ring", {}};
  const int key_cap = 6, term_cap = 4;

  const auto random_species = [&](Rng& rng) {
    return rng.below(2) == 0 ? Species::tmod() : Species::skew(rng.range(1, 2));
  };

  report.properties.push_back(detail::run_property(
      "ring-axioms", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const Species sp = random_species(rng);
        const RingElement x = random_ring_element(rng, sp, term_cap, key_cap);
        const RingElement y = random_ring_element(rng, sp, term_cap, key_cap);
        const RingElement z = random_ring_element(rng, sp, term_cap, key_cap);
        if (!(x * y == y * x)) return "multiplication is not commutative";
        if (!((x * y) * z == x * (y * z))) return "multiplication is not associative";
        if (!(x * (y + z) == x * y + x * z)) return "multiplication does not distribute over addition";
        if (!(x + (-x) == RingElement::zero(sp))) return "x + (-x) != 0";
        if (!(x.scaled(2) == x + x)) return "scale(2,x) != x + x";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "tmod-unit", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const RingElement x = random_ring_element(rng, Species::tmod(), term_cap, key_cap);
        const RingElement unit = RingElement::term(Species::tmod(), "W(())");
        if (!(unit * x == x)) return "[W1] is not an identity";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "skew-cell-is-no-unit", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const int n = rng.range(1, 2);
        const RingElement x = random_ring_element(rng, Species::skew(n), term_cap, key_cap);
        const SkewShape unit_cell = SkewShape::validate(n, {Point(n, 0)});
        const RingElement cell = RingElement::term(Species::skew(n), canonicalize_skew(unit_cell).str());
        if (!(cell * x == cell.scaled(x.dim_character()))) return "[cell] * x is not dim(x) * [cell]";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "dim-character-homomorphism", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const Species sp = random_species(rng);
        const RingElement x = random_ring_element(rng, sp, term_cap, key_cap);
        const RingElement y = random_ring_element(rng, sp, term_cap, key_cap);
        if ((x + y).dim_character() != x.dim_character() + y.dim_character()) return "dim is not additive";
        if ((x * y).dim_character() != x.dim_character() * y.dim_character()) return "dim is not multiplicative";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "nilpotent-ideal", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        Rng tree_rng(rng.next());
        RingElement trees(Species::tmod());
        for (int t = rng.range(1, term_cap); t > 0; --t)
          trees.add_term(canonicalize(random_tree(tree_rng, key_cap)), rng.range(1, 3));
        const RingElement y = random_ring_element(rng, Species::tmod(), term_cap, key_cap);
        const RingElement product = trees * y;
        for (const auto& [k, c] : product.terms())
          if (k[0] == 'W') return "tree-span element times " + k + " left wheel support";
        const RingElement x = random_ring_element(rng, Species::tmod(), term_cap, key_cap);
        if (!((x * y).project_wheels() == (x.project_wheels() * y.project_wheels()).project_wheels()))
          return "projection to the wheel quotient is not multiplicative";
        return std::nullopt;
      }));

  report.properties.push_back(detail::run_property(
      "serialization-roundtrip", opt.seed, opt.iters, [&](Rng& rng) -> std::optional<std::string> {
        const TModule m = random_tmodule(rng, opt.max_size);
        if (!(parse_tmod(serialize_tmod(m)) == m)) return "tmod v1 round-trip failed";
        const SkewShape s = random_skew_shape(rng, rng.range(1, std::max(1, opt.skew_n)), opt.skew_points);
        if (!(parse_skew(serialize_skew(s)) == s)) return "skew v1 round-trip failed";
        const Species sp = random_species(rng);
        const RingElement x = random_ring_element(rng, sp, term_cap, key_cap);
        if (!(parse_ring(serialize_ring(x), sp) == x)) return "ring element round-trip failed";
        return std::nullopt;
      }));

  return report;
}

inline SuiteReport verify_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "tmod") return verify_tmod(opt);
  if (suite == "jordan") return verify_jordan(opt);
  if (suite == "skew") return verify_skew(opt);
  if (suite == "ring") return verify_ring(opt);
  fail(ErrorCode::parse_error, "unknown suite '" + suite + "'");
}

inline std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& p : report.properties) {
    out << report.suite << "/" << p.name << ": " << p.pass << " pass, " << p.fail << " fail\n";
    if (p.fail != 0) out << "  first failure: " << p.first_failure << "\n";
  }
  out << "suite " << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace f1k
