// Acceptance suite: reproduces the worked examples exactly and runs the
// randomized property suites at full size. One pass/fail line per criterion;
// exit status 0 only if everything passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "f1k/jordan.hpp"
#include "f1k/ring.hpp"
#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"
#include "f1k/verify.hpp"
#include "fixtures.hpp"

using namespace f1k;
using namespace fixtures;

namespace {

// Independent pair-enumeration oracle: union-find over all pairs (m,n) with
// the diagonal step (m,n) -> (succ m, succ n), never touching smash().
struct PairForest {
  std::vector<int> parent;
  int dim_b;

  PairForest(const TModule& a, const TModule& b) : parent(a.dim() * b.dim()), dim_b(b.dim()) {
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    for (int m = 1; m <= a.dim(); ++m)
      for (int n = 1; n <= b.dim(); ++n)
        if (a.succ(m) != 0 && b.succ(n) != 0) unite(id(m, n), id(a.succ(m), b.succ(n)));
  }

  int id(int m, int n) const { return (m - 1) * dim_b + (n - 1); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }

  std::multiset<int> component_sizes() {
    std::map<int, int> count;
    for (size_t v = 0; v < parent.size(); ++v) ++count[find(static_cast<int>(v))];
    std::multiset<int> out;
    for (const auto& [root, c] : count) out.insert(c);
    return out;
  }
};

std::optional<std::string> criterion_tree_tree() {
  const TModule n = tree4(), m = star3();
  const TModule product = smash(n, m);
  const auto comps = components(product);
  if (comps.size() != 6) return "expected 6 components, got " + std::to_string(comps.size());
  int roots = 0;
  for (int i = 1; i <= n.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (n.succ(i) == 0 || m.succ(j) == 0) ++roots;
  if (roots != n.dim() + m.dim() - 1) return "root count is not dim+dim-1";
  std::multiset<int> dims;
  for (const auto& comp : comps) {
    const IndecClass cls = classify(comp.module);
    if (cls.kind != IndecKind::Tree) return "found a non-tree component";
    if (cls.height > 1) return "component height exceeds 1";
    dims.insert(comp.module.dim());
  }
  const std::multiset<int> expect{1, 1, 1, 1, 3, 5};
  if (dims != expect) return "component dimension multiset is wrong";
  if (PairForest(n, m).component_sizes() != expect) return "pair-enumeration oracle disagrees";
  return std::nullopt;
}

std::optional<std::string> criterion_tree_wheel() {
  const TModule product = smash(tree4(), wheel3());
  if (product.dim() != 12) return "total size is not 12";
  const auto comps = components(product);
  if (comps.size() != 3) return "expected 3 components, got " + std::to_string(comps.size());
  for (const auto& comp : comps) {
    const IndecClass cls = classify(comp.module);
    if (cls.kind != IndecKind::Tree) return "found a non-tree component";
    if (cls.height > 2) return "component height exceeds 2";
  }
  std::multiset<int> dims;
  for (const auto& comp : comps) dims.insert(comp.module.dim());
  if (PairForest(tree4(), wheel3()).component_sizes() != dims) return "pair-enumeration oracle disagrees";
  return std::nullopt;
}

std::optional<std::string> criterion_wheel_wheel() {
  // gcd(2,2) = 2 wheels with cycles of lcm(2,2) = 2
  const TModule p1 = smash(wheel4(), wheel3());
  if (p1.dim() != 12) return "first product size is not 12";
  const auto comps1 = components(p1);
  if (comps1.size() != 2) return "expected gcd(2,2) = 2 components";
  for (const auto& comp : comps1) {
    const IndecClass cls = classify(comp.module);
    if (cls.kind != IndecKind::Wheel || cls.cycle_len != 2) return "component is not a wheel with a 2-cycle";
  }
  // gcd(3,2) = 1 wheel with a cycle of lcm(3,2) = 6
  const TModule p2 = smash(wheel4_cycle3(), wheel3());
  if (p2.dim() != 12) return "second product size is not 12";
  const auto comps2 = components(p2);
  if (comps2.size() != 1) return "expected a single component";
  const IndecClass cls = classify(comps2[0].module);
  if (cls.kind != IndecKind::Wheel || cls.cycle_len != 6) return "component is not a wheel with a 6-cycle";
  return std::nullopt;
}

std::optional<std::string> criterion_proper_partition() {
  const TModule ten = ten_vertex();
  const ProperPartition pp = proper_partition(ten);
  if (pp.chain_lengths() != std::vector<int>{3, 2, 1}) return "chain lengths are not {3,2,1}";
  if (pp.cycle_lengths() != std::vector<int>{4}) return "cycle lengths are not {4}";
  JordanMultiset expect;
  add_block(expect, JordanBlock::zero(3), 1);
  add_block(expect, JordanBlock::zero(2), 1);
  add_block(expect, JordanBlock::zero(1), 1);
  add_cycle_blocks(expect, 4);
  const JordanMultiset direct = base_change(ten);
  if (direct != expect) return "base change is not J3+J2+J1+D4";
  if (jordan_oracle(matrix_of(ten), cycle_lengths(ten)) != direct) return "rank oracle disagrees";
  return std::nullopt;
}

std::optional<std::string> criterion_skew_product() {
  const RingElement product = skew_product(tetromino_s(), tetromino_t());
  RingElement expect(Species::skew(2));
  expect.add_term("0,0", 8);
  expect.add_term("0,0;1,0", 2);
  expect.add_term("0,0;0,1", 2);
  if (!(product == expect)) return "product is not 8 cells + 2 dominoes + 2 dominoes";
  if (!(pn_smash_oracle(tetromino_s(), tetromino_t()) == product)) return "pair oracle disagrees";
  if (product.dim_character() != 16) return "point count is not 16 = 4*4";
  return std::nullopt;
}

std::optional<std::string> suite_failure(const SuiteReport& report) {
  for (const auto& p : report.properties) {
    if (p.pass + p.fail < 200) return p.name + " ran fewer than 200 instances";
    if (p.fail != 0) return p.name + ": " + p.first_failure;
  }
  return std::nullopt;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();

  std::vector<std::pair<std::string, std::function<std::optional<std::string>()>>> criteria;
  criteria.emplace_back("criterion 1 (tree x tree worked example)", criterion_tree_tree);
  criteria.emplace_back("criterion 2 (tree x wheel worked example)", criterion_tree_wheel);
  criteria.emplace_back("criterion 3 (wheel x wheel worked examples)", criterion_wheel_wheel);
  criteria.emplace_back("criterion 4 (proper partition and Jordan form)", criterion_proper_partition);
  criteria.emplace_back("criterion 5 (skew product worked example)", criterion_skew_product);

  VerifyOptions jordan_opt;
  jordan_opt.seed = 1;
  jordan_opt.iters = 200;
  jordan_opt.max_size = 64;
  criteria.emplace_back("criterion 6a (base change vs rank oracle, dim <= 64, 200 instances)",
                        [&] { return suite_failure(verify_jordan(jordan_opt)); });

  VerifyOptions tmod_opt;
  tmod_opt.seed = 1;
  tmod_opt.iters = 200;
  tmod_opt.max_size = 16;
  criteria.emplace_back("criterion 6b (product laws and canonical invariance, 200 instances)",
                        [&] { return suite_failure(verify_tmod(tmod_opt)); });

  VerifyOptions skew_opt;
  skew_opt.seed = 1;
  skew_opt.iters = 200;
  skew_opt.skew_n = 3;
  skew_opt.skew_points = 8;
  criteria.emplace_back("criterion 6c (skew product vs pair oracle, n in {1,2,3}, 200 instances)",
                        [&] { return suite_failure(verify_skew(skew_opt)); });

  VerifyOptions ring_opt;
  ring_opt.seed = 1;
  ring_opt.iters = 200;
  criteria.emplace_back("criterion 6d (ring axioms, characters and round-trips, 200 instances)",
                        [&] { return suite_failure(verify_ring(ring_opt)); });

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    std::optional<std::string> failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failed;
      std::cout << name << ": FAIL -- " << *failure << "\n";
    } else {
      std::cout << name << ": PASS\n";
    }
  }

  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_budget = secs < 60.0;
  std::cout << "criterion 6 runtime budget (< 60 s): " << (in_budget ? "PASS" : "FAIL") << " (" << secs << " s)\n";
  if (!in_budget) ++failed;

  std::cout << (criteria.size() + 1 - failed) << "/" << (criteria.size() + 1) << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
