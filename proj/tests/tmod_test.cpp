#include <algorithm>
#include <map>
#include <set>

#include <catch_amalgamated.hpp>

#include "f1k/generate.hpp"
#include "f1k/tmod.hpp"
#include "fixtures.hpp"

using namespace f1k;
using namespace fixtures;

namespace {

std::multiset<int> component_dims(const TModule& m) {
  std::multiset<int> dims;
  for (const auto& comp : components(m)) dims.insert(comp.module.dim());
  return dims;
}

std::multiset<std::string> component_keys(const TModule& m) {
  std::multiset<std::string> keys;
  for (const auto& comp : components(m)) keys.insert(canonicalize(comp.module));
  return keys;
}

}  // namespace

TEST_CASE("validate accepts totals maps and rejects bad ones") {
  const TModule single = TModule::validate(1, {{1, 0}});
  CHECK(single.dim() == 1);
  CHECK(classify(single).kind == IndecKind::Tree);

  const TModule loop = TModule::validate(1, {{1, 1}});
  CHECK(classify(loop).kind == IndecKind::Wheel);
  CHECK(classify(loop).cycle_len == 1);

  CHECK_THROWS_MATCHES(TModule::validate(2, {{1, 3}}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == ErrorCode::out_of_range; }));
  CHECK_THROWS_MATCHES(TModule::validate(2, {{1, 0}}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == ErrorCode::missing; }));
  CHECK_THROWS_AS(TModule::validate(1, {{1, -1}}), Error);
  CHECK_THROWS_AS(TModule::validate(1, {{0, 0}, {1, 0}}), Error);
}

TEST_CASE("components partition the module") {
  // The worked ten-vertex graph is connected: 8 feeds into the cycle.
  CHECK(components(ten_vertex()).size() == 1);
  // Dropping that edge splits off {8,9,10}.
  const auto split = components(ten_vertex_split());
  REQUIRE(split.size() == 2);
  CHECK(split[0].module.dim() == 7);
  CHECK(split[1].module.dim() == 3);
  CHECK(split[0].elements == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(split[1].elements == std::vector<int>{8, 9, 10});

  const auto only = components(ladder(5));
  REQUIRE(only.size() == 1);
  CHECK(only[0].module == ladder(5));

  CHECK(component_dims(direct_sum(TModule({1}), ladder(1))) == std::multiset<int>{1, 1});
  CHECK(components(TModule()).empty());
}

TEST_CASE("classify splits trees from wheels") {
  const IndecClass lad = classify(ladder(5));
  CHECK(lad.kind == IndecKind::Tree);
  CHECK(lad.height == 4);

  const auto split = components(ten_vertex_split());
  const IndecClass wheel = classify(split[0].module);
  CHECK(wheel.kind == IndecKind::Wheel);
  CHECK(wheel.cycle_len == 4);

  CHECK(classify(TModule({1})).cycle_len == 1);
  CHECK_THROWS_AS(classify(TModule()), Error);
  CHECK_THROWS_AS(classify(direct_sum(ladder(1), ladder(1))), Error);
}

TEST_CASE("depth counts steps to the root") {
  CHECK(depth(ladder(5), 5) == 0);
  CHECK(depth(ladder(5), 1) == 4);
  CHECK_THROWS_MATCHES(depth(pure_cycle(3), 2), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == ErrorCode::in_wheel; }));
}

TEST_CASE("pred is the exact preimage of succ") {
  CHECK(ladder(5).pred(5) == std::vector<int>{4});
  CHECK(ladder(5).pred(0) == std::vector<int>{5});
  CHECK(pure_cycle(3).pred(1) == std::vector<int>{3});
  CHECK(pure_cycle(3).pred(0).empty());

  // pred(m,n) = pred(m) x pred(n) in a smash product
  const TModule a = tree4(), b = star3();
  const TModule p = smash(a, b);
  for (int m = 1; m <= a.dim(); ++m)
    for (int n = 1; n <= b.dim(); ++n) {
      std::set<int> expect;
      for (int pm : a.pred(m))
        for (int pn : b.pred(n)) expect.insert(smash_index(pm, pn, b.dim()));
      const auto got = p.pred(smash_index(m, n, b.dim()));
      CHECK(std::set<int>(got.begin(), got.end()) == expect);
    }
}

TEST_CASE("smash of two 2-ladders") {
  const TModule p = smash(ladder(2), ladder(2));
  CHECK(p.dim() == 4);
  CHECK(component_dims(p) == std::multiset<int>{1, 1, 2});
  CHECK(component_keys(p) == std::multiset<std::string>{"()", "()", "(())"});
}

TEST_CASE("the 1-loop is a smash unit") {
  const TModule unit = TModule({1});
  for (const TModule& m : {ladder(3), tree4(), wheel4(), ten_vertex()})
    CHECK(component_keys(smash(unit, m)) == component_keys(m));
}

TEST_CASE("pure cycles multiply by the gcd/lcm rule") {
  const TModule p = smash(pure_cycle(3), pure_cycle(2));
  const auto comps = components(p);
  REQUIRE(comps.size() == 1);
  const IndecClass cls = classify(comps[0].module);
  CHECK(cls.kind == IndecKind::Wheel);
  CHECK(cls.cycle_len == 6);
}

TEST_CASE("direct sum is the wedge of pointed sets") {
  CHECK(direct_sum(tree4(), TModule()) == tree4());
  CHECK(direct_sum(TModule(), tree4()) == tree4());
  CHECK(component_dims(direct_sum(ladder(1), ladder(1))) == std::multiset<int>{1, 1});

  const TModule a = ten_vertex_split(), b = wheel4();
  auto merged = component_keys(a);
  for (const auto& k : component_keys(b)) merged.insert(k);
  CHECK(component_keys(direct_sum(a, b)) == merged);
}

TEST_CASE("canonical codes of small modules") {
  CHECK(canonicalize(ladder(1)) == "()");
  CHECK(canonicalize(star3()) == "(()())");
  CHECK(canonicalize(pure_cycle(2)) == "W((),())");
  CHECK(canonicalize(TModule({1})) == "W(())");
  CHECK(canonicalize(ladder(3)) == "((()))");
  // child codes sort ascending: deeper chain before the pair of leaves
  CHECK(canonicalize(TModule({2, 0, 2, 2, 4})) == "((())()())");
}

TEST_CASE("realize inverts canonicalize") {
  CHECK(realize_tmod("()") == ladder(1));
  CHECK(canonicalize(realize_tmod("(()())")) == "(()())");
  CHECK(canonicalize(realize_tmod("W((),())")) == "W((),())");
  for (const TModule& m : {ladder(4), tree4(), wheel4(), wheel4_cycle3(), ten_vertex()}) {
    if (!is_connected(m)) continue;
    const std::string key = canonicalize(m);
    CHECK(canonicalize(realize_tmod(key)) == key);
  }
  for (const char* bad : {"", "(", ")", "()()", "W()", "W((),)", "()x", "W(()", "x"})
    CHECK_THROWS_AS(realize_tmod(bad), Error);
}

TEST_CASE("canonical codes are relabeling invariants") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const TModule m = random_connected_tmodule(rng, 12);
    const TModule shuffled = relabel(m, random_permutation(rng, m.dim()));
    CHECK(canonicalize(m) == canonicalize(shuffled));
  }
}

TEST_CASE("tmod v1 parses and serializes") {
  const std::string text = serialize_tmod(ten_vertex());
  CHECK(parse_tmod(text) == ten_vertex());
  CHECK(serialize_tmod(ladder(2)) == "tmod 2\n1 2\n2 0\n");
  CHECK(parse_tmod("# comment\n tmod 1 \n1 0 # root\n") == ladder(1));
  CHECK(parse_tmod("tmod 0\n") == TModule());

  CHECK_THROWS_AS(parse_tmod(""), Error);
  CHECK_THROWS_AS(parse_tmod("tmod\n"), Error);
  CHECK_THROWS_AS(parse_tmod("tmod 2\n2 0\n1 2\n"), Error);       // out of order
  CHECK_THROWS_AS(parse_tmod("tmod 2\n1 2\n"), Error);            // missing element
  CHECK_THROWS_AS(parse_tmod("tmod 1\n1 2\n"), Error);            // succ out of range
  CHECK_THROWS_AS(parse_tmod("tmod 1\n1 0 extra\n"), Error);
}
