#include <catch_amalgamated.hpp>

#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace islands;
using fixtures::by_names;

TEST_CASE("weak order enumeration counts ordered set partitions", "[oracle]") {
  const int expected[] = {0, 1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n) {
    int count = 0;
    std::set<std::vector<int>> distinct;
    for_each_weak_order(n, [&](const HeightFunction& h) {
      ++count;
      distinct.insert(h.values());
      REQUIRE(normalize_heights(h) == h);  // already normalized
      return true;
    });
    CHECK(count == expected[n]);
    CHECK(static_cast<int>(distinct.size()) == count);  // no repeats
  }
}

TEST_CASE("the three weak orders on two points", "[oracle]") {
  std::set<std::vector<int>> got;
  for_each_weak_order(2, [&](const HeightFunction& h) {
    got.insert(h.values());
    return true;
  });
  std::set<std::vector<int>> want = {{0, 0}, {0, 1}, {1, 0}};
  CHECK(got == want);
}

TEST_CASE("enumeration can stop early and respects the cap", "[oracle]") {
  int count = 0;
  bool completed = for_each_weak_order(4, [&](const HeightFunction&) {
    return ++count < 10;
  });
  CHECK_FALSE(completed);
  CHECK(count == 10);

  GroundSet big = GroundSet::numbered(9);
  CHECK_THROWS_AS(weak_orders(big), island_error);
  CHECK_NOTHROW(weak_orders(GroundSet::numbered(4)));
}

TEST_CASE("realizability search over all height behaviors", "[oracle]") {
  IslandDomain d = fixtures::not_cd_domain();
  auto h = find_realizing_height(d, d.C, false);
  REQUIRE(h.has_value());
  CHECK(pre_island_system(d, *h) == d.C);

  SetFamily single(5);
  single.add(by_names(d.ground, {"a", "b"}));
  single.add(Subset::universe(5));
  CHECK(find_realizing_height(d, single, false).has_value());

  // admissible, yet no height realizes exactly this pair: sinking the rims of
  // both {a,b} and {c,d} below them drags e low enough to free {a,c} as well
  SetFamily pair(5);
  pair.add(by_names(d.ground, {"a", "b"}));
  pair.add(by_names(d.ground, {"c", "d"}));
  pair.add(Subset::universe(5));
  REQUIRE(is_admissible(d, pair));
  CHECK_FALSE(find_realizing_height(d, pair, false).has_value());
}

TEST_CASE("the three-member family of the tiered fixture is realizable", "[oracle]") {
  IslandDomain d = fixtures::not_std_domain();
  SetFamily h(4);
  h.add(by_names(d.ground, {"a"}));
  h.add(by_names(d.ground, {"b", "c"}));
  h.add(Subset::universe(4));
  auto found = find_realizing_height(d, h, false);
  REQUIRE(found.has_value());
  CHECK(pre_island_system(d, *found) == h);

  // as islands the same family is out of reach
  CHECK_FALSE(find_realizing_height(d, h, true).has_value());
}

TEST_CASE("maximum system sizes on boards", "[oracle]") {
  for (int n = 1; n <= 4; ++n) {
    GridSpec spec;
    spec.rows = 1;
    spec.cols = n;
    auto [count, witness] = max_system(grid_domain(spec), false);
    CHECK(count == n);
  }
  auto [c22, w22] = max_system(fixtures::grid22_domain(), false);
  CHECK(c22 == 3);
  CHECK(static_cast<int>(pre_island_system(fixtures::grid22_domain(), w22).size()) == 3);
}

TEST_CASE("maximum systems respect the cap and connective bound", "[oracle]") {
  GridSpec spec;
  spec.rows = 3;
  spec.cols = 3;
  CHECK_THROWS_AS(max_system(grid_domain(spec), false, 8), island_error);

  // on connective domains a system is CD so its size is at most |U|
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    IslandDomain d = random_domain(rng);
    if (!is_connective(d)) continue;
    auto [count, witness] = max_system(d, false);
    REQUIRE(count <= d.ground.size());
  }
}

TEST_CASE("prime implicants by subcube widening", "[oracle]") {
  std::vector<bool> majority = {false, false, false, true, false, true, true, true};
  SetFamily got = prime_implicants_bruteforce(majority);
  SetFamily want(8);
  want.add(Subset::of(8, {6, 7}));
  want.add(Subset::of(8, {5, 7}));
  want.add(Subset::of(8, {3, 7}));
  CHECK(got == want);

  std::vector<bool> constant_true = {true, true, true, true};
  SetFamily all = prime_implicants_bruteforce(constant_true);
  CHECK(all.size() == 1);
  CHECK(all.contains(Subset::universe(4)));

  std::vector<bool> constant_false = {false, false};
  CHECK(prime_implicants_bruteforce(constant_false).empty());

  std::vector<bool> parity = {false, true, true, false};
  SetFamily xors = prime_implicants_bruteforce(parity);
  CHECK(xors.size() == 2);  // two lonely minterms
  CHECK(xors.contains(Subset::of(4, {1})));
  CHECK(xors.contains(Subset::of(4, {2})));

  CHECK_THROWS_AS(prime_implicants_bruteforce(std::vector<bool>{true, false, true}),
                  island_error);  // not a power of two
}

TEST_CASE("concept enumeration by derivation closure", "[oracle]") {
  ContextSpec spec;
  spec.factors = {{"g1", "g2"}, {"m1", "m2"}};
  spec.relation = {{0, 0}, {0, 1}, {1, 0}};
  auto concepts = formal_concepts_bruteforce(spec);
  REQUIRE(concepts.size() == 2);

  // every concept is closed both ways and converts to a box inside the relation
  auto [dom, h] = box_domain(spec);
  for (const auto& [extent, intent] : concepts) {
    Subset box = concept_box(spec, extent, intent);
    CHECK(dom.C.contains(box));
  }

  ContextSpec full;
  full.factors = {{"g1", "g2"}, {"m1", "m2"}};
  full.relation = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(formal_concepts_bruteforce(full).size() == 1);  // only (G, M)

  ContextSpec three;
  three.factors = {{"a"}, {"b"}, {"c"}};
  three.relation = {{0, 0, 0}};
  CHECK_THROWS_AS(formal_concepts_bruteforce(three), island_error);
}

TEST_CASE("random domains are deterministic per seed", "[oracle]") {
  std::mt19937_64 r1(99), r2(99);
  for (int t = 0; t < 20; ++t) {
    IslandDomain a = random_domain(r1);
    IslandDomain b = random_domain(r2);
    REQUIRE(a.C == b.C);
    REQUIRE(a.K.family() == b.K.family());
    HeightFunction ha = random_height(r1, a.ground.size());
    HeightFunction hb = random_height(r2, b.ground.size());
    REQUIRE(ha == hb);
  }
}
