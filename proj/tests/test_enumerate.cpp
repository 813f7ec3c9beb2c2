#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "padv/enumerate.hpp"
#include "padv/oracle.hpp"

using namespace padv;

namespace {
long long leaf_budget(int n) {
  return 1LL << (15 * n / 46);
}
}  // namespace

TEST_CASE("enumeration solves the named graphs") {
  EnumerationReport k4 =
      exact_mvc_by_enumeration(padv_tests::k4(), TieBreakPolicy::min_id());
  REQUIRE(k4.best_size == 3);
  REQUIRE(k4.leaves_explored <= leaf_budget(4));

  EnumerationReport pet =
      exact_mvc_by_enumeration(padv_tests::petersen(), TieBreakPolicy::min_id());
  REQUIRE(pet.best_size == 6);
  REQUIRE(pet.leaves_explored <= leaf_budget(10));

  EnumerationReport empty =
      exact_mvc_by_enumeration(Graph(4, {}), TieBreakPolicy::min_id());
  REQUIRE(empty.best_size == 0);
  REQUIRE(empty.leaves_explored == 1);
}

TEST_CASE("enumeration equals the bitmask optimum on random graphs") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 11);
    Graph g = random_max3(n, 0.4 + 0.05 * (trial % 12), rng());
    auto expected = padv_tests::bitmask_mvc(g);
    EnumerationReport r = exact_mvc_by_enumeration(g, TieBreakPolicy::min_id());
    REQUIRE(r.best_size == *expected);
    REQUIRE(r.leaves_explored <= leaf_budget(n));
    REQUIRE(r.max_depth <= static_cast<std::size_t>(15 * n / 46));
    std::set<int> in(r.best_cover.begin(), r.best_cover.end());
    REQUIRE(static_cast<int>(in.size()) == r.best_size);
    for (auto [u, v] : g.edges()) REQUIRE((in.count(u) || in.count(v)));
  }
}

TEST_CASE("pruning never changes the optimum") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 5 + static_cast<int>(rng() % 9);
    Graph g = random_max3(n, 0.9, rng());
    EnumerationReport pruned =
        exact_mvc_by_enumeration(g, TieBreakPolicy::min_id(), true);
    EnumerationReport full =
        exact_mvc_by_enumeration(g, TieBreakPolicy::min_id(), false);
    REQUIRE(pruned.best_size == full.best_size);
    REQUIRE(pruned.leaves_explored <= full.leaves_explored);
  }
}

TEST_CASE("tie-break policy does not affect the enumerated optimum") {
  std::mt19937_64 rng(1717);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_max3(12, 1.0, rng());
    int a = exact_mvc_by_enumeration(g, TieBreakPolicy::min_id()).best_size;
    int b = exact_mvc_by_enumeration(g, TieBreakPolicy::max_id()).best_size;
    int c = exact_mvc_by_enumeration(g, TieBreakPolicy::seeded_random(trial))
                .best_size;
    REQUIRE(a == b);
    REQUIRE(a == c);
  }
}
