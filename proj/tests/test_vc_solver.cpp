#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "padv/oracle.hpp"
#include "padv/vc_solver.hpp"

using namespace padv;

TEST_CASE("advice budget floor") {
  REQUIRE(check_advice_budget(46, 15));
  REQUIRE_FALSE(check_advice_budget(46, 16));
  REQUIRE(check_advice_budget(7, 2));
  REQUIRE_FALSE(check_advice_budget(7, 3));
  REQUIRE(check_advice_budget(3, 0));
  REQUIRE_FALSE(check_advice_budget(3, 1));
  REQUIRE(check_advice_budget(0, 0));
}

TEST_CASE("solver is optimal on the named graphs") {
  struct Row {
    Graph g;
    int opt;
  };
  std::vector<Row> rows = {
      {Graph(0, {}), 0},
      {Graph(5, {}), 0},
      {Graph(2, {{0, 1}}), 1},
      {padv_tests::cycle(3), 2},
      {padv_tests::cycle(5), 3},
      {padv_tests::k4(), 3},
      {gadget_graph(GadgetVariant::one), 3},
      {gadget_graph(GadgetVariant::two), 3},
      {padv_tests::petersen(), 6},
  };
  for (const auto& row : rows) {
    SolveResult r = solve_with_oracle(row.g, TieBreakPolicy::min_id());
    REQUIRE(static_cast<int>(r.cover.size()) == row.opt);
    REQUIRE(check_advice_budget(row.g.size(), r.trace.total_bits));
    REQUIRE(r.advice.size() == r.trace.total_bits);
    std::set<int> in(r.cover.begin(), r.cover.end());
    for (auto [u, v] : row.g.edges()) REQUIRE((in.count(u) || in.count(v)));
  }
}

TEST_CASE("triangles and empty graphs need no advice") {
  SolveResult tri = solve_with_oracle(padv_tests::cycle(3),
                                      TieBreakPolicy::min_id());
  REQUIRE(tri.trace.total_bits == 0);
  SolveResult empty = solve_with_oracle(Graph(6, {}), TieBreakPolicy::min_id());
  REQUIRE(empty.trace.total_bits == 0);
  REQUIRE(empty.cover.empty());
}

TEST_CASE("replay reproduces the oracle run bit for bit") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 5 + static_cast<int>(rng() % 16);
    Graph g = random_max3(n, 0.8, rng());
    SolveResult r = solve_with_oracle(g, TieBreakPolicy::min_id());
    ReplayOutcome replayed =
        replay_with_advice(g, r.advice, TieBreakPolicy::min_id());
    REQUIRE(replayed.valid);
    REQUIRE_FALSE(replayed.exhausted);
    REQUIRE(replayed.cover == r.cover);
    REQUIRE(replayed.trace.total_bits == r.trace.total_bits);
  }
}

TEST_CASE("replay distinguishes exhaustion from a bad tape") {
  Graph g = random_max3(20, 1.0, 9);
  SolveResult r = solve_with_oracle(g, TieBreakPolicy::min_id());
  REQUIRE(r.advice.size() >= 2);

  std::string truncated = r.advice.substr(0, r.advice.size() - 1);
  ReplayOutcome short_run =
      replay_with_advice(g, truncated, TieBreakPolicy::min_id());
  REQUIRE(short_run.exhausted);
  REQUIRE_FALSE(short_run.valid);

  // Wrong bits still finish (every decision is defined) and still produce a
  // vertex cover; only optimality is at stake. Flipping bits changes which
  // vertices consult the tape, so pad it to rule out exhaustion.
  std::string flipped = r.advice;
  for (char& b : flipped) b = b == '0' ? '1' : '0';
  flipped.append(static_cast<std::size_t>(g.size()), '0');
  ReplayOutcome wrong = replay_with_advice(g, flipped, TieBreakPolicy::min_id());
  REQUIRE_FALSE(wrong.exhausted);
  REQUIRE(wrong.valid);
  REQUIRE(wrong.cover.size() >= r.cover.size());
}

TEST_CASE("component audit classifies advised vertices") {
  std::mt19937_64 rng(4242);
  long long advised_components = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 10 + static_cast<int>(rng() % 30);
    Graph g = random_max3(n, 1.0, rng());
    SolveResult r = solve_with_oracle(g, TieBreakPolicy::min_id());
    ComponentAudit audit = audit_components(r.trace, g);

    std::size_t members = 0, bits = 0;
    for (const auto& comp : audit.components) {
      members += comp.members.size();
      bits += static_cast<std::size_t>(comp.advice_count());
      REQUIRE(comp.k0 + comp.k1 + comp.k2 + comp.k3 + comp.advice_count() ==
              comp.size());
      int k = comp.advice_count();
      if (k > 0) {
        ++advised_components;
        // Advice is only spent on components big enough to amortize it.
        REQUIRE(comp.size() >= 3 * k + 1);
      }
      if (k == 4) REQUIRE(comp.k3 == 0);
    }
    REQUIRE(members == static_cast<std::size_t>(g.size()));
    REQUIRE(bits == r.trace.total_bits);
  }
  REQUIRE(advised_components > 100);  // the sweep actually exercises advice
}

TEST_CASE("audit rejects a trace from a different graph") {
  Graph g = random_max3(8, 0.8, 1);
  Graph other = random_max3(9, 0.8, 1);
  SolveResult r = solve_with_oracle(g, TieBreakPolicy::min_id());
  REQUIRE_THROWS_AS(audit_components(r.trace, other), GraphError);
}

TEST_CASE("budget holds under every tie-break policy") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 8 + static_cast<int>(rng() % 24);
    Graph g = random_max3(n, 1.0, rng());
    auto opt = min_vertex_cover_size(g, {});
    for (int p = 0; p < 6; ++p) {
      TieBreakPolicy tb = p == 0   ? TieBreakPolicy::min_id()
                          : p == 1 ? TieBreakPolicy::max_id()
                                   : TieBreakPolicy::seeded_random(rng());
      SolveResult r = solve_with_oracle(g, tb);
      REQUIRE(static_cast<int>(r.cover.size()) == *opt);
      REQUIRE(check_advice_budget(n, r.trace.total_bits));
    }
  }
}
