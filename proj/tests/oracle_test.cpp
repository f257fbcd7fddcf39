#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "brute.hpp"
#include "maxdom/errors.hpp"
#include "maxdom/oracle.hpp"

using namespace maxdom;

namespace {

Graph path(int n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph star(int leaves, int isolated = 0) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(1 + leaves + isolated, e);
}

Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

}  // namespace

TEST(RequiredCoverage, RoundsUpWithoutOvershootingFractions) {
  EXPECT_EQ(required_coverage(4, 0.5), 2);
  EXPECT_EQ(required_coverage(3, 0.4), 2);
  EXPECT_EQ(required_coverage(6, 5.0 / 6.0), 5);
  EXPECT_EQ(required_coverage(7, 3.0 / 7.0), 3);
  for (int n = 1; n <= 40; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_EQ(required_coverage(n, static_cast<double>(i) / n), i);
  }
  EXPECT_THROW(required_coverage(4, 0.0), InvalidInput);
  EXPECT_THROW(required_coverage(4, 1.5), InvalidInput);
}

TEST(OracleMaxDomK, PathCenter) {
  const auto r = oracle_max_dom_k(path(3), 1);
  EXPECT_EQ(r.chosen, NodeSet{1});
  EXPECT_EQ(r.nbd_size, 3);
}

TEST(OracleMaxDomK, AllNodesCoverAll) {
  EXPECT_EQ(oracle_max_dom_k(two_triangles(), 6).nbd_size, 6);
  EXPECT_EQ(oracle_max_dom_k(Graph(4), 4).nbd_size, 4);
}

TEST(OracleMaxDomK, StarCenter) {
  const auto r = oracle_max_dom_k(star(4), 1);
  EXPECT_EQ(r.chosen, NodeSet{0});
  EXPECT_EQ(r.nbd_size, 5);
}

TEST(OracleMaxDomK, ZeroAndRangeChecks) {
  EXPECT_EQ(oracle_max_dom_k(path(3), 0).nbd_size, 0);
  EXPECT_THROW(oracle_max_dom_k(path(3), 4), InvalidInput);
  EXPECT_THROW(oracle_max_dom_k(path(3), -1), InvalidInput);
}

TEST(OracleMaxDomK, RespectsNodeBudget) {
  EXPECT_THROW(oracle_max_dom_k(Graph(25), 1), BudgetExceeded);
  EXPECT_NO_THROW(oracle_max_dom_k(Graph(25), 1, OracleConfig{25}));
  EXPECT_THROW(oracle_max_dom_k(Graph(65), 1, OracleConfig{64}), BudgetExceeded);
}

TEST(OracleConfig, ReadsEnvironment) {
  ::setenv("MAXDOM_ORACLE_MAX_NODES", "30", 1);
  EXPECT_EQ(OracleConfig::from_env().max_nodes, 30);
  ::setenv("MAXDOM_ORACLE_MAX_NODES", "99", 1);
  EXPECT_THROW(OracleConfig::from_env(), InvalidInput);
  ::setenv("MAXDOM_ORACLE_MAX_NODES", "abc", 1);
  EXPECT_THROW(OracleConfig::from_env(), InvalidInput);
  ::unsetenv("MAXDOM_ORACLE_MAX_NODES");
  EXPECT_EQ(OracleConfig::from_env().max_nodes, 24);
}

TEST(OracleMaxDomK, MatchesIndependentBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = brute::random_graph(rng, n, 0.05 + 0.1 * static_cast<double>(rng() % 6));
    const auto best = brute::best_per_k(g);
    int previous = 0;
    for (int k = 0; k <= n; ++k) {
      const auto r = oracle_max_dom_k(g, k);
      ASSERT_EQ(r.nbd_size, best[static_cast<std::size_t>(k)]) << "trial " << trial << " k " << k;
      EXPECT_EQ(static_cast<int>(r.chosen.size()), k);
      EXPECT_EQ(closed_neighborhood_size(g, r.chosen), r.nbd_size);
      EXPECT_GE(r.nbd_size, k);
      EXPECT_GE(r.nbd_size, previous);
      EXPECT_LE(r.nbd_size, n);
      previous = r.nbd_size;
    }
  }
}

TEST(OracleMaxDomK, Deterministic) {
  std::mt19937_64 rng(5);
  const Graph g = brute::random_graph(rng, 10, 0.3);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(oracle_max_dom_k(g, k).chosen, oracle_max_dom_k(g, k).chosen);
}

TEST(OraclePartialDom, Examples) {
  const auto p3 = oracle_partial_dom(path(3), 1.0);
  EXPECT_EQ(p3.k, 1);
  EXPECT_EQ(p3.chosen, NodeSet{1});
  EXPECT_EQ(oracle_partial_dom(Graph(4), 0.5).k, 2);
  EXPECT_EQ(oracle_partial_dom(star(4, 1), 5.0 / 6.0).k, 1);
}

TEST(OraclePartialDom, MatchesBruteForceAndIsMonotoneInAlpha) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = brute::random_graph(rng, n, 0.25);
    int previous = 0;
    for (int i = 1; i <= n; ++i) {
      const auto r = oracle_partial_dom(g, static_cast<double>(i) / n);
      EXPECT_EQ(r.k, brute::min_size_covering(g, i));
      EXPECT_GE(closed_neighborhood_size(g, r.chosen), i);
      EXPECT_GE(r.k, previous);
      previous = r.k;
    }
  }
}

TEST(DominationDefect, Examples) {
  EXPECT_EQ(domination_defect(path(3), 0), 0);
  EXPECT_EQ(domination_defect(path(5), 1), 2);
  EXPECT_EQ(domination_defect(two_triangles(), 1), 3);
  EXPECT_THROW(domination_defect(path(3), 1), InvalidInput);
}

TEST(DominationDefect, IdentityWithOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = brute::random_graph(rng, n, 0.2);
    const int gamma = domination_number(g, oracle_kset_solver());
    EXPECT_EQ(gamma, brute::min_size_covering(g, n));
    for (int r = 0; r < gamma; ++r) {
      EXPECT_EQ(domination_defect(g, r), n - brute::best_per_k(g)[static_cast<std::size_t>(gamma - r)]);
    }
  }
}
