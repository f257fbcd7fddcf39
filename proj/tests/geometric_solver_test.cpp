#include <gtest/gtest.h>

#include <numbers>

#include "brute.hpp"
#include "maxdom/errors.hpp"
#include "maxdom/generators.hpp"
#include "maxdom/geometric_solver.hpp"
#include "maxdom/oracle.hpp"

using namespace maxdom;

namespace {

GeometricInstance squares(std::vector<Point> centres, double theta_deg = 0.0, double intercept = 0.0) {
  GeometricInstance g;
  g.kind = ShapeKind::kUnitSquare;
  g.line = {theta_deg * std::numbers::pi / 180.0, intercept, false};
  for (const auto& c : centres) g.objects.push_back({c.x, c.y});
  return g;
}

struct Config {
  InstanceKind kind;
  double theta;
  double spread;
};

const Config kConfigs[] = {
    {InstanceKind::kUnitSquares, 0, 0.5},      {InstanceKind::kUnitSquares, 15, 0.5},
    {InstanceKind::kUnitSquares, 30, 0.5},     {InstanceKind::kUnitSquares, 45, 0.5},
    {InstanceKind::kUnitDisks, 25, 0.4},       {InstanceKind::kRectsUnitHeight, 45, 0.8},
    {InstanceKind::kRectsUnitHeight, 20, 1.2}, {InstanceKind::kDisks, 40, 0.6},
};

}  // namespace

TEST(SolveGeometric, SingleSquare) {
  const auto r = solve_geometric(squares({{0, 0}}, 30), 1);
  EXPECT_EQ(r.nbd_size, 1);
  EXPECT_EQ(r.chosen, NodeSet{0});
}

TEST(SolveGeometric, CliqueOfFiveSquares) {
  const auto inst = squares({{0, 0}, {0.2, 0.1}, {0.4, -0.2}, {0.6, 0.3}, {0.8, 0}}, 10);
  GeometricOptions dp_only;
  dp_only.interval_fast_path = false;
  EXPECT_EQ(solve_geometric(inst, 1, dp_only).nbd_size, 5);
  EXPECT_EQ(oracle_max_dom_k(intersection_graph(inst), 1).nbd_size, 5);
}

TEST(SolveGeometric, NineUnitDisksPairMatchesOracle) {
  const auto inst = generate(InstanceKind::kUnitDisks, 9, 1234, GenParams{.theta_deg = 20, .spread = 0.5}).geometric;
  const auto r = solve_geometric(inst, 2);
  const Graph g = intersection_graph(inst);
  EXPECT_EQ(r.nbd_size, oracle_max_dom_k(g, 2).nbd_size);
  EXPECT_EQ(closed_neighborhood_size(g, r.chosen), r.nbd_size);
}

TEST(SolveGeometric, RangeAndEmptyInstance) {
  EXPECT_THROW(solve_geometric(squares({{0, 0}}), 2), InvalidInput);
  const auto empty = solve_geometric(squares({}), 0);
  EXPECT_EQ(empty.nbd_size, 0);
  EXPECT_TRUE(empty.chosen.empty());
}

TEST(SolveGeometric, HorizontalFastPathAgreesWithBoxDp) {
  GeometricOptions dp_only;
  dp_only.interval_fast_path = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = generate(InstanceKind::kUnitSquares, 9, seed, GenParams{.spread = 0.5}).geometric;
    for (int k = 0; k <= 9; ++k) {
      ASSERT_EQ(solve_geometric(inst, k).nbd_size, solve_geometric(inst, k, dp_only).nbd_size);
    }
  }
}

TEST(SolveGeometric, HorizontalRectanglesUseIntervals) {
  GeometricInstance g;
  g.kind = ShapeKind::kRectUnitHeight;
  g.objects = {{0, 0, 4}, {3, 0.3, 3}, {6, -0.2, 1}};
  EXPECT_EQ(solve_geometric(g, 1).nbd_size, 2);
  GeometricOptions dp_only;
  dp_only.interval_fast_path = false;
  EXPECT_THROW(solve_geometric(g, 1, dp_only), InvalidInput);
}

TEST(SolveGeometric, MatchesOracleOnRandomInstances) {
  for (const auto& c : kConfigs) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const int n = 1 + static_cast<int>(seed % 9);
      const auto inst =
          generate(c.kind, n, seed * 7919 + 1, GenParams{.theta_deg = c.theta, .intercept = -0.3, .spread = c.spread})
              .geometric;
      const Graph g = intersection_graph(inst);
      const auto best = brute::best_per_k(g);
      const auto full = solve_geometric(inst, n);
      for (int k = 0; k <= n; ++k) {
        ASSERT_EQ((*full.per_k)[static_cast<std::size_t>(k)], best[static_cast<std::size_t>(k)]);
        const auto r = solve_geometric(inst, k);
        ASSERT_EQ(r.nbd_size, best[static_cast<std::size_t>(k)]) << to_string(inst.kind) << " seed " << seed;
        ASSERT_EQ(static_cast<int>(r.chosen.size()), k);
        ASSERT_EQ(closed_neighborhood_size(g, r.chosen), r.nbd_size);
      }
    }
  }
}

TEST(SolveGeometric, WitnessRespectsPerBoxBound) {
  for (const auto& c : kConfigs) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = canonicalize_line(
          generate(c.kind, 10, seed, GenParams{.theta_deg = c.theta, .spread = c.spread * 0.5}).geometric);
      if (inst.line.theta == 0.0 && inst.kind != ShapeKind::kUnitDisk && inst.kind != ShapeKind::kDisk) continue;
      const auto dec = build_decomposition(inst);
      const auto r = solve_geometric(inst, 10);
      std::vector<int> per_box(static_cast<std::size_t>(dec.box_count()), 0);
      for (NodeId v : r.chosen) ++per_box[static_cast<std::size_t>(dec.box_of[static_cast<std::size_t>(v)])];
      for (int count : per_box) EXPECT_LE(count, dec.params.per_box_bound);
    }
  }
}

TEST(SolveGeometric, TightPerBoxBoundStillSolvesWithPadding) {
  // Twelve squares stacked in one box with a bound of 11 per box: the best 12-set is
  // all of them, reached by padding the best 11-set.
  std::vector<Point> centres;
  for (int i = 0; i < 12; ++i) centres.push_back({0.05 * i, 0.0});
  GeometricOptions options;
  options.interval_fast_path = false;
  const auto r = solve_geometric(squares(centres, 20), 12, options);
  EXPECT_EQ(r.nbd_size, 12);
  EXPECT_EQ(r.chosen.size(), 12U);
}

TEST(SolveGeometric, TransitionBudget) {
  GeometricOptions tiny;
  tiny.max_transitions = 10;
  const auto inst = generate(InstanceKind::kUnitDisks, 10, 3, GenParams{.spread = 0.3}).geometric;
  EXPECT_THROW(solve_geometric(inst, 5, tiny), BudgetExceeded);
}
