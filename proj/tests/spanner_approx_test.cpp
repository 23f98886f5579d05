#include <gtest/gtest.h>

#include "dtk/approx.hpp"
#include "dtk/errors.hpp"
#include "support.hpp"

namespace dtk {
namespace {

TEST(GreedySpannerTest, TrivialSizes) {
  Metric<double> one(std::vector<Point>{{0, 0}});
  EXPECT_TRUE(greedy_spanner(one, 1.5).network.edges().empty());
  Metric<double> two(std::vector<Point>{{0, 0}, {1, 1}});
  auto report = greedy_spanner(two, 1.5);
  EXPECT_EQ(report.edge_count, 1u);
  EXPECT_EQ(*dilation_all_pairs(report.network, two).value, 1.0);
  EXPECT_EQ(report.construction, "greedy");
}

TEST(GreedySpannerTest, RejectsDeltaAtMostOne) {
  Metric<double> m(testing::random_points(5, 1, ArithmeticMode::Float));
  EXPECT_THROW(greedy_spanner(m, 1.0), UsageError);
  EXPECT_THROW(greedy_spanner(m, 0.5), UsageError);
}

TEST(GreedySpannerTest, FiftyRandomPointsMeetTheBound) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Metric<double> m(testing::random_points(50, seed, ArithmeticMode::Float));
    auto report = greedy_spanner(m, 1.5);
    EXPECT_LE(*dilation_all_pairs(report.network, m).value, 1.5 * (1 + 1e-9));
    EXPECT_LT(report.edge_count, 50u * 49 / 2);
    EXPECT_EQ(report.edge_count, report.network.edges().size());
    EXPECT_EQ(report.max_degree, report.network.max_degree());
    EXPECT_TRUE(std::isfinite(report.cost_ratio));
    EXPECT_GE(report.cost_ratio, 1 - 1e-9);
  }
}

TEST(GreedySpannerTest, ExactModeMeetsTheBoundExactly) {
  auto pts = testing::random_points(20, 12, ArithmeticMode::Exact);
  Metric<ExactNum> m(pts);
  ExactNum delta(Rational(6, 5));
  auto report = greedy_spanner(m, delta);
  EXPECT_LE(*dilation_all_pairs(report.network, m).value, delta);
}

TEST(GreedySpannerTest, GreedyCertificateHoldsForEveryNonEdge) {
  for (double delta : {1.1, 2.0, 3.0}) {
    Metric<double> m(testing::random_points(30, 21, ArithmeticMode::Float));
    auto report = greedy_spanner(m, delta);
    auto adj = report.network.adjacency();
    for (Vertex u = 0; u < 30; ++u) {
      auto dist = shortest_path_distances(adj, u, m);
      for (Vertex v = u + 1; v < 30; ++v) {
        if (std::binary_search(report.network.edges().begin(), report.network.edges().end(),
                               Edge{u, v})) {
          continue;
        }
        EXPECT_LE(*dist[v], delta * m(u, v) * (1 + 1e-12));
      }
    }
  }
}

TEST(GreedySpannerTest, DifferentDeltasEachMeetTheirOwnBound) {
  Metric<double> m(testing::random_points(40, 5, ArithmeticMode::Float));
  for (double delta : {1.05, 1.25, 1.5, 2.5, 39.0}) {
    auto report = greedy_spanner(m, delta);
    EXPECT_LE(*dilation_all_pairs(report.network, m).value, delta * (1 + 1e-9));
  }
}

TEST(StarTest, DelayOneAndRadialCost) {
  auto pts = testing::random_points(9, 3, ArithmeticMode::Exact);
  Metric<ExactNum> m(pts);
  Network star = Network::star(9, 4);
  EXPECT_EQ(star.edges().size(), 8u);
  for (const Edge& e : star.edges()) EXPECT_TRUE(e.u == 4 || e.v == 4);
  ExactNum radial;
  for (Vertex v = 0; v < 9; ++v)
    if (v != 4) radial = radial + m(4, v);
  EXPECT_EQ(cost(star, m), radial);
  EXPECT_EQ(delay(shortest_path_tree(star, 4, m), m), ExactNum(Rational(1)));
  EXPECT_TRUE(Network::star(1, 0).edges().empty());
}

TEST(ApproximateTest, DeltaOneReturnsFlaggedStar) {
  Instance inst = testing::random_instance(12, 4, ArithmeticMode::Exact, 1);
  Metric<ExactNum> m(inst);
  auto result = approximate(inst, m);
  EXPECT_TRUE(result.used_star);
  EXPECT_FALSE(result.spanner_report);
  EXPECT_EQ(result.tree.network(), Network::star(12, 0));
  EXPECT_EQ(result.delay, ExactNum(Rational(1)));
  EXPECT_EQ(result.cost, cost(Network::star(12, 0), m));
}

TEST(ApproximateTest, TwoPoints) {
  Instance inst(ArithmeticMode::Float, {{0, 0}, {3, 4}}, 0, 2);
  Metric<double> m(inst);
  auto result = approximate(inst, m);
  EXPECT_EQ(result.delay, 1.0);
  EXPECT_EQ(result.cost, 5.0);
  EXPECT_EQ(result.mst_cost, 5.0);
  EXPECT_EQ(result.cost_ratio, 1.0);
}

TEST(ApproximateTest, SingletonIsTrivial) {
  Instance inst(ArithmeticMode::Float, {{1, 1}}, 0, 2);
  Metric<double> m(inst);
  auto result = approximate(inst, m);
  EXPECT_EQ(result.delay, 1.0);
  EXPECT_EQ(result.cost, 0.0);
  EXPECT_FALSE(result.used_star);
}

TEST(ApproximateTest, HundredRandomPointsDeltaTwo) {
  Instance inst = testing::random_instance(100, 31, ArithmeticMode::Float, 2);
  Metric<double> m(inst);
  auto result = approximate(inst, m);
  EXPECT_LE(result.delay, 2 * (1 + 1e-9));
  EXPECT_LE(result.cost, cost(result.spanner_report->network, m) * (1 + 1e-12));
  EXPECT_GE(result.cost, result.mst_cost * (1 - 1e-12));
  EXPECT_NEAR(result.cost_ratio, result.cost / result.mst_cost, 1e-12);
}

TEST(ApproximateTest, DelayWithinBoundAcrossModesAndDeltas) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Rational delta : {Rational(1), Rational(101, 100), Rational(7, 5), Rational(4)}) {
      Instance inst = testing::random_instance(15, seed, ArithmeticMode::Exact, delta);
      Metric<ExactNum> m(inst);
      auto result = approximate(inst, m);
      EXPECT_LE(result.delay, ExactNum(delta));
      if (result.spanner_report) {
        EXPECT_LE(result.cost, cost(result.spanner_report->network, m));
      }
    }
  }
}

TEST(ApproximateTest, MinimumSpanningTreeFeasibleForLargeDelta) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 3 + seed % 10;
    Metric<double> m(testing::random_points(n, seed, ArithmeticMode::Float));
    EXPECT_LE(delay(minimum_spanning_tree(m, 0), m), static_cast<double>(n - 1) * (1 + 1e-12));
  }
}

}  // namespace
}  // namespace dtk
