#include <gtest/gtest.h>

#include <set>

#include "dtk/errors.hpp"
#include "dtk/exact_solver.hpp"
#include "support.hpp"

namespace dtk {
namespace {

template <class Num>
std::optional<Num> oracle(const Instance& inst, const Metric<Num>& m, const Rational& delta_q,
                          std::optional<Tree>* best_tree = nullptr) {
  const Num delta = NumTraits<Num>::from_rational(delta_q);
  std::optional<Num> best;
  enumerate_spanning_trees(inst.size(), inst.root(), [&](const Tree& t) {
    auto dist = root_distances(t, m);
    for (Vertex v = 0; v < t.size(); ++v) {
      if (v != inst.root() && !within_delay(dist[v], delta, m(inst.root(), v))) return;
    }
    Num c = cost(t, m);
    if (!best || c < *best || (c == *best && best_tree && t < **best_tree)) {
      best = c;
      if (best_tree) *best_tree = t;
    }
  });
  return best;
}

TEST(EnumerationTest, CayleyCounts) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::vector<Vertex>> seen;
    auto count = enumerate_spanning_trees(n, n / 2, [&](const Tree& t) {
      EXPECT_EQ(t.root(), n / 2);
      seen.insert(t.parents());
    });
    std::uint64_t cayley = n <= 2 ? 1 : 1;
    for (std::size_t i = 2; i < n; ++i) cayley *= n;
    EXPECT_EQ(count, cayley) << "n = " << n;
    EXPECT_EQ(seen.size(), cayley) << "n = " << n;
  }
  EXPECT_EQ(enumerate_spanning_trees(3, 0, [](const Tree&) {}), 3u);
  EXPECT_EQ(enumerate_spanning_trees(4, 0, [](const Tree&) {}), 16u);
}

TEST(EnumerationTest, GuardRefuses) {
  EXPECT_THROW(enumerate_spanning_trees(11, 0, [](const Tree&) {}), GuardExceeded);
  EXPECT_THROW(enumerate_spanning_trees(5, 0, [](const Tree&) {}, 4), GuardExceeded);
}

TEST(EnumerationTest, MinimumIsMstCost) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = testing::random_instance(5, seed, ArithmeticMode::Exact, 100);
    Metric<ExactNum> m(inst);
    EXPECT_EQ(*oracle(inst, m, Rational(100)), cost(minimum_spanning_tree(m, 0), m));
  }
}

TEST(SolveExactTest, DeltaOneGivesStar) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = testing::random_instance(8, seed, ArithmeticMode::Exact, 1);
    Metric<ExactNum> m(inst);
    auto r = solve_exact(inst, m);
    ASSERT_EQ(r.status, SolveStatus::Feasible);
    EXPECT_EQ(*r.cost, cost(Network::star(8, 0), m));
    EXPECT_TRUE(r.proof_of_optimality);
  }
}

TEST(SolveExactTest, LargeDeltaGivesMst) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = testing::random_instance(9, seed, ArithmeticMode::Float, 8);
    Metric<double> m(inst);
    auto r = solve_exact(inst, m);
    ASSERT_EQ(r.status, SolveStatus::Feasible);
    EXPECT_NEAR(*r.cost, cost(minimum_spanning_tree(m, 0), m), 1e-9);
  }
}

TEST(SolveExactTest, MatchesEnumerationAtEightPoints) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = testing::random_instance(8, 100 + seed, ArithmeticMode::Float, Rational(13, 10));
    Metric<double> m(inst);
    std::optional<Tree> best_tree;
    auto expected = oracle(inst, m, inst.delta(), &best_tree);
    auto r = solve_exact(inst, m);
    ASSERT_EQ(r.status == SolveStatus::Feasible, expected.has_value());
    if (expected) {
      EXPECT_NEAR(*r.cost, *expected, 1e-9 * *expected);
    }
  }
}

TEST(SolveExactTest, ExactModeOptimumAndTieBreakMatchOracle) {
  // A small integer grid has many equal-cost trees; the solver must pick
  // the smallest parent vector among the optima.
  std::vector<Point> grid;
  for (long y = 0; y < 2; ++y)
    for (long x = 0; x < 3; ++x) grid.push_back({x, y});
  for (Rational delta : {Rational(1), Rational(6, 5), Rational(3, 2), Rational(3)}) {
    Instance inst(ArithmeticMode::Exact, grid, 0, delta);
    Metric<ExactNum> m(inst);
    std::optional<Tree> best_tree;
    auto expected = oracle(inst, m, delta, &best_tree);
    auto r = solve_exact(inst, m);
    ASSERT_TRUE(expected);
    EXPECT_EQ(*r.cost, *expected);
    EXPECT_EQ(*r.tree, *best_tree) << "delta " << format_rational(delta);
  }
}

TEST(SolveExactTest, SandwichAndMonotonicity) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Instance inst = testing::random_instance(9, 200 + seed, ArithmeticMode::Float, 2);
    Metric<double> m(inst);
    double mst = cost(minimum_spanning_tree(m, 0), m);
    double previous = 1e300;
    for (Rational delta : {Rational(1), Rational(21, 20), Rational(6, 5), Rational(3, 2), Rational(2),
                           Rational(4)}) {
      SolveOptions options;
      options.delta = delta;
      auto r = solve_exact(inst, m, options);
      ASSERT_EQ(r.status, SolveStatus::Feasible);
      EXPECT_GE(*r.cost, mst * (1 - 1e-12));
      EXPECT_LE(*r.cost, previous * (1 + 1e-12));
      EXPECT_LE(delay(*r.tree, m), delta.get_d() * (1 + 1e-12));
      if (delta > 1) {
        auto approx = approximate(inst.with_delta(delta), m);
        EXPECT_LE(*r.cost, approx.cost * (1 + 1e-12));
      }
      previous = *r.cost;
    }
  }
}

TEST(SolveExactTest, DecisionModeHonoursCostBound) {
  Instance inst = testing::random_instance(8, 17, ArithmeticMode::Exact, Rational(6, 5));
  Metric<ExactNum> m(inst);
  auto optimum = solve_exact(inst, m);
  ASSERT_EQ(optimum.status, SolveStatus::Feasible);
  Rational just_below = rational_from_double(optimum.cost->lower()) - Rational(1, 1000);
  Rational just_above = rational_from_double(optimum.cost->upper()) + Rational(1, 1000);

  SolveOptions decide;
  decide.stop_at_first_feasible = true;
  decide.cost_bound = just_above;
  auto yes = solve_exact(inst, m, decide);
  ASSERT_EQ(yes.status, SolveStatus::Feasible);
  EXPECT_LE(*yes.cost, ExactNum(just_above));
  EXPECT_LE(delay(*yes.tree, m), ExactNum(Rational(6, 5)));

  decide.cost_bound = just_below;
  EXPECT_EQ(solve_exact(inst, m, decide).status, SolveStatus::Infeasible);
  SolveOptions optimize;
  optimize.cost_bound = just_below;
  EXPECT_EQ(solve_exact(inst, m, optimize).status, SolveStatus::Infeasible);
}

TEST(SolveExactTest, ThreadCountDoesNotChangeTheAnswer) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = testing::random_instance(10, 300 + seed, ArithmeticMode::Exact, Rational(23, 20), 40);
    Metric<ExactNum> m(inst);
    auto serial = solve_exact(inst, m);
    for (unsigned threads : {2u, 4u}) {
      SolveOptions options;
      options.threads = threads;
      auto parallel = solve_exact(inst, m, options);
      ASSERT_EQ(parallel.status, serial.status);
      if (serial.tree) {
        EXPECT_EQ(*parallel.tree, *serial.tree);
        EXPECT_EQ(*parallel.cost, *serial.cost);
      }
      SolveOptions decide = options;
      decide.stop_at_first_feasible = true;
      decide.cost_bound = rational_from_double(serial.cost->upper());
      SolveOptions decide_serial = decide;
      decide_serial.threads = 1;
      auto a = solve_exact(inst, m, decide);
      auto b = solve_exact(inst, m, decide_serial);
      ASSERT_EQ(a.status, b.status);
      if (a.tree) {
        EXPECT_EQ(*a.tree, *b.tree);
      }
    }
  }
}

TEST(SolveExactTest, EdgeCases) {
  Instance single(ArithmeticMode::Exact, {{0, 0}}, 0, 1);
  Metric<ExactNum> m1(single);
  auto r = solve_exact(single, m1);
  EXPECT_EQ(r.status, SolveStatus::Feasible);
  EXPECT_EQ(*r.cost, ExactNum());

  Instance inst = testing::random_instance(6, 1, ArithmeticMode::Float, 2);
  Metric<double> m(inst);
  SolveOptions below_one;
  below_one.delta = Rational(99, 100);
  EXPECT_EQ(solve_exact(inst, m, below_one).status, SolveStatus::Infeasible);

  Instance big = testing::random_instance(15, 1, ArithmeticMode::Float, 2);
  Metric<double> mb(big);
  EXPECT_THROW(solve_exact(big, mb), GuardExceeded);
  SolveOptions small_guard;
  small_guard.max_n = 5;
  EXPECT_THROW(solve_exact(inst, m, small_guard), GuardExceeded);
}

}  // namespace
}  // namespace dtk
