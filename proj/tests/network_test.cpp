#include <gtest/gtest.h>

#include <random>

#include "dtk/errors.hpp"
#include "dtk/exact_solver.hpp"
#include "dtk/network.hpp"
#include "support.hpp"

namespace dtk {
namespace {

Metric<double> float_metric(std::vector<Point> pts) { return Metric<double>(pts); }

// d_T(r, v) by walking parent links, independent of root_distances.
double path_walk(const Tree& t, const Metric<double>& m, Vertex v) {
  double sum = 0;
  for (; v != t.root(); v = t.parent(v)) sum += m(v, t.parent(v));
  return sum;
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> parent(n, kNoParent);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  for (std::size_t i = 1; i < n; ++i) parent[perm[i]] = perm[rng() % i];
  return Tree(0, parent);
}

TEST(NetworkTest, RejectsBadEdges) {
  EXPECT_THROW(Network(3, {{0, 0}}), UsageError);
  EXPECT_THROW(Network(3, {{0, 1}, {1, 0}}), UsageError);
  EXPECT_THROW(Network(3, {{0, 3}}), UsageError);
  Network net(4, {{3, 1}, {0, 2}});
  EXPECT_EQ(net.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(Network::complete(5).edges().size(), 10u);
  EXPECT_EQ(Network::star(5, 2).max_degree(), 4u);
}

TEST(TreeTest, RejectsNonTrees) {
  EXPECT_THROW(Tree(0, {kNoParent, 2, 1}), UsageError);
  EXPECT_THROW(Tree(0, {1, 0}), UsageError);
  EXPECT_THROW(Tree::from_network(Network(3, {{0, 1}}), 0), UsageError);
  Tree t = Tree::from_network(Network(3, {{0, 1}, {1, 2}}), 0);
  EXPECT_EQ(t.parents(), (std::vector<Vertex>{kNoParent, 0, 1}));
  EXPECT_EQ(t.network(), Network(3, {{0, 1}, {1, 2}}));
}

TEST(CostTest, SpecExamples) {
  auto m = float_metric({{0, 0}, {3, 4}, {0, 5}});
  EXPECT_EQ(cost(Network(3, {}), m), 0.0);
  EXPECT_EQ(cost(Network::star(3, 0), m), 10.0);
  Metric<ExactNum> e(std::vector<Point>{{0, 0}, {3, 4}, {0, 5}});
  EXPECT_EQ(cost(Network::star(3, 0), e), ExactNum(Rational(10)));
}

TEST(ShortestPathTreeTest, TreeInputIsReturnedUnchanged) {
  auto pts = testing::random_points(12, 3, ArithmeticMode::Float);
  Metric<double> m(pts);
  std::mt19937_64 rng(3);
  Tree t = random_tree(12, rng);
  EXPECT_EQ(shortest_path_tree(t.network(), 0, m), t);
}

TEST(ShortestPathTreeTest, TieGoesToSmallerPredecessor) {
  // Collinear r, (1,0), (2,0): the direct edge and the two-hop path to
  // (2,0) both have length 2.
  std::vector<Point> pts{{0, 0}, {1, 0}, {2, 0}};
  Metric<ExactNum> m(pts);
  Tree t = shortest_path_tree(Network::complete(3), 0, m);
  EXPECT_EQ(t.parent(2), 0u);
  EXPECT_EQ(t.parent(1), 0u);
  Metric<double> f(pts);
  EXPECT_EQ(shortest_path_tree(Network::complete(3), 0, f).parent(2), 0u);
}

TEST(ShortestPathTreeTest, DisconnectedNamesVertex) {
  auto m = float_metric({{0, 0}, {1, 0}, {5, 5}});
  try {
    shortest_path_tree(Network(3, {{0, 1}}), 0, m);
    FAIL();
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.vertex(), 2u);
  }
}

TEST(ShortestPathTreeTest, PreservesRootDistances) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto pts = testing::random_points(40, seed, ArithmeticMode::Float);
    Metric<double> m(pts);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges = random_tree(40, rng).network().edges();
    for (int extra = 0; extra < 60; ++extra) {
      Edge e = make_edge(rng() % 40, rng() % 40);
      if (e.u != e.v && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    Network net(40, edges);
    auto dist = shortest_path_distances(net.adjacency(), 0, m);
    Tree spt = shortest_path_tree(net, 0, m);
    auto tree_dist = root_distances(spt, m);
    double net_delay = 1;
    for (Vertex v = 1; v < 40; ++v) {
      EXPECT_NEAR(tree_dist[v], *dist[v], 1e-9 * *dist[v]);
      net_delay = std::max(net_delay, *dist[v] / m(0, v));
    }
    EXPECT_NEAR(delay(spt, m), net_delay, 1e-12 * net_delay);
    auto dil = dilation_all_pairs(net, m);
    ASSERT_TRUE(dil.connected());
    EXPECT_GE(*dil.value, delay(spt, m) * (1 - 1e-12));
  }
}

TEST(DelayTest, StarIsOneAndSingletonIsOne) {
  auto pts = testing::random_points(15, 8, ArithmeticMode::Exact);
  Metric<ExactNum> m(pts);
  EXPECT_EQ(delay(Tree::from_network(Network::star(15, 0), 0), m), ExactNum(Rational(1)));
  Metric<double> one(std::vector<Point>{{4, 4}});
  EXPECT_EQ(delay(Tree(0, {kNoParent}), one), 1.0);
}

TEST(DelayTest, MatchesPathWalkOracle) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    auto pts = testing::random_points(10, rng(), ArithmeticMode::Float);
    Metric<double> m(pts);
    Tree t = random_tree(10, rng);
    double expected = 0;
    for (Vertex v = 1; v < 10; ++v) expected = std::max(expected, path_walk(t, m, v) / m(0, v));
    EXPECT_NEAR(delay(t, m), expected, 1e-12 * expected);
  }
}

TEST(DilationTest, SpecExamples) {
  auto pts = testing::random_points(12, 2, ArithmeticMode::Exact);
  Metric<ExactNum> m(pts);
  EXPECT_EQ(*dilation_all_pairs(Network::complete(12), m).value, ExactNum(Rational(1)));
  Metric<ExactNum> line(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(*dilation_all_pairs(Network(3, {{0, 1}, {1, 2}}), line).value, ExactNum(Rational(1)));
  auto broken = dilation_all_pairs(Network(3, {{0, 1}}), line);
  EXPECT_FALSE(broken.connected());
  EXPECT_FALSE(broken.diagnostic.empty());
  Metric<double> square(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto cycle = dilation_all_pairs(Network(4, {{0, 1}, {1, 2}, {2, 3}}), square);
  EXPECT_NEAR(*cycle.value, 3.0, 1e-15);
  EXPECT_EQ(cycle.u, 0u);
  EXPECT_EQ(cycle.v, 3u);
}

TEST(MinimumSpanningTreeTest, SpecExamples) {
  Metric<ExactNum> line(std::vector<Point>{{0, 0}, {5, 0}, {2, 0}});
  EXPECT_EQ(minimum_spanning_tree(line, 0).network(), Network(3, {{0, 2}, {1, 2}}));
  Metric<ExactNum> square(std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
  EXPECT_EQ(minimum_spanning_tree(square, 0).network(), Network::star(5, 4));
}

TEST(MinimumSpanningTreeTest, MatchesEnumerationAndBoundsEveryTree) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto pts = testing::random_points(seed <= 5 ? 8 : 6, seed, ArithmeticMode::Float);
    Metric<double> m(pts);
    double mst = cost(minimum_spanning_tree(m, 0), m);
    double best = 1e300;
    enumerate_spanning_trees(pts.size(), 0, [&](const Tree& t) {
      double c = cost(t, m);
      EXPECT_GE(c, mst * (1 - 1e-12));
      best = std::min(best, c);
    });
    EXPECT_NEAR(best, mst, 1e-9 * mst);
  }
}

TEST(MinimumSpanningTreeTest, CutPropertySpotCheck) {
  auto pts = testing::random_points(25, 77, ArithmeticMode::Float);
  Metric<double> m(pts);
  Tree mst = minimum_spanning_tree(m, 0);
  double base = cost(mst, m);
  std::vector<Vertex> parent = mst.parents();
  for (Vertex v = 1; v < 25; ++v) {
    // Removing (v, parent(v)) splits off v's subtree; every reconnection
    // across that cut is at least as long.
    std::vector<char> below(25, 0);
    for (Vertex u = 0; u < 25; ++u) {
      for (Vertex w = u; w != kNoParent; w = parent[w]) {
        if (w == v) {
          below[u] = 1;
          break;
        }
      }
    }
    for (Vertex a = 0; a < 25; ++a) {
      for (Vertex b = 0; b < 25; ++b) {
        if (below[a] && !below[b]) {
          EXPECT_GE(base - m(v, parent[v]) + m(a, b), base - 1e-9);
        }
      }
    }
  }
}

}  // namespace
}  // namespace dtk
