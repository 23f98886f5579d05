// Exhaustive check over all 10^8 spanning trees of a two-item artifact:
// no tree within the delay bound is cheaper than the best regular tree.
// Runs in floating point with a relative tolerance far below the gaps the
// reduction creates (about 1/(2 L) of the total length).

#include <gtest/gtest.h>

#include "dtk/exact_solver.hpp"
#include "dtk/reduction.hpp"

namespace dtk::reduction {
namespace {

TEST(RegularBestEnumerationTest, TwoItemArtifact) {
  auto art = build_reduction(knapsack::KnapsackInstance({{1, 1}, {2, 3}}, 2, 3));
  Metric<double> m(art.instance);
  const double delta = art.delta.get_d();
  const std::size_t n = art.instance.size();

  double best_regular = 1e300;
  for (int code = 0; code < 9; ++code) {
    std::vector<Drop> drops{static_cast<Drop>(code % 3), static_cast<Drop>(code / 3)};
    Tree t = regular_tree(art, drops);
    if (delay(t, m) <= delta) best_regular = std::min(best_regular, cost(t, m));
  }
  ASSERT_LT(best_regular, 1e300);

  std::uint64_t feasible = 0, beating = 0;
  double best_any = 1e300;
  auto count = enumerate_spanning_trees(n, 0, [&](const Tree& t) {
    auto dist = root_distances(t, m);
    for (Vertex v = 1; v < n; ++v) {
      if (dist[v] > delta * m(0, v) * (1 + 1e-12)) return;
    }
    ++feasible;
    double c = cost(t, m);
    best_any = std::min(best_any, c);
    if (c < best_regular * (1 - 1e-12)) ++beating;
  });
  EXPECT_EQ(count, 100000000u);
  EXPECT_GT(feasible, 0u);
  EXPECT_EQ(beating, 0u);
  EXPECT_NEAR(best_any, best_regular, 1e-12 * best_regular);
}

}  // namespace
}  // namespace dtk::reduction
