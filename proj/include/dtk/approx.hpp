#pragma once

#include <optional>

#include "dtk/spanner.hpp"

namespace dtk {

/// Spanner-then-shortest-path-tree approximation for one instance.
template <class Num>
struct ApproxResult {
  Tree tree;
  std::optional<SpannerReport<Num>> spanner_report;  // empty when the star was used
  Num delay;
  Num cost;
  Num mst_cost;
  double cost_ratio = 1.0;  // cost / mst_cost
  bool used_star = false;   // delta <= 1: the star is the exact optimum
};

/// Builds a greedy delta-spanner and returns its shortest-path tree from the
/// root; d_T(r,v) = d_G(r,v) <= delta|rv| for every v. For delta <= 1 the
/// star is returned instead and flagged.
template <class Num>
ApproxResult<Num> approximate(const Instance& instance, const Metric<Num>& metric) {
  using Traits = NumTraits<Num>;
  const Vertex root = instance.root();
  std::optional<SpannerReport<Num>> report;
  std::optional<Tree> tree;
  bool used_star = instance.delta() <= 1 || instance.size() < 2;
  if (used_star) {
    tree = Tree::from_network(Network::star(instance.size(), root), root);
  } else {
    report = greedy_spanner(metric, Traits::from_rational(instance.delta()));
    tree = shortest_path_tree(report->network, root, metric);
  }
  Num tree_cost = cost(*tree, metric);
  Num mst_cost = cost(minimum_spanning_tree(metric, root), metric);
  double mst = Traits::approx(mst_cost);
  ApproxResult<Num> result{*tree,      std::move(report),
                           delay(*tree, metric), tree_cost,
                           mst_cost,   mst > 0 ? Traits::approx(tree_cost) / mst : 1.0,
                           used_star && instance.size() >= 2};
  return result;
}

}  // namespace dtk
