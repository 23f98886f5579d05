#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dtk/network.hpp"

namespace dtk {

/// Output of a spanner construction with its measured size constants:
/// edge count, maximum degree and cost relative to the MST.
template <class Num>
struct SpannerReport {
  Network network;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  double cost_ratio = 1.0;  // cost(G) / cost(MST); 1 when the MST is empty
  std::string construction;
};

/// Classical greedy delta-spanner: scan all pairs by increasing length
/// (ties lexicographic) and add (u,v) iff the current graph has no u-v path
/// of length <= delta*|uv|. Guarantees dilation <= delta for every pair.
/// Throws UsageError unless delta > 1.
template <class Num>
SpannerReport<Num> greedy_spanner(const Metric<Num>& metric, const Num& delta) {
  const std::size_t n = metric.size();
  if (!(delta > NumTraits<Num>::from_rational(1))) {
    throw UsageError("greedy spanner needs delta > 1; use the star for delta = 1");
  }
  std::vector<Edge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Edge& a, const Edge& b) {
    return detail::compare_num(metric(a.u, a.v), metric(b.u, b.v)) < 0;
  });

  std::vector<std::vector<Vertex>> adjacency(n);
  std::vector<Edge> chosen;
  for (const Edge& e : pairs) {
    Num limit = delta * metric(e.u, e.v);
    auto dist = shortest_path_distances(adjacency, e.u, metric, std::optional<Num>(limit),
                                        nullptr, std::optional<Vertex>(e.v));
    if (dist[e.v]) continue;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
    chosen.push_back(e);
  }

  SpannerReport<Num> report{Network(n, std::move(chosen)), 0, 0, 1.0, "greedy"};
  report.edge_count = report.network.edges().size();
  report.max_degree = report.network.max_degree();
  double mst = NumTraits<Num>::approx(cost(minimum_spanning_tree(metric, 0), metric));
  double total = NumTraits<Num>::approx(cost(report.network, metric));
  report.cost_ratio = mst > 0 ? total / mst : 1.0;
  return report;
}

}  // namespace dtk
