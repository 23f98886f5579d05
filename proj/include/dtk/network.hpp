#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "dtk/errors.hpp"
#include "dtk/instance.hpp"
#include "dtk/metric.hpp"

namespace dtk {

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with endpoints ordered u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected straight-line graph on vertices 0..n-1. Edge weights are never
/// stored; they come from a Metric over the companion instance.
class Network {
 public:
  /// Edges are normalized and sorted. Throws UsageError on self-loops,
  /// duplicates or out-of-range endpoints.
  Network(std::size_t n, std::vector<Edge> edges);

  static Network complete(std::size_t n);
  static Network star(std::size_t n, Vertex root);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::vector<Vertex>> adjacency() const;
  std::size_t max_degree() const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

inline constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();

/// Spanning tree rooted at `root`, stored as a parent map. The parent vector
/// doubles as the canonical encoding used for deterministic tie-breaking.
class Tree {
 public:
  /// parent[root] must be kNoParent. Throws UsageError unless the map is
  /// acyclic and reaches the root from every vertex.
  Tree(Vertex root, std::vector<Vertex> parent);

  /// Throws UsageError unless `network` is a spanning tree.
  static Tree from_network(const Network& network, Vertex root);

  std::size_t size() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& parents() const { return parent_; }
  /// Vertices ordered so that every parent precedes its children.
  const std::vector<Vertex>& order() const { return order_; }
  Network network() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }
  friend bool operator<(const Tree& a, const Tree& b) { return a.parent_ < b.parent_; }

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
};

template <class Num>
Num cost(const Network& network, const Metric<Num>& metric) {
  Num total{};
  for (const Edge& e : network.edges()) total = total + metric(e.u, e.v);
  return total;
}

template <class Num>
Num cost(const Tree& tree, const Metric<Num>& metric) {
  Num total{};
  for (Vertex v : tree.order()) {
    if (v != tree.root()) total = total + metric(v, tree.parent(v));
  }
  return total;
}

/// d_T(r, v) for every vertex, accumulated root-first along parent links.
template <class Num>
std::vector<Num> root_distances(const Tree& tree, const Metric<Num>& metric) {
  std::vector<Num> dist(tree.size());
  for (Vertex v : tree.order()) {
    if (v != tree.root()) dist[v] = dist[tree.parent(v)] + metric(v, tree.parent(v));
  }
  return dist;
}

/// d_T(r, v) / |rv| per vertex; the root's entry is 1 by convention.
template <class Num>
std::vector<Num> vertex_dilations(const Tree& tree, const Metric<Num>& metric) {
  std::vector<Num> dist = root_distances(tree, metric);
  std::vector<Num> out(tree.size(), NumTraits<Num>::from_rational(1));
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (v != tree.root()) out[v] = dist[v] / metric(tree.root(), v);
  }
  return out;
}

/// Delay max_{v != r} d_T(r,v)/|rv|; 1 for a single-vertex tree.
template <class Num>
Num delay(const Tree& tree, const Metric<Num>& metric) {
  std::vector<Num> dil = vertex_dilations(tree, metric);
  Num best = NumTraits<Num>::from_rational(1);
  bool first = true;
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (v == tree.root()) continue;
    if (first || dil[v] > best) best = dil[v];
    first = false;
  }
  return best;
}

namespace detail {

inline int compare_num(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }
inline int compare_num(const ExactNum& a, const ExactNum& b) { return compare(a, b); }

template <class Num>
struct HeapEntry {
  Num dist;
  Vertex v;
  friend bool operator>(const HeapEntry& a, const HeapEntry& b) {
    int c = compare_num(a.dist, b.dist);
    return c > 0 || (c == 0 && a.v > b.v);
  }
};

}  // namespace detail

/// Single-source shortest paths (binary-heap Dijkstra). Entries stay empty
/// for unreachable vertices and, when `bound` is given, for vertices farther
/// than it. `pred` receives predecessors; equal-length alternatives resolve
/// to the smaller predecessor index.
template <class Num>
std::vector<std::optional<Num>> shortest_path_distances(
    const std::vector<std::vector<Vertex>>& adjacency, Vertex source, const Metric<Num>& metric,
    const std::type_identity_t<std::optional<Num>>& bound = std::nullopt,
    std::vector<Vertex>* pred = nullptr,
    std::optional<Vertex> target = std::nullopt) {
  const std::size_t n = adjacency.size();
  std::vector<std::optional<Num>> dist(n);
  std::vector<char> done(n, 0);
  if (pred) pred->assign(n, kNoParent);
  using Entry = detail::HeapEntry<Num>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  dist[source] = Num{};
  heap.push({Num{}, source});
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    Vertex u = top.v;
    if (done[u]) continue;
    done[u] = 1;
    if (target && u == *target) break;
    for (Vertex w : adjacency[u]) {
      if (done[w]) continue;
      Num nd = *dist[u] + metric(u, w);
      if (bound && nd > *bound) continue;
      int c = dist[w] ? detail::compare_num(nd, *dist[w]) : -1;
      if (c < 0 || (c == 0 && pred && u < (*pred)[w])) {
        if (c < 0) heap.push({nd, w});
        dist[w] = std::move(nd);
        if (pred) (*pred)[w] = u;
      }
    }
  }
  if (bound || target) {
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && !(target && v == *target)) dist[v].reset();
  }
  return dist;
}

/// Shortest-path tree of `network` from `root`. Throws DisconnectedError
/// naming an unreachable vertex.
template <class Num>
Tree shortest_path_tree(const Network& network, Vertex root, const Metric<Num>& metric) {
  std::vector<Vertex> pred;
  auto dist = shortest_path_distances(network.adjacency(), root, metric, std::nullopt, &pred);
  for (Vertex v = 0; v < network.size(); ++v) {
    if (!dist[v]) {
      throw DisconnectedError(v, "network is disconnected: vertex " + std::to_string(v) +
                                     " is unreachable from " + std::to_string(root));
    }
  }
  return Tree(root, std::move(pred));
}

template <class Num>
struct DilationResult {
  std::optional<Num> value;  // empty means +infinity (disconnected)
  Vertex u = 0;              // pair attaining the maximum, or an unreachable pair
  Vertex v = 0;
  std::string diagnostic;

  bool connected() const { return value.has_value(); }
};

/// max over unordered pairs of d_N(u,v)/|uv|; 1 for fewer than two vertices.
template <class Num>
DilationResult<Num> dilation_all_pairs(const Network& network, const Metric<Num>& metric) {
  DilationResult<Num> result;
  result.value = NumTraits<Num>::from_rational(1);
  auto adjacency = network.adjacency();
  bool first = true;
  for (Vertex u = 0; u < network.size(); ++u) {
    auto dist = shortest_path_distances(adjacency, u, metric);
    for (Vertex v = u + 1; v < network.size(); ++v) {
      if (!dist[v]) {
        result.value.reset();
        result.u = u;
        result.v = v;
        result.diagnostic = "network is disconnected: no path between " + std::to_string(u) +
                            " and " + std::to_string(v);
        return result;
      }
      Num ratio = *dist[v] / metric(u, v);
      if (first || ratio > *result.value) {
        result.value = std::move(ratio);
        result.u = u;
        result.v = v;
        first = false;
      }
    }
  }
  return result;
}

/// Euclidean minimum spanning tree by Prim on the complete graph, O(n^2).
/// Ties between equal-length edges go to the lexicographically smaller edge.
template <class Num>
Tree minimum_spanning_tree(const Metric<Num>& metric, Vertex root) {
  const std::size_t n = metric.size();
  std::vector<Vertex> parent(n, kNoParent);
  std::vector<char> in_tree(n, 0);
  std::vector<std::optional<Num>> key(n);
  in_tree[root] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root) {
      key[v] = metric(root, v);
      parent[v] = root;
    }
  }
  for (std::size_t step = 1; step < n; ++step) {
    Vertex best = kNoParent;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (best == kNoParent) {
        best = v;
        continue;
      }
      int c = detail::compare_num(*key[v], *key[best]);
      if (c < 0 || (c == 0 && make_edge(parent[v], v) < make_edge(parent[best], best))) best = v;
    }
    in_tree[best] = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const Num& w = metric(best, v);
      int c = detail::compare_num(w, *key[v]);
      if (c < 0 || (c == 0 && make_edge(best, v) < make_edge(parent[v], v))) {
        key[v] = w;
        parent[v] = best;
      }
    }
  }
  return Tree(root, std::move(parent));
}

}  // namespace dtk
