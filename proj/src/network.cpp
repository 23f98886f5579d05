#include "dtk/network.hpp"

#include <algorithm>

namespace dtk {

Network::Network(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw UsageError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") out of range for " + std::to_string(n_) + " vertices");
    }
    if (e.u == e.v) throw UsageError("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw UsageError("duplicate edge (" + std::to_string(dup->u) + ", " +
                     std::to_string(dup->v) + ")");
  }
}

Network Network::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Network(n, std::move(edges));
}

Network Network::star(std::size_t n, Vertex root) {
  if (root >= n) throw UsageError("star root out of range");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (v != root) edges.push_back(make_edge(root, v));
  return Network(n, std::move(edges));
}

std::vector<std::vector<Vertex>> Network::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::size_t Network::max_degree() const {
  std::vector<std::size_t> degree(n_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

Tree::Tree(Vertex root, std::vector<Vertex> parent) : root_(root), parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  if (root_ >= n) throw UsageError("tree root out of range");
  if (parent_[root_] != kNoParent) throw UsageError("tree root must not have a parent");
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == root_) continue;
    if (parent_[v] >= n) {
      throw UsageError("vertex " + std::to_string(v) + " has no valid parent");
    }
    if (parent_[v] == v) throw UsageError("vertex " + std::to_string(v) + " is its own parent");
    children[parent_[v]].push_back(v);
  }
  order_.reserve(n);
  order_.push_back(root_);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (Vertex c : children[order_[i]]) order_.push_back(c);
  }
  if (order_.size() != n) throw UsageError("parent map contains a cycle");
}

Tree Tree::from_network(const Network& network, Vertex root) {
  const std::size_t n = network.size();
  if (network.edges().size() + 1 != n) {
    throw UsageError("network with " + std::to_string(network.edges().size()) +
                     " edges is not a spanning tree on " + std::to_string(n) + " vertices");
  }
  if (root >= n) throw UsageError("tree root out of range");
  auto adj = network.adjacency();
  std::vector<Vertex> parent(n, kNoParent);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{root};
  seen[root] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : adj[queue[i]]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = queue[i];
      queue.push_back(w);
    }
  }
  if (queue.size() != n) throw UsageError("network is not connected, so not a spanning tree");
  return Tree(root, std::move(parent));
}

Network Tree::network() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < size(); ++v)
    if (v != root_) edges.push_back(make_edge(v, parent_[v]));
  return Network(size(), std::move(edges));
}

}  // namespace dtk
