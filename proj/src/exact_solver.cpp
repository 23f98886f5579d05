#include "dtk/exact_solver.hpp"

namespace dtk {

std::uint64_t enumerate_spanning_trees(std::size_t n, Vertex root,
                                       const std::function<void(const Tree&)>& visitor,
                                       std::size_t max_n) {
  if (n > max_n) {
    throw GuardExceeded("spanning tree enumeration refuses n = " + std::to_string(n) +
                        " > guard " + std::to_string(max_n));
  }
  if (root >= n) throw UsageError("enumeration root out of range");
  if (n <= 2) {
    std::vector<Vertex> parent(n, root);
    parent[root] = kNoParent;
    visitor(Tree(root, parent));
    return 1;
  }

  const std::size_t len = n - 2;
  std::vector<Vertex> code(len, 0);
  std::vector<std::size_t> degree(n);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::uint64_t count = 0;

  for (;;) {
    // Decode the Pruefer sequence into edges.
    std::fill(degree.begin(), degree.end(), 1);
    for (Vertex x : code) ++degree[x];
    for (auto& list : adj) list.clear();
    for (Vertex x : code) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(x);
      adj[x].push_back(leaf);
      degree[leaf] = 0;
      --degree[x];
    }
    Vertex a = kNoParent;
    for (Vertex v = 0; v < n; ++v) {
      if (degree[v] != 1) continue;
      if (a == kNoParent) {
        a = v;
      } else {
        adj[a].push_back(v);
        adj[v].push_back(a);
        break;
      }
    }
    // Root it.
    parent.assign(n, kNoParent);
    queue.assign(1, root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      for (Vertex w : adj[u]) {
        if (w != root && parent[w] == kNoParent) {
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    visitor(Tree(root, parent));
    ++count;

    std::size_t pos = 0;
    while (pos < len && ++code[pos] == n) code[pos++] = 0;
    if (pos == len) break;
  }
  return count;
}

}  // namespace dtk
