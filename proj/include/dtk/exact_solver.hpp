#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "dtk/approx.hpp"
#include "dtk/network.hpp"

namespace dtk {

/// Largest n accepted by enumerate_spanning_trees by default.
inline constexpr std::size_t kEnumerationGuard = 10;
/// Default size guard of solve_exact.
inline constexpr std::size_t kSolverGuard = 14;

/// Visits every spanning tree of the complete graph on n vertices exactly
/// once (Pruefer-sequence enumeration), each rooted at `root`. Returns the
/// number of trees, n^(n-2). Throws GuardExceeded when n > max_n.
std::uint64_t enumerate_spanning_trees(std::size_t n, Vertex root,
                                       const std::function<void(const Tree&)>& visitor,
                                       std::size_t max_n = kEnumerationGuard);

/// The delay constraint d_T(r,v) <= delta*|rv| in the form every solver and
/// oracle evaluates it.
template <class Num>
bool within_delay(const Num& root_distance, const Num& delta, const Num& root_length) {
  return root_distance <= delta * root_length;
}

struct SolveOptions {
  std::size_t max_n = kSolverGuard;
  std::optional<Rational> delta;       // overrides the instance's delta
  std::optional<Rational> cost_bound;  // overrides the instance's cost bound
  bool stop_at_first_feasible = false; // decide instead of optimize
  unsigned threads = 1;
};

enum class SolveStatus { Feasible, Infeasible };

template <class Num>
struct ExactResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Tree> tree;
  std::optional<Num> cost;
  std::uint64_t nodes_explored = 0;
  bool proof_of_optimality = false;
};

namespace detail {

struct SharedBound {
  std::atomic<double> cost_hi{std::numeric_limits<double>::infinity()};
  std::atomic<std::size_t> first_feasible_task{std::numeric_limits<std::size_t>::max()};

  void offer(double hi) {
    double cur = cost_hi.load();
    while (hi < cur && !cost_hi.compare_exchange_weak(cur, hi)) {
    }
  }
};

/// Branch and bound over spanning trees grown outward from the root.
///
/// Each node is a subtree containing r plus a set of excluded edges. The
/// shortest frontier edge (u in tree, v outside) is branched on: include it
/// (v joins with its final root distance) or exclude it. Every spanning
/// tree is reached by exactly one path. Prunes:
///   (a) partial cost + MST of the contracted remainder exceeds the bound;
///   (b) some outside v cannot reach r within delta|rv| even by a straight
///       hop from the best tree vertex (triangle inequality).
/// Both prunes work on certified double lower/upper bounds; every accept or
/// reject of an actual tree goes through exact comparisons.
template <class Num>
class TreeSearch {
 public:
  using Traits = NumTraits<Num>;

  TreeSearch(const Metric<Num>& metric, Vertex root, const Num& delta,
             const std::optional<Num>& cost_bound, bool first_feasible, SharedBound* shared)
      : metric_(metric),
        n_(metric.size()),
        root_(root),
        cost_bound_(cost_bound),
        first_feasible_(first_feasible),
        shared_(shared) {
    len_lo_.resize(n_ * n_);
    rank_.resize(n_ * n_);
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (u != v) len_lo_[u * n_ + v] = Traits::lower(metric(u, v));
        if (u < v) pairs.push_back({u, v});
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [&](const Edge& a, const Edge& b) {
      return compare_num(metric(a.u, a.v), metric(b.u, b.v)) < 0;
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      rank_[pairs[i].u * n_ + pairs[i].v] = rank_[pairs[i].v * n_ + pairs[i].u] = i;
    }
    reach_limit_.resize(n_);
    reach_limit_hi_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (v == root_) continue;
      reach_limit_[v] = delta * metric(root_, v);
      reach_limit_hi_[v] = Traits::upper(reach_limit_[v]);
    }
    cost_bound_hi_ = cost_bound_ ? Traits::upper(*cost_bound_)
                                 : std::numeric_limits<double>::infinity();
    reset();
  }

  void reset() {
    in_tree_.assign(n_, 0);
    excluded_.assign(n_ * n_, 0);
    parent_.assign(n_, kNoParent);
    dist_.assign(n_, Num{});
    dist_lo_.assign(n_, 0.0);
    in_tree_[root_] = 1;
    tree_size_ = 1;
    cost_ = Num{};
    cost_lo_ = 0.0;
    path_.clear();
    stopped_ = false;
  }

  void seed_incumbent(const Tree& tree, const Num& cost) {
    best_tree_ = tree;
    best_cost_ = cost;
  }

  /// Explores the whole subtree below the current node.
  void run() { dfs(std::numeric_limits<std::size_t>::max(), nullptr); }

  /// Explores down to `depth` decisions and records surviving node paths.
  void split(std::size_t depth, std::vector<std::vector<char>>* out) { dfs(depth, out); }

  /// Re-applies a recorded decision path from the root node. Returns false
  /// if the path no longer applies.
  bool replay(const std::vector<char>& path) {
    reset();
    for (char include : path) {
      auto edge = branching_edge();
      if (!edge) return false;
      if (include) {
        Num nd = dist_[edge->u] + metric_(edge->u, edge->v);
        if (!within_delay_limit(nd, edge->v)) return false;
        apply_include(edge->u, edge->v, std::move(nd));
      } else {
        set_excluded(edge->u, edge->v, 1);
        path_.push_back(0);
      }
    }
    return true;
  }

  void cancel_when(std::function<bool()> predicate) { cancelled_ = std::move(predicate); }

  bool found_feasible() const { return first_feasible_ && found_; }
  const std::optional<Tree>& best_tree() const { return best_tree_; }
  const std::optional<Num>& best_cost() const { return best_cost_; }
  std::uint64_t nodes() const { return nodes_; }
  bool stopped() const { return stopped_; }

 private:
  bool within_delay_limit(const Num& dist, Vertex v) const {
    return dist <= reach_limit_[v];
  }

  double bound_hi() const {
    double b = cost_bound_hi_;
    if (!first_feasible_) {
      if (best_cost_) b = std::min(b, Traits::upper(*best_cost_));
      if (shared_) b = std::min(b, shared_->cost_hi.load(std::memory_order_relaxed));
    }
    return b;
  }

  std::optional<Edge> branching_edge() const {
    std::optional<Edge> best;
    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    for (Vertex u = 0; u < n_; ++u) {
      if (!in_tree_[u]) continue;
      for (Vertex v = 0; v < n_; ++v) {
        if (in_tree_[v] || excluded_[u * n_ + v]) continue;
        std::size_t r = rank_[u * n_ + v];
        if (r < best_rank) {
          best_rank = r;
          best = Edge{u, v};
        }
      }
    }
    return best;
  }

  // Lower bound on the cost still to be added: MST of the graph whose tree
  // part is contracted to one vertex, using only non-excluded edges.
  // Infinity if the remaining edges cannot connect everything.
  double remainder_mst_lo() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> key(n_, inf);
    std::vector<char> done(in_tree_);
    for (Vertex v = 0; v < n_; ++v) {
      if (done[v]) continue;
      for (Vertex u = 0; u < n_; ++u) {
        if (in_tree_[u] && !excluded_[u * n_ + v]) key[v] = std::min(key[v], len_lo_[u * n_ + v]);
      }
    }
    double total = 0.0;
    for (std::size_t step = tree_size_; step < n_; ++step) {
      Vertex best = kNoParent;
      for (Vertex v = 0; v < n_; ++v) {
        if (!done[v] && (best == kNoParent || key[v] < key[best])) best = v;
      }
      if (key[best] == inf) return inf;
      total += key[best];
      done[best] = 1;
      for (Vertex v = 0; v < n_; ++v) {
        if (!done[v] && !excluded_[best * n_ + v]) key[v] = std::min(key[v], len_lo_[best * n_ + v]);
      }
    }
    return total;
  }

  bool delay_lookahead_fails() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (in_tree_[v]) continue;
      double reach = std::numeric_limits<double>::infinity();
      for (Vertex u = 0; u < n_; ++u) {
        if (in_tree_[u]) reach = std::min(reach, dist_lo_[u] + len_lo_[u * n_ + v]);
      }
      if (reach * (1.0 - 1e-12) > reach_limit_hi_[v]) return true;
    }
    return false;
  }

  void apply_include(Vertex u, Vertex v, Num dist) {
    assert(!(dist < dist_[u]));  // root distances never shrink as the tree grows
    in_tree_[v] = 1;
    parent_[v] = u;
    dist_lo_[v] = Traits::lower(dist);
    dist_[v] = std::move(dist);
    ++tree_size_;
    cost_ = cost_ + metric_(u, v);
    cost_lo_ = Traits::lower(cost_);
    path_.push_back(1);
  }

  void set_excluded(Vertex u, Vertex v, char flag) {
    excluded_[u * n_ + v] = excluded_[v * n_ + u] = flag;
  }

  void on_complete() {
    if (cost_bound_ && cost_ > *cost_bound_) return;
    Tree tree(root_, parent_);
    if (first_feasible_) {
      best_tree_ = std::move(tree);
      best_cost_ = cost_;
      found_ = true;
      stopped_ = true;
      return;
    }
    if (best_cost_) {
      int c = compare_num(cost_, *best_cost_);
      if (c > 0 || (c == 0 && !(tree < *best_tree_))) return;
    }
    best_tree_ = std::move(tree);
    best_cost_ = cost_;
    if (shared_) shared_->offer(Traits::upper(cost_));
  }

  void dfs(std::size_t depth, std::vector<std::vector<char>>* record) {
    if (stopped_) return;
    if (cancelled_ && (nodes_ & 63) == 0 && cancelled_()) {
      stopped_ = true;
      return;
    }
    ++nodes_;
    if (tree_size_ == n_) {
      if (record) {
        record->push_back(path_);
      } else {
        on_complete();
      }
      return;
    }
    if (delay_lookahead_fails()) return;
    double remainder = remainder_mst_lo();
    if (remainder == std::numeric_limits<double>::infinity()) return;
    double bound = bound_hi();
    if ((cost_lo_ + remainder) * (1.0 - 1e-12) > bound) return;
    if (record && path_.size() >= depth) {
      record->push_back(path_);
      return;
    }
    auto edge = branching_edge();
    if (!edge) return;
    const Vertex u = edge->u;
    const Vertex v = edge->v;

    Num nd = dist_[u] + metric_(u, v);
    if (within_delay_limit(nd, v)) {
      Num saved_cost = cost_;
      double saved_cost_lo = cost_lo_;
      apply_include(u, v, std::move(nd));
      dfs(depth, record);
      path_.pop_back();
      --tree_size_;
      in_tree_[v] = 0;
      parent_[v] = kNoParent;
      dist_[v] = Num{};
      dist_lo_[v] = 0.0;
      cost_ = std::move(saved_cost);
      cost_lo_ = saved_cost_lo;
      if (stopped_) return;
    }

    set_excluded(u, v, 1);
    path_.push_back(0);
    dfs(depth, record);
    path_.pop_back();
    set_excluded(u, v, 0);
  }

  const Metric<Num>& metric_;
  std::size_t n_;
  Vertex root_;
  std::optional<Num> cost_bound_;
  double cost_bound_hi_;
  bool first_feasible_;
  SharedBound* shared_;
  std::function<bool()> cancelled_;

  std::vector<double> len_lo_;
  std::vector<std::size_t> rank_;
  std::vector<Num> reach_limit_;
  std::vector<double> reach_limit_hi_;

  std::vector<char> in_tree_;
  std::vector<char> excluded_;
  std::vector<Vertex> parent_;
  std::vector<Num> dist_;
  std::vector<double> dist_lo_;
  std::size_t tree_size_ = 1;
  Num cost_{};
  double cost_lo_ = 0.0;
  std::vector<char> path_;

  std::optional<Tree> best_tree_;
  std::optional<Num> best_cost_;
  bool found_ = false;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Minimum-cost spanning tree with delay <= delta, or, with
/// `stop_at_first_feasible`, any tree meeting both delta and the cost bound.
///
/// The result is deterministic for every thread count: optimal ties resolve
/// to the smallest parent vector, and in decision mode the witness is the
/// first one in serial search order.
template <class Num>
ExactResult<Num> solve_exact(const Instance& instance, const Metric<Num>& metric,
                             const SolveOptions& options = {}) {
  using Traits = NumTraits<Num>;
  const std::size_t n = instance.size();
  if (n > options.max_n || n > 64) {
    throw GuardExceeded("exact solver refuses n = " + std::to_string(n) + " > guard " +
                        std::to_string(std::min<std::size_t>(options.max_n, 64)));
  }
  const Rational delta_q = options.delta.value_or(instance.delta());
  const std::optional<Rational> bound_q =
      options.cost_bound ? options.cost_bound : instance.cost_bound();
  const Vertex root = instance.root();

  ExactResult<Num> result;
  result.proof_of_optimality = true;
  if (n == 1) {
    if (!bound_q || *bound_q >= 0) {
      result.status = SolveStatus::Feasible;
      result.tree = Tree(root, {kNoParent});
      result.cost = Num{};
    }
    return result;
  }
  if (delta_q < 1) return result;

  const Num delta = Traits::from_rational(delta_q);
  std::optional<Num> bound;
  if (bound_q) bound = Traits::from_rational(*bound_q);

  // Incumbent: the cheaper of the approximation tree (if delta > 1) and the star.
  auto feasible_tree = [&](const Tree& t) {
    auto dist = root_distances(t, metric);
    for (Vertex v = 0; v < n; ++v) {
      if (v != root && !within_delay(dist[v], delta, metric(root, v))) return false;
    }
    return true;
  };
  Tree incumbent = Tree::from_network(Network::star(n, root), root);
  Num incumbent_cost = cost(incumbent, metric);
  if (delta_q > 1) {
    Instance relaxed = instance.with_delta(delta_q);
    Tree t = approximate(relaxed, metric).tree;
    Num c = cost(t, metric);
    int cmp = detail::compare_num(c, incumbent_cost);
    if (feasible_tree(t) && (cmp < 0 || (cmp == 0 && t < incumbent))) {
      incumbent = std::move(t);
      incumbent_cost = std::move(c);
    }
  }
  const bool incumbent_within_bound = !bound || incumbent_cost <= *bound;
  if (options.stop_at_first_feasible && incumbent_within_bound) {
    result.status = SolveStatus::Feasible;
    result.tree = incumbent;
    result.cost = incumbent_cost;
    result.proof_of_optimality = false;
    return result;
  }

  auto make_search = [&](detail::SharedBound* shared) {
    detail::TreeSearch<Num> search(metric, root, delta, bound, options.stop_at_first_feasible,
                                   shared);
    if (!options.stop_at_first_feasible && incumbent_within_bound) {
      search.seed_incumbent(incumbent, incumbent_cost);
    }
    return search;
  };

  std::optional<Tree> best_tree;
  std::optional<Num> best_cost;
  bool early_stop = false;

  if (options.threads <= 1) {
    auto search = make_search(nullptr);
    search.run();
    result.nodes_explored = search.nodes();
    best_tree = search.best_tree();
    best_cost = search.best_cost();
    early_stop = search.found_feasible();
  } else {
    detail::SharedBound shared;
    if (!options.stop_at_first_feasible && incumbent_within_bound) {
      shared.offer(Traits::upper(incumbent_cost));
    }
    std::vector<std::vector<char>> tasks;
    {
      auto splitter = make_search(nullptr);
      splitter.split(8, &tasks);
      result.nodes_explored += splitter.nodes();
    }
    struct TaskResult {
      std::optional<Tree> tree;
      std::optional<Num> cost;
      std::uint64_t nodes = 0;
      bool found = false;
    };
    std::vector<TaskResult> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        if (options.stop_at_first_feasible && i > shared.first_feasible_task.load()) continue;
        auto search = make_search(&shared);
        if (options.stop_at_first_feasible) {
          search.cancel_when([&shared, i] { return shared.first_feasible_task.load() < i; });
        }
        if (!search.replay(tasks[i])) continue;
        search.run();
        outcomes[i].nodes = search.nodes();
        outcomes[i].tree = search.best_tree();
        outcomes[i].cost = search.best_cost();
        if (search.found_feasible()) {
          outcomes[i].found = true;
          std::size_t cur = shared.first_feasible_task.load();
          while (i < cur && !shared.first_feasible_task.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (auto& o : outcomes) result.nodes_explored += o.nodes;
    if (options.stop_at_first_feasible) {
      for (auto& o : outcomes) {
        if (o.found) {
          best_tree = o.tree;
          best_cost = o.cost;
          early_stop = true;
          break;
        }
      }
    } else {
      if (incumbent_within_bound) {
        best_tree = incumbent;
        best_cost = incumbent_cost;
      }
      for (auto& o : outcomes) {
        if (!o.cost) continue;
        int c = best_cost ? detail::compare_num(*o.cost, *best_cost) : -1;
        if (c < 0 || (c == 0 && *o.tree < *best_tree)) {
          best_tree = o.tree;
          best_cost = o.cost;
        }
      }
    }
  }

  if (best_tree) {
    result.status = SolveStatus::Feasible;
    result.cost = cost(*best_tree, metric);
    result.tree = std::move(best_tree);
  }
  result.proof_of_optimality = !early_stop;
  return result;
}

}  // namespace dtk
