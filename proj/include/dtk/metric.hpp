#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtk/instance.hpp"
#include "dtk/num_traits.hpp"

namespace dtk {

/// Pairwise Euclidean lengths of a point set, precomputed in one arithmetic.
///
/// A metric may be partial: entries that cannot be represented in `Num`
/// are left undefined and throw on access.
template <class Num>
class Metric {
 public:
  using Traits = NumTraits<Num>;

  explicit Metric(const Instance& instance) : Metric(instance.points()) {}

  explicit Metric(const std::vector<Point>& points) : n_(points.size()) {
    table_.resize(n_ * n_);
    defined_.assign(n_ * n_, 1);
    if constexpr (std::is_same_v<Num, double>) {
      std::vector<double> xs, ys;
      for (const Point& p : points) {
        xs.push_back(p.x.get_d());
        ys.push_back(p.y.get_d());
      }
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
          set(u, v, std::hypot(xs[u] - xs[v], ys[u] - ys[v]));
    } else {
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
          set(u, v, Traits::sqrt_of(squared_distance(points[u], points[v])));
    }
  }

  /// Builds from squared lengths; `squared(u, v)` returns nullopt for pairs
  /// that have no representation.
  static Metric from_squared(
      std::size_t n, const std::function<std::optional<Rational>(Vertex, Vertex)>& squared) {
    Metric m;
    m.n_ = n;
    m.table_.resize(n * n);
    m.defined_.assign(n * n, 0);
    for (Vertex u = 0; u < n; ++u) {
      m.defined_[u * n + u] = 1;
      for (Vertex v = u + 1; v < n; ++v) {
        if (auto sq = squared(u, v)) m.set(u, v, Traits::sqrt_of(*sq));
      }
    }
    return m;
  }

  std::size_t size() const { return n_; }

  bool defined(Vertex u, Vertex v) const { return defined_[u * n_ + v] != 0; }

  const Num& operator()(Vertex u, Vertex v) const {
    if (!defined_[u * n_ + v]) {
      throw std::domain_error("length of pair (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") is not representable");
    }
    return table_[u * n_ + v];
  }

 private:
  Metric() = default;

  void set(Vertex u, Vertex v, Num value) {
    table_[u * n_ + v] = value;
    table_[v * n_ + u] = std::move(value);
    defined_[u * n_ + v] = defined_[v * n_ + u] = 1;
  }

  std::size_t n_ = 0;
  std::vector<Num> table_;
  std::vector<char> defined_;
};

}  // namespace dtk
