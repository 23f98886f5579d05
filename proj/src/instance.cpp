#include "dtk/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dtk/errors.hpp"
#include "dtk/radical_sum.hpp"

namespace dtk {

std::string to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::Float ? "float" : "exact";
}

Rational squared_distance(const Point& u, const Point& v) {
  Rational dx = u.x - v.x;
  Rational dy = u.y - v.y;
  return dx * dx + dy * dy;
}

double distance(const Point& u, const Point& v) {
  return std::hypot(u.x.get_d() - v.x.get_d(), u.y.get_d() - v.y.get_d());
}

std::pair<Rational, Rational> enclose_distance(const Point& u, const Point& v, unsigned bits) {
  return RadicalSum::sqrt(squared_distance(u, v)).enclose(bits);
}

Instance::Instance(ArithmeticMode mode, std::vector<Point> points, Vertex root,
                   Rational delta, std::optional<Rational> cost_bound)
    : mode_(mode),
      points_(std::move(points)),
      root_(root),
      delta_(std::move(delta)),
      cost_bound_(std::move(cost_bound)) {
  if (points_.empty()) throw UsageError("instance has no points");
  // Float mode holds every value as the double it will be computed with.
  auto settle = [this](Rational& value) {
    value.canonicalize();
    if (mode_ == ArithmeticMode::Float) value = rational_from_double(value.get_d());
  };
  for (Point& p : points_) {
    settle(p.x);
    settle(p.y);
  }
  settle(delta_);
  if (cost_bound_) settle(*cost_bound_);
  if (root_ >= points_.size()) {
    throw UsageError("root out of range: " + std::to_string(root_) + " >= " +
                     std::to_string(points_.size()));
  }
  if (delta_ < 1) throw UsageError("delta must be >= 1, got " + format_rational(delta_));
  if (cost_bound_ && *cost_bound_ < 0) throw UsageError("cost bound must be >= 0");

  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const Point& p = points_[a];
    const Point& q = points_[b];
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i - 1]] == points_[order[i]]) {
      auto [a, b] = std::minmax(order[i - 1], order[i]);
      throw UsageError("duplicate point: indices " + std::to_string(a) + " and " +
                       std::to_string(b));
    }
  }
}

Instance Instance::with_delta(Rational delta) const {
  return Instance(mode_, points_, root_, std::move(delta), cost_bound_);
}

Instance Instance::with_cost_bound(std::optional<Rational> bound) const {
  return Instance(mode_, points_, root_, delta_, std::move(bound));
}

Instance Instance::with_mode(ArithmeticMode mode) const {
  return Instance(mode, points_, root_, delta_, cost_bound_);
}

}  // namespace dtk
