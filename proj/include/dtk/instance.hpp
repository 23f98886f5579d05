#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtk/rational.hpp"

namespace dtk {

using Vertex = std::size_t;

enum class ArithmeticMode { Float, Exact };

std::string to_string(ArithmeticMode mode);

/// A planar point. Coordinates are always held exactly; in float mode they
/// are the dyadic rationals of the original doubles.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// |uv|^2, exact.
Rational squared_distance(const Point& u, const Point& v);

/// |uv| in floating point.
double distance(const Point& u, const Point& v);

/// Rational lo <= |uv| <= hi with `bits` fractional binary digits of
/// precision, rounded outward.
std::pair<Rational, Rational> enclose_distance(const Point& u, const Point& v, unsigned bits);

/// Point set S with source r, dilation bound delta and optional cost bound K.
/// Immutable once constructed; the constructor enforces the invariants.
/// Float-mode coordinates are truncated to doubles on entry.
class Instance {
 public:
  Instance(ArithmeticMode mode, std::vector<Point> points, Vertex root,
           Rational delta, std::optional<Rational> cost_bound = std::nullopt);

  ArithmeticMode mode() const { return mode_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Vertex root() const { return root_; }
  const Rational& delta() const { return delta_; }
  const std::optional<Rational>& cost_bound() const { return cost_bound_; }

  Instance with_delta(Rational delta) const;
  Instance with_cost_bound(std::optional<Rational> bound) const;
  Instance with_mode(ArithmeticMode mode) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  ArithmeticMode mode_;
  std::vector<Point> points_;
  Vertex root_;
  Rational delta_;
  std::optional<Rational> cost_bound_;
};

}  // namespace dtk
