#pragma once

#include <memory>
#include <string>

#include "dtk/radical_sum.hpp"
#include "dtk/rational.hpp"

namespace dtk {

namespace detail {
struct ExactNode;
}

/// Exact real number with a floating-point filter.
///
/// Every value carries a double interval [lower(), upper()] that is
/// guaranteed to contain it, plus a lazily evaluated expression DAG whose
/// exact value is a RadicalSum. Comparisons are settled by the intervals
/// when they are disjoint; only near-ties pay for exact evaluation.
///
/// Supported operations are the ones a geometric network needs: sums and
/// differences of Euclidean lengths, products, and division by a single
/// radical (a length or a rational).
class ExactNum {
 public:
  ExactNum() = default;  // zero
  explicit ExactNum(const Rational& value);
  explicit ExactNum(RadicalSum value);

  /// sqrt(value), value >= 0.
  static ExactNum sqrt(const Rational& value);

  double lower() const { return lo_; }
  double upper() const { return hi_; }
  double approx() const { return 0.5 * (lo_ + hi_); }

  RadicalSum exact() const;

  friend ExactNum operator+(const ExactNum& a, const ExactNum& b);
  friend ExactNum operator-(const ExactNum& a, const ExactNum& b);
  friend ExactNum operator*(const ExactNum& a, const ExactNum& b);
  /// `b` must evaluate to a single radical term.
  friend ExactNum operator/(const ExactNum& a, const ExactNum& b);
  ExactNum& operator+=(const ExactNum& other) { return *this = *this + other; }

  friend int compare(const ExactNum& a, const ExactNum& b);
  friend bool operator==(const ExactNum& a, const ExactNum& b) { return compare(a, b) == 0; }
  friend bool operator<(const ExactNum& a, const ExactNum& b) { return compare(a, b) < 0; }
  friend bool operator>(const ExactNum& a, const ExactNum& b) { return compare(a, b) > 0; }
  friend bool operator<=(const ExactNum& a, const ExactNum& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const ExactNum& a, const ExactNum& b) { return compare(a, b) >= 0; }

 private:
  ExactNum(double lo, double hi, std::shared_ptr<const detail::ExactNode> node)
      : lo_(lo), hi_(hi), node_(std::move(node)) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
  std::shared_ptr<const detail::ExactNode> node_;  // null means zero
};

}  // namespace dtk
