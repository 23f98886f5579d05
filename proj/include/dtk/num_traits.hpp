#pragma once

#include <cmath>
#include <string>

#include "dtk/exact_num.hpp"
#include "dtk/rational.hpp"

namespace dtk {

/// Uniform access to the two length types: `double` (float mode) and
/// `ExactNum` (exact mode).
template <class Num>
struct NumTraits;

template <>
struct NumTraits<double> {
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double sqrt_of(const Rational& q) { return std::sqrt(q.get_d()); }
  static double lower(double x) { return x; }
  static double upper(double x) { return x; }
  static double approx(double x) { return x; }
};

template <>
struct NumTraits<ExactNum> {
  static ExactNum from_rational(const Rational& q) { return ExactNum(q); }
  static ExactNum sqrt_of(const Rational& q) { return ExactNum::sqrt(q); }
  static double lower(const ExactNum& x) { return x.lower(); }
  static double upper(const ExactNum& x) { return x.upper(); }
  static double approx(const ExactNum& x) { return x.approx(); }
};

}  // namespace dtk
