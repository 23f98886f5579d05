#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dtk/rational.hpp"

namespace dtk {

/// An exact real of the form  c_1 sqrt(s_1) + ... + c_k sqrt(s_k)  with
/// rational c_j and positive integer s_j.
///
/// Terms are kept reduced: no coefficient is zero and no two radicands are
/// rationally related (s_i * s_j is never a perfect square). Square roots of
/// integers with distinct square-free parts are linearly independent over
/// the rationals, so a reduced sum is zero iff it has no terms, and its sign
/// can always be settled by refining an interval enclosure.
class RadicalSum {
 public:
  struct Term {
    Rational coef;
    Integer radicand;  // >= 1; 1 marks the rational part
  };

  RadicalSum() = default;
  explicit RadicalSum(const Rational& value);

  /// sqrt(value) for value >= 0.
  static RadicalSum sqrt(const Rational& value);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_rational() const;

  /// -1, 0 or +1, decided exactly.
  int sign() const;

  /// Rational lo <= *this <= hi, each term's root rounded outward at
  /// `bits` binary digits after the point.
  std::pair<Rational, Rational> enclose(unsigned bits) const;

  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator-=(const RadicalSum& other);
  RadicalSum operator-() const;
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

  /// Division is only supported by a single term q*sqrt(s), q != 0; throws
  /// std::domain_error otherwise.
  RadicalSum divided_by(const RadicalSum& monomial) const;

  friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
    return (a - b).is_zero();
  }

 private:
  void add_term(Rational coef, Integer radicand);

  std::vector<Term> terms_;
};

/// Three-way exact comparison.
int compare(const RadicalSum& a, const RadicalSum& b);

}  // namespace dtk
