#include "dtk/radical_sum.hpp"

#include <array>
#include <stdexcept>

namespace dtk {
namespace {

constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Pulls small square factors and whole squares out of the radicand so that
// equal radicals usually meet as equal integers. Full square-freeness is not
// needed: add_term catches any remaining rational relation.
void normalize_radical(Rational& coef, Integer& radicand) {
  if (radicand == 1 || radicand == 0) return;
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    coef *= isqrt(radicand);
    radicand = 1;
    return;
  }
  Integer factor = 1;
  Integer square;
  for (unsigned long p : kSmallPrimes) {
    square = p * p;
    if (square > radicand) break;
    while (mpz_divisible_p(radicand.get_mpz_t(), square.get_mpz_t())) {
      mpz_divexact(radicand.get_mpz_t(), radicand.get_mpz_t(), square.get_mpz_t());
      factor *= p;
    }
  }
  if (radicand != 1 && mpz_perfect_square_p(radicand.get_mpz_t())) {
    factor *= isqrt(radicand);
    radicand = 1;
  }
  coef *= factor;
}

// Rational bounds on sqrt(radicand) with `bits` fractional binary digits.
std::pair<Rational, Rational> sqrt_bounds(const Integer& radicand, unsigned bits) {
  if (radicand == 1) return {Rational(1), Rational(1)};
  Integer scaled = radicand << (2 * bits);
  Integer root = isqrt(scaled);
  Integer denom = power_of_two(bits);
  Rational lo(root, denom);
  lo.canonicalize();
  if (root * root == scaled) return {lo, lo};
  Rational hi(root + 1, denom);
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace

RadicalSum::RadicalSum(const Rational& value) {
  if (value != 0) terms_.push_back({value, Integer(1)});
}

RadicalSum RadicalSum::sqrt(const Rational& value) {
  if (value < 0) throw std::domain_error("sqrt of a negative rational");
  RadicalSum out;
  if (value == 0) return out;
  // sqrt(p/q) = sqrt(p*q) / q
  Integer radicand = value.get_num() * value.get_den();
  Rational coef(Integer(1), value.get_den());
  normalize_radical(coef, radicand);
  out.terms_.push_back({coef, radicand});
  return out;
}

std::optional<Rational> RadicalSum::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().radicand == 1) return terms_.front().coef;
  return std::nullopt;
}

void RadicalSum::add_term(Rational coef, Integer radicand) {
  if (coef == 0) return;
  normalize_radical(coef, radicand);
  Integer product;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->radicand == radicand) {
      it->coef += coef;
    } else {
      product = it->radicand * radicand;
      if (!mpz_perfect_square_p(product.get_mpz_t())) continue;
      // sqrt(r) = sqrt(r * s) / s when r * s is a square.
      Rational ratio(isqrt(product), it->radicand);
      ratio.canonicalize();
      it->coef += coef * ratio;
    }
    if (it->coef == 0) terms_.erase(it);
    return;
  }
  terms_.push_back({std::move(coef), std::move(radicand)});
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const Term& t : other.terms_) add_term(t.coef, t.radicand);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
  for (const Term& t : other.terms_) add_term(-t.coef, t.radicand);
  return *this;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      out.add_term(x.coef * y.coef, x.radicand * y.radicand);
    }
  }
  return out;
}

RadicalSum RadicalSum::divided_by(const RadicalSum& monomial) const {
  if (monomial.terms_.size() != 1) {
    throw std::domain_error("division by a sum of radicals is not supported");
  }
  // x / (q sqrt(s)) = x * sqrt(s) / (q s)
  const Term& d = monomial.terms_.front();
  RadicalSum inverse;
  inverse.terms_.push_back({Rational(1) / (d.coef * d.radicand), d.radicand});
  return *this * inverse;
}

std::pair<Rational, Rational> RadicalSum::enclose(unsigned bits) const {
  Rational lo = 0;
  Rational hi = 0;
  for (const Term& t : terms_) {
    auto [root_lo, root_hi] = sqrt_bounds(t.radicand, bits);
    if (t.coef > 0) {
      lo += t.coef * root_lo;
      hi += t.coef * root_hi;
    } else {
      lo += t.coef * root_hi;
      hi += t.coef * root_lo;
    }
  }
  return {lo, hi};
}

int RadicalSum::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.front().coef);
  // Nonzero by linear independence; refinement terminates.
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

int compare(const RadicalSum& a, const RadicalSum& b) { return (a - b).sign(); }

}  // namespace dtk
