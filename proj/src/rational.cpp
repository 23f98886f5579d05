#include "dtk/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dtk {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a rational number: \"" + std::string(text) +
                              "\"");
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(original);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(original);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(original);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(original);

  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational out = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty()) bad_number(text);

  if (auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    std::string_view num = trimmed.substr(0, slash);
    std::string_view den = trimmed.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den)) bad_number(text);
    Integer p(std::string(num_digits), 10);
    Integer q(std::string(den), 10);
    if (q == 0) bad_number(text);
    if (num.front() == '-') p = -p;
    Rational out(p, q);
    out.canonicalize();
    return out;
  }
  return parse_decimal(trimmed, text);
}

std::string format_rational(const Rational& input) {
  Rational value = input;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coordinate");
  Rational out(value);
  return out;
}

std::pair<double, double> enclose_in_doubles(const Rational& value) {
  // mpq_get_d truncates toward zero, so one ulp outward on the far side suffices.
  double d = value.get_d();
  if (Rational(d) == value) return {d, d};
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (value > 0) return {d, std::nextafter(d, inf)};
  return {std::nextafter(d, -inf), d};
}

Integer floor_of(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer isqrt(const Integer& value) {
  if (value < 0) throw std::domain_error("isqrt of a negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), value.get_mpz_t());
  return out;
}

std::size_t bit_length(const Integer& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

Integer power_of_two(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

}  // namespace dtk
