#include "dtk/exact_num.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace dtk {
namespace detail {

struct ExactNode {
  enum class Op { Leaf, Add, Sub, Mul, Div };
  Op op = Op::Leaf;
  RadicalSum value;  // leaves only
  std::shared_ptr<const ExactNode> lhs, rhs;
};

}  // namespace detail

namespace {

using detail::ExactNode;
constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

std::pair<double, double> interval_of(const RadicalSum& value) {
  if (auto q = value.as_rational()) return enclose_in_doubles(*q);
  auto [lo, hi] = value.enclose(64);
  return {enclose_in_doubles(lo).first, enclose_in_doubles(hi).second};
}

RadicalSum evaluate(const ExactNode* node) {
  if (node == nullptr) return {};
  switch (node->op) {
    case ExactNode::Op::Leaf:
      return node->value;
    case ExactNode::Op::Add:
      return evaluate(node->lhs.get()) + evaluate(node->rhs.get());
    case ExactNode::Op::Sub:
      return evaluate(node->lhs.get()) - evaluate(node->rhs.get());
    case ExactNode::Op::Mul:
      return evaluate(node->lhs.get()) * evaluate(node->rhs.get());
    case ExactNode::Op::Div:
      return evaluate(node->lhs.get()).divided_by(evaluate(node->rhs.get()));
  }
  return {};
}

std::shared_ptr<const ExactNode> make_node(ExactNode::Op op,
                                           std::shared_ptr<const ExactNode> lhs,
                                           std::shared_ptr<const ExactNode> rhs) {
  auto node = std::make_shared<ExactNode>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

std::shared_ptr<const ExactNode> make_leaf(RadicalSum value) {
  if (value.is_zero()) return nullptr;
  auto node = std::make_shared<ExactNode>();
  node->value = std::move(value);
  return node;
}

}  // namespace

ExactNum::ExactNum(const Rational& value) : ExactNum(RadicalSum(value)) {}

ExactNum::ExactNum(RadicalSum value) {
  std::tie(lo_, hi_) = interval_of(value);
  node_ = make_leaf(std::move(value));
}

ExactNum ExactNum::sqrt(const Rational& value) {
  RadicalSum exact = RadicalSum::sqrt(value);
  auto [qlo, qhi] = enclose_in_doubles(value);
  double lo = std::max(0.0, down(std::sqrt(std::max(0.0, qlo))));
  double hi = up(std::sqrt(qhi));
  if (auto q = exact.as_rational()) std::tie(lo, hi) = enclose_in_doubles(*q);
  return ExactNum(lo, hi, make_leaf(std::move(exact)));
}

RadicalSum ExactNum::exact() const { return evaluate(node_.get()); }

ExactNum operator+(const ExactNum& a, const ExactNum& b) {
  if (!a.node_) return b;
  if (!b.node_) return a;
  return ExactNum(down(a.lo_ + b.lo_), up(a.hi_ + b.hi_),
                  make_node(ExactNode::Op::Add, a.node_, b.node_));
}

ExactNum operator-(const ExactNum& a, const ExactNum& b) {
  if (!b.node_) return a;
  return ExactNum(down(a.lo_ - b.hi_), up(a.hi_ - b.lo_),
                  make_node(ExactNode::Op::Sub, a.node_, b.node_));
}

ExactNum operator*(const ExactNum& a, const ExactNum& b) {
  if (!a.node_ || !b.node_) return ExactNum();
  double p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return ExactNum(down(*mn), up(*mx), make_node(ExactNode::Op::Mul, a.node_, b.node_));
}

ExactNum operator/(const ExactNum& a, const ExactNum& b) {
  if (!b.node_) throw std::domain_error("division by zero");
  if (!a.node_) return ExactNum();
  auto node = make_node(ExactNode::Op::Div, a.node_, b.node_);
  if (b.lo_ > 0 || b.hi_ < 0) {
    double p[] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return ExactNum(down(*mn), up(*mx), std::move(node));
  }
  auto [lo, hi] = interval_of(evaluate(node.get()));
  return ExactNum(lo, hi, std::move(node));
}

int compare(const ExactNum& a, const ExactNum& b) {
  if (a.hi_ < b.lo_) return -1;
  if (a.lo_ > b.hi_) return 1;
  if (a.node_ == b.node_) return 0;
  return dtk::compare(a.exact(), b.exact());
}

}  // namespace dtk
