#pragma once

// Seeded generators shared by the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "dtk/instance.hpp"
#include "dtk/knapsack.hpp"

namespace dtk::testing {

inline double unit_double(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

/// n distinct points in [0, 1000)^2. Exact mode draws integer coordinates
/// from [0, span), float mode draws doubles.
inline std::vector<Point> random_points(std::size_t n, std::uint64_t seed, ArithmeticMode mode,
                                        long span = 1000) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  std::set<std::pair<Rational, Rational>> seen;
  while (pts.size() < n) {
    Point p;
    if (mode == ArithmeticMode::Exact) {
      p = {Rational(static_cast<long>(rng() % span)), Rational(static_cast<long>(rng() % span))};
    } else {
      p = {rational_from_double(1000 * unit_double(rng)),
           rational_from_double(1000 * unit_double(rng))};
    }
    if (seen.insert({p.x, p.y}).second) pts.push_back(p);
  }
  return pts;
}

inline Instance random_instance(std::size_t n, std::uint64_t seed, ArithmeticMode mode,
                                const Rational& delta, long span = 1000) {
  return Instance(mode, random_points(n, seed, mode, span), 0, delta);
}

inline knapsack::KnapsackInstance random_knapsack(std::size_t items, std::int64_t max_value,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t hi) { return 1 + static_cast<std::int64_t>(rng() % hi); };
  std::vector<knapsack::Item> list;
  std::int64_t total_p = 0, total_w = 0;
  for (std::size_t i = 0; i < items; ++i) {
    list.push_back({draw(max_value), draw(max_value)});
    total_p += list.back().profit;
    total_w += list.back().weight;
  }
  return knapsack::KnapsackInstance(std::move(list), draw(total_p), draw(total_w));
}

}  // namespace dtk::testing
