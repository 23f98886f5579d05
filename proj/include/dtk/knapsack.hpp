#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dtk::knapsack {

struct Item {
  std::int64_t profit;
  std::int64_t weight;

  friend bool operator==(const Item&, const Item&) = default;
};

/// 0/1 Knapsack decision instance: is there a subset with total weight at
/// most W and total profit at least P? All values strictly positive.
class KnapsackInstance {
 public:
  KnapsackInstance(std::vector<Item> items, std::int64_t profit_bound, std::int64_t weight_bound);

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  std::int64_t profit_bound() const { return profit_bound_; }
  std::int64_t weight_bound() const { return weight_bound_; }

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;

 private:
  std::vector<Item> items_;
  std::int64_t profit_bound_;
  std::int64_t weight_bound_;
};

struct Answer {
  bool positive = false;
  std::vector<std::size_t> witness;  // 0-based item indices, ascending; empty when negative
};

/// Dynamic program over the weight budget (table of size W+1).
Answer solve_dp(const KnapsackInstance& instance);

/// Exhaustive subset search; throws dtk::GuardExceeded above max_items.
Answer solve_bruteforce(const KnapsackInstance& instance, std::size_t max_items = 20);

/// True iff `subset` is within the weight bound and reaches the profit bound.
bool is_witness(const KnapsackInstance& instance, const std::vector<std::size_t>& subset);

KnapsackInstance load_knapsack(const std::string& json_text);
std::string save_knapsack(const KnapsackInstance& instance);

}  // namespace dtk::knapsack
