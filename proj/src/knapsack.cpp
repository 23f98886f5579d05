#include "dtk/knapsack.hpp"

#include <json.hpp>

#include <algorithm>

#include "dtk/errors.hpp"

namespace dtk::knapsack {

KnapsackInstance::KnapsackInstance(std::vector<Item> items, std::int64_t profit_bound,
                                   std::int64_t weight_bound)
    : items_(std::move(items)), profit_bound_(profit_bound), weight_bound_(weight_bound) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].profit <= 0 || items_[i].weight <= 0) {
      throw UsageError("item " + std::to_string(i) + " must have positive profit and weight");
    }
  }
  if (profit_bound_ <= 0) throw UsageError("profit bound P must be positive");
  if (weight_bound_ <= 0) throw UsageError("weight bound W must be positive");
}

Answer solve_dp(const KnapsackInstance& instance) {
  const auto& items = instance.items();
  const std::size_t n = items.size();
  const auto cap = static_cast<std::size_t>(instance.weight_bound());
  // best[i][w]: max profit from the first i items with weight <= w
  std::vector<std::vector<std::int64_t>> best(n + 1, std::vector<std::int64_t>(cap + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto w_i = static_cast<std::size_t>(items[i - 1].weight);
    for (std::size_t w = 0; w <= cap; ++w) {
      best[i][w] = best[i - 1][w];
      if (w_i <= w) best[i][w] = std::max(best[i][w], best[i - 1][w - w_i] + items[i - 1].profit);
    }
  }
  Answer answer;
  if (best[n][cap] < instance.profit_bound()) return answer;
  answer.positive = true;
  std::size_t w = cap;
  for (std::size_t i = n; i > 0; --i) {
    if (best[i][w] != best[i - 1][w]) {
      answer.witness.push_back(i - 1);
      w -= static_cast<std::size_t>(items[i - 1].weight);
    }
  }
  std::reverse(answer.witness.begin(), answer.witness.end());
  return answer;
}

Answer solve_bruteforce(const KnapsackInstance& instance, std::size_t max_items) {
  const std::size_t n = instance.size();
  if (n > max_items) {
    throw GuardExceeded("brute force refuses " + std::to_string(n) + " items > guard " +
                        std::to_string(max_items));
  }
  Answer answer;
  std::int64_t best_profit = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t profit = 0, weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        profit += instance.items()[i].profit;
        weight += instance.items()[i].weight;
      }
    }
    if (weight > instance.weight_bound() || profit < instance.profit_bound()) continue;
    if (profit <= best_profit) continue;
    best_profit = profit;
    answer.positive = true;
    answer.witness.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) answer.witness.push_back(i);
  }
  return answer;
}

bool is_witness(const KnapsackInstance& instance, const std::vector<std::size_t>& subset) {
  std::int64_t profit = 0, weight = 0;
  for (std::size_t i : subset) {
    if (i >= instance.size()) return false;
    profit += instance.items()[i].profit;
    weight += instance.items()[i].weight;
  }
  return weight <= instance.weight_bound() && profit >= instance.profit_bound();
}

KnapsackInstance load_knapsack(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed knapsack document: ") + e.what());
  }
  try {
    std::vector<Item> items;
    for (const auto& entry : doc.at("items")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("malformed knapsack document: each item must be [p, w]");
      }
      items.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>()});
    }
    return KnapsackInstance(std::move(items), doc.at("P").get<std::int64_t>(),
                            doc.at("W").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed knapsack document: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("invalid knapsack instance: ") + e.what());
  }
}

std::string save_knapsack(const KnapsackInstance& instance) {
  nlohmann::ordered_json doc;
  doc["items"] = nlohmann::ordered_json::array();
  for (const Item& item : instance.items()) doc["items"].push_back({item.profit, item.weight});
  doc["P"] = instance.profit_bound();
  doc["W"] = instance.weight_bound();
  return doc.dump() + "\n";
}

}  // namespace dtk::knapsack
