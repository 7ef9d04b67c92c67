#include "bidding/average.hpp"

#include <algorithm>

namespace bidding {

Extremes extremes(const FrugalParityGame& game, const ThresholdMap& t, int v) {
  const auto& n = game.succ[v];
  if (n.empty()) throw std::invalid_argument("extremes: " + game.ids[v] + " is a sink");
  Extremes e{t[n.front()], t[n.front()]};
  for (int u : n) {
    e.max = std::max(e.max, t[u]);
    e.min = std::min(e.min, t[u]);
  }
  return e;
}

ThresholdValue average_at(const FrugalParityGame& game, const ThresholdMap& t, int v) {
  const auto [a, b] = extremes(game, t, v);
  const std::uint64_t sum = a.magnitude(game.k) + b.magnitude(game.k);
  const bool odd = sum % 2 == 1;
  const bool marked = b.has_advantage();
  std::uint64_t level = 2 * (sum / 2);
  if (!odd && !marked) {
    // eps = 0
  } else if (odd && marked) {
    level += 2;
  } else {
    level += 1;
  }
  if (level > max_budget(game.k).level()) return ThresholdValue::top();
  return AdvValue::from_level(level);
}

std::vector<int> check_average(const FrugalParityGame& game, const ThresholdMap& t) {
  std::vector<int> bad;
  if (t.size() != game.ids.size()) {
    for (int v = 0; v < game.size(); ++v) bad.push_back(v);
    return bad;
  }
  for (int v = 0; v < game.size(); ++v) {
    if (game.sink[v] ? t[v] != game.frugal[v] : t[v] != average_at(game, t, v)) {
      bad.push_back(v);
    }
  }
  return bad;
}

ThresholdMap complement_function(const ThresholdMap& t, std::uint64_t k) {
  ThresholdMap out;
  out.reserve(t.size());
  for (auto x : t) out.push_back(flip_threshold(x, k));
  return out;
}

std::vector<int> allowed_set(const FrugalParityGame& game, const ThresholdMap& t, int v) {
  const ThresholdValue b = extremes(game, t, v).min;
  std::vector<int> out;
  for (int u : game.succ[v]) {
    if (!b.has_advantage() ? t[u] == b : t[u] <= ThresholdValue(succ(b.value()))) {
      out.push_back(u);
    }
  }
  return out;
}

bool degenerate_bid(const FrugalParityGame& game, const ThresholdMap& t, int v) {
  const auto [a, b] = extremes(game, t, v);
  return a == b && b.has_advantage();
}

AdvValue base_bid(const FrugalParityGame& game, const ThresholdMap& t, int v) {
  if (t[v].is_top()) {
    throw BudgetError("base_bid: no bid at " + game.ids[v] + " with threshold top");
  }
  if (degenerate_bid(game, t, v)) return AdvValue(0);
  const auto [a, b] = extremes(game, t, v);
  const std::uint64_t hi = a.magnitude(game.k);
  const std::uint64_t lo = b.magnitude(game.k);
  const std::uint64_t half = (hi - lo) / 2;
  const bool odd = (hi + lo) % 2 == 1;
  if (!odd && !b.has_advantage()) return AdvValue(half);
  if (odd && b.has_advantage()) return AdvValue(half);
  if (!odd) return pred(AdvValue(half));
  return succ(AdvValue(half));
}

AdvValue strategy_bid(const FrugalParityGame& game, const ThresholdMap& t, int v,
                      AdvValue b) {
  if (!meets(b, t[v])) {
    throw BudgetError("strategy_bid: budget " + to_string(b) + " below threshold " +
                      to_string(t[v]) + " at " + game.ids[v]);
  }
  if (degenerate_bid(game, t, v)) return AdvValue(0);
  const AdvValue base = base_bid(game, t, v);
  const AdvValue bid = base.has_advantage() == b.has_advantage() ? base : succ(base);
  return std::min(bid, b);
}

AdvValue cheapest_overbid(AdvValue b, AdvValue bid) {
  if (b.has_advantage() && !bid.has_advantage()) return bid;
  return succ(bid);
}

PartialMove partial_move(const FrugalParityGame& game, const ThresholdMap& t,
                         Configuration c) {
  return {strategy_bid(game, t, c.vertex, c.p1_budget), allowed_set(game, t, c.vertex)};
}

}  // namespace bidding
