#ifndef BIDDING_AVERAGE_HPP_
#define BIDDING_AVERAGE_HPP_

#include <vector>

#include "bidding/budget.hpp"
#include "bidding/game.hpp"

namespace bidding {

// Largest and smallest neighbor values of a non-sink.
struct Extremes {
  ThresholdValue max;
  ThresholdValue min;
};
Extremes extremes(const FrugalParityGame& game, const ThresholdMap& t, int v);

// floor((|max| + |min|) / 2) + eps, clamped to top above k*.
ThresholdValue average_at(const FrugalParityGame& game, const ThresholdMap& t, int v);

// Vertices where t breaks the average property (sinks: t(s) != fr(s)).
std::vector<int> check_average(const FrugalParityGame& game, const ThresholdMap& t);

// Pointwise flip_threshold.
ThresholdMap complement_function(const ThresholdMap& t, std::uint64_t k);

// Neighbors player 1 may move to after winning a bidding at v.
std::vector<int> allowed_set(const FrugalParityGame& game, const ThresholdMap& t, int v);

// True when every neighbor of v has the same marked value; the base bid is
// then 0 and the opponent wins ties.
bool degenerate_bid(const FrugalParityGame& game, const ThresholdMap& t, int v);

// The bid player 1 attempts at v. Throws BudgetError when t(v) is top.
AdvValue base_bid(const FrugalParityGame& game, const ThresholdMap& t, int v);

// base_bid adjusted to the advantage status of b. Requires b >= t(v).
AdvValue strategy_bid(const FrugalParityGame& game, const ThresholdMap& t, int v,
                      AdvValue b);

// Player 2's cheapest bid beating player 1's bid `bid` from budget b.
AdvValue cheapest_overbid(AdvValue b, AdvValue bid);

struct PartialMove {
  AdvValue bid;
  std::vector<int> allowed;
};
PartialMove partial_move(const FrugalParityGame& game, const ThresholdMap& t,
                         Configuration c);

}  // namespace bidding

#endif  // BIDDING_AVERAGE_HPP_
