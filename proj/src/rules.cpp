#include "bidding/rules.hpp"

namespace bidding {

std::string to_string(Player p) { return p == Player::kOne ? "player1" : "player2"; }

std::vector<AdvValue> legal_bids(AdvValue budget) {
  std::vector<AdvValue> out;
  const std::uint64_t step = budget.has_advantage() ? 1 : 2;
  for (std::uint64_t level = 0; level <= budget.level(); level += step) {
    out.push_back(AdvValue::from_level(level));
  }
  return out;
}

bool is_legal_bid(AdvValue budget, AdvValue bid) {
  return bid <= budget && (!bid.has_advantage() || budget.has_advantage());
}

BidResolution resolve_bids(AdvValue p1_budget, AdvValue bid1, AdvValue bid2) {
  BidResolution r;
  if (bid1 == bid2) {
    // Only unmarked bids can be equal; the holder concedes and keeps the mark.
    r.tie = true;
    r.winner = p1_budget.has_advantage() ? Player::kTwo : Player::kOne;
  } else {
    r.winner = bid1 > bid2 ? Player::kOne : Player::kTwo;
  }
  r.next_p1_budget =
      r.winner == Player::kOne ? ominus(p1_budget, bid1) : oplus(p1_budget, bid2);
  return r;
}

}  // namespace bidding
