#ifndef BIDDING_RULES_HPP_
#define BIDDING_RULES_HPP_

#include <string>
#include <vector>

#include "bidding/budget.hpp"

namespace bidding {

enum class Player { kOne, kTwo };

inline Player other(Player p) { return p == Player::kOne ? Player::kTwo : Player::kOne; }
std::string to_string(Player p);

// Bids available from budget b: every value up to b, marked values only
// when b carries the advantage.
std::vector<AdvValue> legal_bids(AdvValue budget);
bool is_legal_bid(AdvValue budget, AdvValue bid);

struct BidResolution {
  Player winner = Player::kOne;
  AdvValue next_p1_budget;
  bool tie = false;  // equal bids; the player without the advantage won
};

// Bids from P1 budget b1 and P2 budget k* (-) b1; both assumed legal.
BidResolution resolve_bids(AdvValue p1_budget, AdvValue bid1, AdvValue bid2);

}  // namespace bidding

#endif  // BIDDING_RULES_HPP_
