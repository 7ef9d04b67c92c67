#ifndef BIDDING_TURN_BASED_HPP_
#define BIDDING_TURN_BASED_HPP_

#include <string>
#include <vector>

namespace bidding {

enum class Owner { kProtagonist, kAntagonist };

// Max-priority parity game: the protagonist wins a play iff the largest
// priority seen infinitely often is odd. Sinks are absorbing through an
// implicit self-loop and must carry an odd priority, so the protagonist wins
// them.
struct TurnBasedParityGame {
  std::vector<Owner> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;
  std::vector<bool> sink;

  int size() const { return static_cast<int>(owner.size()); }
  int add_vertex(Owner o, int p, bool is_sink = false);
  std::size_t edge_count() const;
};

// Empty iff every non-sink has a successor and all indices are in range.
std::vector<std::string> validate_turn_based(const TurnBasedParityGame& game);

struct TurnBasedSolution {
  std::vector<bool> protagonist_wins;
  // Chosen successor for the vertex owner; -1 on sinks. On the owner's
  // winning region the choice is a winning memoryless strategy.
  std::vector<int> strategy;
};

TurnBasedSolution solve_turn_based_parity(const TurnBasedParityGame& game);

}  // namespace bidding

#endif  // BIDDING_TURN_BASED_HPP_
