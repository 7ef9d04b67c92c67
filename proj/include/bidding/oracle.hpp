#ifndef BIDDING_ORACLE_HPP_
#define BIDDING_ORACLE_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bidding/game.hpp"
#include "bidding/turn_based.hpp"

namespace bidding {

enum class RevealOrder { kP1First, kP2First };

inline constexpr std::size_t kDefaultMaxStates = 200000;

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::size_t required, std::size_t cap);
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

struct ExplicitState {
  int vertex = 0;
  AdvValue p1_budget;
  bool committed = false;  // first mover has fixed (bid, target)
  AdvValue bid;
  int target = -1;
};

// The configuration game with the simultaneous bidding split into two turns.
struct ExplicitGame {
  RevealOrder order = RevealOrder::kP1First;
  std::uint64_t k = 0;
  TurnBasedParityGame arena;
  std::vector<ExplicitState> states;

  // Index of configuration <v, B>; configurations come first.
  int config(int v, AdvValue b) const {
    return v * static_cast<int>(2 * k + 2) + static_cast<int>(b.level());
  }
};

// Configurations plus committed states required for the game.
std::size_t explicit_state_count(const FrugalParityGame& game, RevealOrder order);

ExplicitGame build_explicit_game(const FrugalParityGame& game, RevealOrder order,
                                 std::size_t max_states = kDefaultMaxStates);

// Least winning budget per vertex. Throws std::logic_error if a winning set
// is not upward-closed.
ThresholdMap thresholds_from(const FrugalParityGame& game, const ExplicitGame& eg,
                             const TurnBasedSolution& solution);

// Solves both reveal orders and throws std::logic_error if they disagree.
ThresholdMap oracle_thresholds(const FrugalParityGame& game,
                               std::size_t max_states = kDefaultMaxStates);

}  // namespace bidding

#endif  // BIDDING_ORACLE_HPP_
