#ifndef BIDDING_ENGINE_HPP_
#define BIDDING_ENGINE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidding/certifier.hpp"
#include "bidding/game.hpp"
#include "bidding/oracle.hpp"
#include "bidding/rules.hpp"

namespace bidding {

class IllegalAction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One player's half of a joint action.
struct MoveHalf {
  AdvValue bid;
  int target = -1;
  friend bool operator==(const MoveHalf&, const MoveHalf&) = default;
};

struct RoundOutcome {
  Player winner = Player::kOne;
  bool tie = false;
  bool advantage_used = false;  // the winning bid carried the advantage
  Configuration next;
};

// Throws IllegalAction naming the offending player and reason.
RoundOutcome apply_bids(const FrugalParityGame& game, Configuration c, MoveHalf p1,
                        MoveHalf p2);

enum class HumanSide { kPlayer1, kPlayer2, kNone };
enum class StrategySource { kCertified, kOracle, kHeuristic };
enum class PlayStatus { kOngoing, kPlayer1Won, kPlayer2Won, kHorizon };

std::string to_string(HumanSide side);
std::string to_string(StrategySource source);
std::string to_string(PlayStatus status);

// Solved and certified data shared by every session on one game.
struct EngineContext {
  FrugalParityGame game;
  ThresholdMap thresholds;        // player 1
  ThresholdMap dual_thresholds;   // player 2, on the dual game
  CertReport report;
  std::optional<StrategyTable> upper;  // present iff that side verified
  std::optional<StrategyTable> lower;
  std::optional<ExplicitGame> oracle_p1;
  std::optional<ExplicitGame> oracle_p2;
  TurnBasedSolution oracle_p1_solution;
  TurnBasedSolution oracle_p2_solution;
};

// Certified play is offered only on sides whose certificate game verified.
// The oracle games are built only when `with_oracle` is set.
std::shared_ptr<const EngineContext> make_context(const FrugalParityGame& game,
                                                  bool with_oracle = false,
                                                  std::size_t max_states = kDefaultMaxStates);

bool certified_side(const EngineContext& ctx, Player p);

// Strategy state of one engine-controlled player.
struct EngineSeat {
  Player side = Player::kOne;
  StrategySource preferred = StrategySource::kCertified;
  StrategySource mode = StrategySource::kHeuristic;
  int cert_node = -1;             // c* in the side's certificate game
  std::uint64_t spare = 0;        // |budget| - |cert budget|
  std::size_t restarts = 0;
  std::size_t resyncs = 0;        // opponent overpaid; c* re-anchored
};

struct RoundRecord {
  std::size_t round = 0;
  Configuration before;
  MoveHalf p1;
  MoveHalf p2;
  RoundOutcome outcome;
  bool restart = false;
};

struct SessionOptions {
  HumanSide human = HumanSide::kPlayer2;
  int start = 0;
  AdvValue p1_budget;
  StrategySource preferred = StrategySource::kCertified;
  std::size_t horizon = 200;
};

struct Session {
  std::shared_ptr<const EngineContext> context;
  HumanSide human = HumanSide::kPlayer2;
  Configuration config;
  std::vector<EngineSeat> seats;
  std::vector<RoundRecord> history;
  PlayStatus status = PlayStatus::kOngoing;
  std::optional<Player> provisional_winner;  // set at the horizon
  std::size_t horizon = 200;

  const FrugalParityGame& game() const { return context->game; }
  AdvValue budget(Player p) const;
  const EngineSeat* seat(Player p) const;
};

Session new_session(std::shared_ptr<const EngineContext> context, const SessionOptions& options);

// The committed half for an engine-controlled player. Depends on the session
// only, never on the opponent's pending half.
MoveHalf engine_action(const Session& s, Player p);

// Resolves one round: engine halves for engine seats, `opponent` for the
// human side. Throws IllegalAction (session unchanged) or std::logic_error
// if a certified invariant breaks.
const RoundRecord& step(Session& s, std::optional<MoveHalf> opponent = std::nullopt);

// Line-delimited JSON, one record per round.
std::string round_log(const Session& s);
std::string round_log_line(const FrugalParityGame& game, const RoundRecord& r);

}  // namespace bidding

#endif  // BIDDING_ENGINE_HPP_
