#ifndef BIDDING_CERTIFIER_HPP_
#define BIDDING_CERTIFIER_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bidding/game.hpp"
#include "bidding/turn_based.hpp"

namespace bidding {

enum class CertSide { kPlayer1, kPlayer2 };

struct CertNode {
  enum class Kind { kConfig, kTop, kResponse };
  Kind kind = Kind::kConfig;
  int vertex = 0;      // v of <v, B>, or v' of <v', c>
  AdvValue budget;     // kConfig only
  int parent = -1;     // kResponse only: the configuration node c
};

// The turn-based certificate game for (game, thresholds). For kPlayer2 the
// stored game and thresholds are the dual game and the complement map, and
// "player 1" below means the dual protagonist.
struct CertGame {
  CertSide side = CertSide::kPlayer1;
  FrugalParityGame game;
  ThresholdMap thresholds;
  TurnBasedParityGame arena;
  std::vector<CertNode> nodes;
  std::vector<std::array<int, 2>> config_nodes;  // <v,T(v)>, <v,succ T(v)>; -1 if absent
  std::vector<int> top_nodes;                    // <v, top>

  // The configuration node agreeing with <v, b>: same vertex and mark,
  // cert budget <= b. -1 when b < T(v).
  int agreeing(int v, AdvValue b) const;
  std::string label(int node) const;
};

// Requires check_average(game, t) to be empty; throws std::invalid_argument.
CertGame build_cert_game(const FrugalParityGame& game, const ThresholdMap& t,
                         CertSide side);

// Linear size bounds checked during construction.
std::size_t cert_vertex_bound(const FrugalParityGame& game);
std::size_t cert_edge_bound(const FrugalParityGame& game);

enum class Verdict { kVerified, kRejectedAverage, kRejectedUpper, kRejectedLower };
std::string to_string(Verdict verdict);

struct CertReport {
  Verdict verdict = Verdict::kRejectedAverage;
  std::optional<int> vertex;  // counterexample in the input game
  std::optional<CertGame> upper;
  std::optional<CertGame> lower;
  TurnBasedSolution upper_solution;
  TurnBasedSolution lower_solution;
};

CertReport certify(const FrugalParityGame& game, const ThresholdMap& t);

// Protagonist choices of a certificate game: node -> successor node.
struct StrategyTable {
  std::vector<int> choice;  // -1 off the protagonist's non-sink nodes
  std::size_t entries = 0;
  // The game vertex reached by following the choice at a configuration node.
  int move(const CertGame& cert, int node) const;
};

// The side's certificate game was built and its protagonist wins every node.
// One side suffices for that side's certified play.
bool side_verified(const CertReport& report, CertSide side);

// Requires side_verified(report, side); throws std::invalid_argument.
StrategyTable extract_strategy(const CertReport& report, CertSide side);

// Th(v) >= level, using solve_frugal_parity and certify.
bool decide_threshold(const FrugalParityGame& game, int v, ThresholdValue level);

struct Decision {
  bool certified = false;
  bool answer = false;  // meaningful only when certified
};
// Answers from a supplied candidate only if it certifies.
Decision decide_threshold(const FrugalParityGame& game, const ThresholdMap& candidate,
                          int v, ThresholdValue level);

}  // namespace bidding

#endif  // BIDDING_CERTIFIER_HPP_
