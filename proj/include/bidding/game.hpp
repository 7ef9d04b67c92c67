#ifndef BIDDING_GAME_HPP_
#define BIDDING_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bidding/budget.hpp"

namespace bidding {

struct ValidationIssue {
  std::string location;  // vertex id, "edge a->b", or a field name
  std::string message;
  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};
using ValidationReport = std::vector<ValidationIssue>;

std::string format_report(const ValidationReport& report);

class GameError : public std::runtime_error {
 public:
  explicit GameError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

enum class ObjectiveKind {
  kReachability,
  kSafety,
  kBuchi,
  kCoBuchi,
  kParity,
  kFrugalReachability,
  kFrugalSafety,
  kFrugalParity,
};

std::string to_string(ObjectiveKind kind);
std::optional<ObjectiveKind> parse_objective_kind(std::string_view text);

struct Objective {
  ObjectiveKind kind = ObjectiveKind::kFrugalParity;
  std::vector<std::string> accepting;  // the set F for buchi / cobuchi
  friend bool operator==(const Objective&, const Objective&) = default;
};

struct VertexDecl {
  std::string id;
  std::optional<std::int64_t> priority;
  friend bool operator==(const VertexDecl&, const VertexDecl&) = default;
};

struct SinkDecl {
  std::string id;
  std::optional<ThresholdValue> frugal;
  friend bool operator==(const SinkDecl&, const SinkDecl&) = default;
};

// A game as written in a file: possibly invalid, possibly not normalized.
struct GameDescription {
  std::uint64_t k = 0;
  std::vector<VertexDecl> vertices;
  std::vector<SinkDecl> sinks;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<Objective> objective;
  friend bool operator==(const GameDescription&, const GameDescription&) = default;
};

// A validated frugal-parity game. Vertices (sinks included) are indexed by
// their position in lexicographic id order.
struct FrugalParityGame {
  std::uint64_t k = 0;
  std::vector<std::string> ids;
  std::vector<bool> sink;
  std::vector<int> priority;            // 0 on sinks
  std::vector<ThresholdValue> frugal;   // 0 on non-sinks
  std::vector<std::vector<int>> succ;   // sorted, duplicate-free; empty on sinks

  int size() const { return static_cast<int>(ids.size()); }
  bool is_sink(int v) const { return sink[v]; }
  std::optional<int> find(std::string_view id) const;
  int index(std::string_view id) const;  // throws std::out_of_range
  std::vector<int> non_sinks() const;
  std::vector<int> sinks() const;
  std::size_t edge_count() const;
  std::size_t max_out_degree() const;

  friend bool operator==(const FrugalParityGame&, const FrugalParityGame&) = default;
};

// A configuration <v, B>; player 2 holds opponent_budget(B, k).
struct Configuration {
  int vertex = 0;
  AdvValue p1_budget;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Per-vertex thresholds indexed like FrugalParityGame::ids.
using ThresholdMap = std::vector<ThresholdValue>;

ValidationReport validate_game(const GameDescription& description);
ValidationReport validate_game(const FrugalParityGame& game);

// Rewrites any objective kind into a frugal-parity game. Throws GameError.
FrugalParityGame normalize_objective(const GameDescription& description);

// The normalized game as a description without an objective header.
GameDescription describe(const FrugalParityGame& game);

// Player 2's view: priorities + 1, frugal targets flipped.
FrugalParityGame dualize(const FrugalParityGame& game);

// Shorthand for tests and tools: a frugal-parity game from plain lists.
FrugalParityGame make_game(
    std::uint64_t k, const std::vector<std::pair<std::string, int>>& vertices,
    const std::vector<std::pair<std::string, ThresholdValue>>& sinks,
    const std::vector<std::pair<std::string, std::string>>& edges);

bool all_priorities_even(const FrugalParityGame& game);
bool all_priorities_odd(const FrugalParityGame& game);

// "v0=5 v1=4* ..." in vertex order.
std::string format_thresholds(const FrugalParityGame& game, const ThresholdMap& t);

}  // namespace bidding

#endif  // BIDDING_GAME_HPP_
