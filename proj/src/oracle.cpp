#include "bidding/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bidding/rules.hpp"

namespace bidding {

OracleCapExceeded::OracleCapExceeded(std::size_t required, std::size_t cap)
    : std::runtime_error("explicit game needs " + std::to_string(required) +
                         " states, cap is " + std::to_string(cap) +
                         " (raise --max-states)"),
      required_(required) {}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

AdvValue first_mover_budget(RevealOrder order, AdvValue p1_budget, std::uint64_t k) {
  return order == RevealOrder::kP1First ? p1_budget : opponent_budget(p1_budget, k);
}

}  // namespace

std::size_t explicit_state_count(const FrugalParityGame& game, RevealOrder order) {
  const unsigned __int128 levels = static_cast<unsigned __int128>(game.k) * 2 + 2;
  const unsigned __int128 configs = levels * game.ids.size();
  if (configs > kSaturated / 4) return kSaturated;
  std::size_t total = static_cast<std::size_t>(configs);
  for (int v : game.non_sinks()) {
    for (std::uint64_t level = 0; level < levels; ++level) {
      const AdvValue mover = first_mover_budget(order, AdvValue::from_level(level), game.k);
      // Number of legal bids from `mover`.
      const std::size_t bids = mover.has_advantage() ? mover.level() + 1 : mover.magnitude() + 1;
      total = saturating_add(total, bids * game.succ[v].size());
    }
  }
  return total;
}

ExplicitGame build_explicit_game(const FrugalParityGame& game, RevealOrder order,
                                 std::size_t max_states) {
  const std::size_t required = explicit_state_count(game, order);
  if (required > max_states) throw OracleCapExceeded(required, max_states);

  ExplicitGame eg;
  eg.order = order;
  eg.k = game.k;
  const std::uint64_t levels = 2 * game.k + 2;
  const Owner first = order == RevealOrder::kP1First ? Owner::kProtagonist : Owner::kAntagonist;
  const Owner second = order == RevealOrder::kP1First ? Owner::kAntagonist : Owner::kProtagonist;

  for (int v = 0; v < game.size(); ++v) {
    for (std::uint64_t level = 0; level < levels; ++level) {
      const AdvValue b = AdvValue::from_level(level);
      eg.states.push_back({v, b, false, AdvValue(), -1});
      if (game.sink[v]) {
        if (meets(b, game.frugal[v])) {
          eg.arena.add_vertex(Owner::kProtagonist, 1, true);
        } else {
          const int s = eg.arena.add_vertex(Owner::kAntagonist, 0, false);
          eg.arena.succ[s].push_back(s);
        }
      } else {
        eg.arena.add_vertex(first, game.priority[v], false);
      }
    }
  }

  for (int v : game.non_sinks()) {
    for (std::uint64_t level = 0; level < levels; ++level) {
      const AdvValue b = AdvValue::from_level(level);
      const int c = eg.config(v, b);
      const AdvValue p2 = opponent_budget(b, game.k);
      const AdvValue mover = order == RevealOrder::kP1First ? b : p2;
      const AdvValue responder = order == RevealOrder::kP1First ? p2 : b;
      for (AdvValue bid : legal_bids(mover)) {
        for (int u : game.succ[v]) {
          const int s = eg.arena.add_vertex(second, 0, false);
          eg.states.push_back({v, b, true, bid, u});
          eg.arena.succ[c].push_back(s);
          std::vector<int> out;
          for (AdvValue answer : legal_bids(responder)) {
            const AdvValue bid1 = order == RevealOrder::kP1First ? bid : answer;
            const AdvValue bid2 = order == RevealOrder::kP1First ? answer : bid;
            const BidResolution r = resolve_bids(b, bid1, bid2);
            const bool mover_won = (r.winner == Player::kOne) == (order == RevealOrder::kP1First);
            if (mover_won) {
              out.push_back(eg.config(u, r.next_p1_budget));
            } else {
              for (int w : game.succ[v]) out.push_back(eg.config(w, r.next_p1_budget));
            }
          }
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
          eg.arena.succ[s] = std::move(out);
        }
      }
    }
  }
  return eg;
}

ThresholdMap thresholds_from(const FrugalParityGame& game, const ExplicitGame& eg,
                             const TurnBasedSolution& solution) {
  const std::uint64_t levels = 2 * game.k + 2;
  ThresholdMap t(game.size(), ThresholdValue::top());
  for (int v = 0; v < game.size(); ++v) {
    bool winning = false;
    for (std::uint64_t level = 0; level < levels; ++level) {
      const AdvValue b = AdvValue::from_level(level);
      const bool wins = solution.protagonist_wins[eg.config(v, b)];
      if (winning && !wins) {
        throw std::logic_error("oracle: winning budgets at " + game.ids[v] +
                               " are not upward-closed");
      }
      if (wins && !winning) {
        winning = true;
        t[v] = b;
      }
    }
  }
  return t;
}

ThresholdMap oracle_thresholds(const FrugalParityGame& game, std::size_t max_states) {
  const ExplicitGame p1 = build_explicit_game(game, RevealOrder::kP1First, max_states);
  const ThresholdMap first = thresholds_from(game, p1, solve_turn_based_parity(p1.arena));
  const ExplicitGame p2 = build_explicit_game(game, RevealOrder::kP2First, max_states);
  const ThresholdMap second = thresholds_from(game, p2, solve_turn_based_parity(p2.arena));
  if (first != second) {
    throw std::logic_error("oracle: reveal orders disagree (" + format_thresholds(game, first) +
                           " vs " + format_thresholds(game, second) + ")");
  }
  return first;
}

}  // namespace bidding
