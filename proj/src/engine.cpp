#include "bidding/engine.hpp"

#include <algorithm>

#include "bidding/average.hpp"
#include "bidding/parity.hpp"
#include "json.hpp"

namespace bidding {

namespace {

[[noreturn]] void invariant_broken(const std::string& what) {
  throw std::logic_error("engine invariant: " + what);
}

int player_index(Player p) { return p == Player::kOne ? 0 : 1; }

const CertGame& side_cert(const EngineContext& ctx, Player p) {
  return p == Player::kOne ? *ctx.report.upper : *ctx.report.lower;
}

const StrategyTable& side_table(const EngineContext& ctx, Player p) {
  return p == Player::kOne ? *ctx.upper : *ctx.lower;
}

AdvValue budget_of(const FrugalParityGame& game, Configuration c, Player p) {
  return p == Player::kOne ? c.p1_budget : opponent_budget(c.p1_budget, game.k);
}

// Oracle strategy at the current configuration, if the side wins there.
std::optional<MoveHalf> oracle_half(const Session& s, Player p) {
  const EngineContext& ctx = *s.context;
  const ExplicitGame* eg = p == Player::kOne ? (ctx.oracle_p1 ? &*ctx.oracle_p1 : nullptr)
                                             : (ctx.oracle_p2 ? &*ctx.oracle_p2 : nullptr);
  if (!eg) return std::nullopt;
  const TurnBasedSolution& sol =
      p == Player::kOne ? ctx.oracle_p1_solution : ctx.oracle_p2_solution;
  const int c = eg->config(s.config.vertex, s.config.p1_budget);
  if (sol.protagonist_wins[c] != (p == Player::kOne)) return std::nullopt;
  const ExplicitState& chosen = eg->states[sol.strategy[c]];
  return MoveHalf{chosen.bid, chosen.target};
}

// Certified play is available from <v, B> on side p.
bool certified_available(const Session& s, Player p) {
  const int v = s.config.vertex;
  if (!certified_side(*s.context, p)) return false;
  const CertGame& cert = side_cert(*s.context, p);
  return !s.game().sink[v] && meets(s.budget(p), cert.thresholds[v]);
}

void anchor(const Session& s, EngineSeat& seat) {
  const CertGame& cert = side_cert(*s.context, seat.side);
  const AdvValue b = s.budget(seat.side);
  seat.cert_node = cert.agreeing(s.config.vertex, b);
  if (seat.cert_node < 0) invariant_broken("no agreeing certificate vertex");
  seat.spare = b.magnitude() - cert.nodes[seat.cert_node].budget.magnitude();
}

void refresh_mode(const Session& s, EngineSeat& seat) {
  if (s.game().sink[s.config.vertex]) return;
  if (seat.mode == StrategySource::kCertified) return;
  switch (seat.preferred) {
    case StrategySource::kCertified:
      if (certified_available(s, seat.side)) {
        seat.mode = StrategySource::kCertified;
        anchor(s, seat);
        return;
      }
      break;
    case StrategySource::kOracle:
      if (oracle_half(s, seat.side)) {
        seat.mode = StrategySource::kOracle;
        return;
      }
      break;
    case StrategySource::kHeuristic:
      break;
  }
  seat.mode = StrategySource::kHeuristic;
}

void check_agreement(const Session& s, const EngineSeat& seat) {
  const CertGame& cert = side_cert(*s.context, seat.side);
  const CertNode& n = cert.nodes.at(seat.cert_node);
  const AdvValue b = s.budget(seat.side);
  if (n.kind != CertNode::Kind::kConfig || n.vertex != s.config.vertex ||
      n.budget.has_advantage() != b.has_advantage() || b < n.budget) {
    invariant_broken("certificate vertex " + cert.label(seat.cert_node) +
                     " disagrees with live budget " + to_string(b));
  }
  if (seat.spare != b.magnitude() - n.budget.magnitude()) invariant_broken("spare drift");
}

// Moves c* along the certificate edge matching the resolved round.
bool follow_certificate(const Session& before, const RoundRecord& r, const Session& after,
                        EngineSeat& seat) {
  const CertGame& cert = side_cert(*before.context, seat.side);
  const CertNode c = cert.nodes[seat.cert_node];
  const Player p = seat.side;
  const MoveHalf mine = p == Player::kOne ? r.p1 : r.p2;
  const MoveHalf theirs = p == Player::kOne ? r.p2 : r.p1;
  const std::uint64_t old_spare = seat.spare;
  const int w = r.outcome.next.vertex;
  if (after.game().sink[w]) return false;

  if (r.outcome.winner == p) {
    const AdvValue expected = ominus(c.budget, mine.bid);
    seat.cert_node = cert.agreeing(w, after.budget(p));
    if (seat.cert_node < 0 || cert.nodes[seat.cert_node].budget != expected) {
      invariant_broken("won bidding left the certificate");
    }
    seat.spare = after.budget(p).magnitude() - expected.magnitude();
    if (seat.spare != old_spare) invariant_broken("spare changed on a won bidding");
    return false;
  }

  const AdvValue overbid = cheapest_overbid(c.budget, mine.bid);
  const AdvValue raised = oplus(c.budget, overbid);
  int next = cert.top_nodes[w];
  for (int node : cert.config_nodes[w]) {
    if (node >= 0 && cert.nodes[node].budget == raised) next = node;
  }
  const bool restart = next == cert.top_nodes[w];
  if (!restart && theirs.bid == overbid) {
    seat.cert_node = next;
    seat.spare = after.budget(p).magnitude() - raised.magnitude();
    if (seat.spare != old_spare) invariant_broken("spare changed on a followed edge");
    return false;
  }
  anchor(after, seat);
  if (restart) {
    ++seat.restarts;
    if (seat.spare <= old_spare) invariant_broken("restart without spare increase");
  } else {
    ++seat.resyncs;
    if (seat.spare < old_spare) invariant_broken("spare decreased");
  }
  return restart;
}

std::optional<Player> max_priority_winner(const Session& s) {
  const auto& h = s.history;
  if (h.empty()) return std::nullopt;
  int best = -1;
  for (std::size_t i = h.size() / 2; i < h.size(); ++i) {
    best = std::max(best, s.game().priority[h[i].before.vertex]);
  }
  best = std::max(best, s.game().priority[s.config.vertex]);
  return best % 2 == 1 ? Player::kOne : Player::kTwo;
}

}  // namespace

RoundOutcome apply_bids(const FrugalParityGame& game, Configuration c, MoveHalf p1,
                        MoveHalf p2) {
  const int v = c.vertex;
  if (v < 0 || v >= game.size()) throw IllegalAction("unknown vertex");
  if (game.sink[v]) throw IllegalAction("the play has ended at sink " + game.ids[v]);
  if (c.p1_budget > max_budget(game.k)) throw IllegalAction("player1 budget exceeds k*");
  const AdvValue b2 = opponent_budget(c.p1_budget, game.k);
  auto check = [&](const char* who, AdvValue budget, MoveHalf half) {
    if (!is_legal_bid(budget, half.bid)) {
      const std::string why = half.bid.has_advantage() && !budget.has_advantage()
                                  ? " claims the advantage it lacks"
                                  : " exceeds the budget " + to_string(budget);
      throw IllegalAction(std::string(who) + " bid " + to_string(half.bid) + why);
    }
    const auto& n = game.succ[v];
    if (!std::binary_search(n.begin(), n.end(), half.target)) {
      throw IllegalAction(std::string(who) + " target is not a successor of " + game.ids[v]);
    }
  };
  check("player1", c.p1_budget, p1);
  check("player2", b2, p2);
  const BidResolution r = resolve_bids(c.p1_budget, p1.bid, p2.bid);
  RoundOutcome out;
  out.winner = r.winner;
  out.tie = r.tie;
  out.advantage_used = (r.winner == Player::kOne ? p1.bid : p2.bid).has_advantage();
  out.next = {r.winner == Player::kOne ? p1.target : p2.target, r.next_p1_budget};
  return out;
}

std::string to_string(HumanSide side) {
  switch (side) {
    case HumanSide::kPlayer1: return "player1";
    case HumanSide::kPlayer2: return "player2";
    case HumanSide::kNone: return "none";
  }
  return "?";
}

std::string to_string(StrategySource source) {
  switch (source) {
    case StrategySource::kCertified: return "certified";
    case StrategySource::kOracle: return "oracle";
    case StrategySource::kHeuristic: return "heuristic";
  }
  return "?";
}

std::string to_string(PlayStatus status) {
  switch (status) {
    case PlayStatus::kOngoing: return "ongoing";
    case PlayStatus::kPlayer1Won: return "player1_won";
    case PlayStatus::kPlayer2Won: return "player2_won";
    case PlayStatus::kHorizon: return "horizon";
  }
  return "?";
}

std::shared_ptr<const EngineContext> make_context(const FrugalParityGame& game,
                                                  bool with_oracle, std::size_t max_states) {
  auto ctx = std::make_shared<EngineContext>();
  ctx->game = game;
  ctx->thresholds = solve_frugal_parity(game).thresholds;
  ctx->report = certify(game, ctx->thresholds);
  ctx->dual_thresholds = complement_function(ctx->thresholds, game.k);
  if (side_verified(ctx->report, CertSide::kPlayer1)) {
    ctx->upper = extract_strategy(ctx->report, CertSide::kPlayer1);
  }
  if (side_verified(ctx->report, CertSide::kPlayer2)) {
    ctx->lower = extract_strategy(ctx->report, CertSide::kPlayer2);
  }
  if (with_oracle) {
    ctx->oracle_p1 = build_explicit_game(game, RevealOrder::kP1First, max_states);
    ctx->oracle_p1_solution = solve_turn_based_parity(ctx->oracle_p1->arena);
    ctx->oracle_p2 = build_explicit_game(game, RevealOrder::kP2First, max_states);
    ctx->oracle_p2_solution = solve_turn_based_parity(ctx->oracle_p2->arena);
  }
  return ctx;
}

bool certified_side(const EngineContext& ctx, Player p) {
  return p == Player::kOne ? ctx.upper.has_value() : ctx.lower.has_value();
}

AdvValue Session::budget(Player p) const { return budget_of(game(), config, p); }

const EngineSeat* Session::seat(Player p) const {
  for (const auto& s : seats) {
    if (s.side == p) return &s;
  }
  return nullptr;
}

Session new_session(std::shared_ptr<const EngineContext> context, const SessionOptions& options) {
  const FrugalParityGame& game = context->game;
  if (options.start < 0 || options.start >= game.size()) {
    throw IllegalAction("unknown start vertex");
  }
  if (options.p1_budget > max_budget(game.k)) {
    throw IllegalAction("player1 budget exceeds " + to_string(max_budget(game.k)));
  }
  Session s;
  s.context = std::move(context);
  s.human = options.human;
  s.config = {options.start, options.p1_budget};
  s.horizon = options.horizon;
  for (Player p : {Player::kOne, Player::kTwo}) {
    const bool human = (p == Player::kOne && options.human == HumanSide::kPlayer1) ||
                       (p == Player::kTwo && options.human == HumanSide::kPlayer2);
    if (human) continue;
    EngineSeat seat;
    seat.side = p;
    seat.preferred = options.preferred;
    refresh_mode(s, seat);
    s.seats.push_back(seat);
  }
  if (game.sink[options.start]) {
    s.status = meets(options.p1_budget, game.frugal[options.start]) ? PlayStatus::kPlayer1Won
                                                                    : PlayStatus::kPlayer2Won;
  }
  return s;
}

MoveHalf engine_action(const Session& s, Player p) {
  const EngineSeat* seat = s.seat(p);
  if (!seat) throw std::invalid_argument("engine_action: " + to_string(p) + " is human");
  const FrugalParityGame& game = s.game();
  const int v = s.config.vertex;
  if (game.sink[v]) throw IllegalAction("the play has ended");
  if (seat->mode == StrategySource::kCertified) {
    const CertGame& cert = side_cert(*s.context, p);
    const AdvValue bid = strategy_bid(cert.game, cert.thresholds, v, s.budget(p));
    return {bid, side_table(*s.context, p).move(cert, seat->cert_node)};
  }
  if (seat->mode == StrategySource::kOracle) {
    if (auto half = oracle_half(s, p)) return *half;
  }
  // Best effort: bid nothing, head for the vertex cheapest for this side.
  const ThresholdMap& t =
      p == Player::kOne ? s.context->thresholds : s.context->dual_thresholds;
  int target = game.succ[v].front();
  for (int u : game.succ[v]) {
    if (t[u] < t[target]) target = u;
  }
  return {AdvValue(0), target};
}

const RoundRecord& step(Session& s, std::optional<MoveHalf> opponent) {
  if (s.status != PlayStatus::kOngoing) throw IllegalAction("the play has ended");
  MoveHalf halves[2];
  for (Player p : {Player::kOne, Player::kTwo}) {
    if (s.seat(p)) {
      halves[player_index(p)] = engine_action(s, p);
    } else if (opponent) {
      halves[player_index(p)] = *opponent;
    } else {
      throw IllegalAction("missing move for " + to_string(p));
    }
  }
  RoundRecord record;
  record.round = s.history.size() + 1;
  record.before = s.config;
  record.p1 = halves[0];
  record.p2 = halves[1];
  record.outcome = apply_bids(s.game(), s.config, halves[0], halves[1]);

  const Session before = s;
  s.config = record.outcome.next;
  for (auto& seat : s.seats) {
    if (seat.mode == StrategySource::kCertified) {
      record.restart = follow_certificate(before, record, s, seat) || record.restart;
    }
  }
  s.history.push_back(record);

  const FrugalParityGame& game = s.game();
  const int v = s.config.vertex;
  if (game.sink[v]) {
    s.status = meets(s.config.p1_budget, game.frugal[v]) ? PlayStatus::kPlayer1Won
                                                         : PlayStatus::kPlayer2Won;
  } else if (s.history.size() >= s.horizon) {
    s.status = PlayStatus::kHorizon;
    s.provisional_winner = max_priority_winner(s);
  } else {
    for (auto& seat : s.seats) {
      refresh_mode(s, seat);
      if (seat.mode == StrategySource::kCertified) check_agreement(s, seat);
    }
  }
  return s.history.back();
}

std::string round_log_line(const FrugalParityGame& game, const RoundRecord& r) {
  nlohmann::json j = {
      {"round", r.round},
      {"vertex", game.ids[r.before.vertex]},
      {"p1_budget", to_string(r.before.p1_budget)},
      {"bids", {{"player1", to_string(r.p1.bid)}, {"player2", to_string(r.p2.bid)}}},
      {"moves", {{"player1", game.ids[r.p1.target]}, {"player2", game.ids[r.p2.target]}}},
      {"winner", to_string(r.outcome.winner)},
      {"advantage_used", r.outcome.advantage_used},
      {"next_vertex", game.ids[r.outcome.next.vertex]},
      {"next_p1_budget", to_string(r.outcome.next.p1_budget)},
      {"restart", r.restart},
  };
  return j.dump();
}

std::string round_log(const Session& s) {
  std::string out;
  for (const auto& r : s.history) out += round_log_line(s.game(), r) + "\n";
  return out;
}

}  // namespace bidding
