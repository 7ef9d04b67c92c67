// Command-line driver. Exit codes: 0 solved/verified/true, 1 rejected/false,
// 2 input error.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bidding/average.hpp"
#include "bidding/certifier.hpp"
#include "bidding/engine.hpp"
#include "bidding/io.hpp"
#include "bidding/oracle.hpp"
#include "bidding/parity.hpp"
#include "bidding/reach.hpp"
#include "bidding/service.hpp"

namespace {

using namespace bidding;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInputError = 2;

struct Solved {
  ThresholdMap thresholds;
  std::string trace;
};

// Dispatches on the priority shape, as the objective normalization leaves it.
Solved solve_any(const FrugalParityGame& game) {
  if (all_priorities_even(game)) {
    ReachResult r = solve_frugal_reachability(game);
    return {r.thresholds, render_trace(game, r.trace)};
  }
  if (all_priorities_odd(game)) {
    ReachResult r = solve_frugal_safety(game);
    return {r.thresholds, "dual game\n" + render_trace(dualize(game), r.trace)};
  }
  ParityResult r = solve_frugal_parity(game);
  return {r.thresholds, render_parity_trace(game, r.trace)};
}

int vertex_arg(const FrugalParityGame& game, const std::string& id) {
  auto v = game.find(id);
  if (!v) throw std::invalid_argument("unknown vertex '" + id + "'");
  return *v;
}

std::string verdict_line(const FrugalParityGame& game, const CertReport& report) {
  std::string line = to_string(report.verdict);
  if (report.vertex) line += " at " + game.ids[*report.vertex];
  return line;
}

int cmd_solve(const std::string& path, bool trace, bool certify_flag, bool json) {
  const FrugalParityGame game = load_game(path);
  const Solved solved = solve_any(game);
  if (trace) std::cout << solved.trace;
  if (json) {
    std::cout << render_threshold_document(game, solved.thresholds);
  } else {
    std::cout << format_thresholds(game, solved.thresholds) << "\n";
  }
  if (certify_flag) {
    const CertReport report = certify(game, solved.thresholds);
    std::cout << "certification: " << verdict_line(game, report) << "\n";
    if (report.verdict != Verdict::kVerified) return kRejected;
  }
  return kOk;
}

int cmd_verify(const std::string& game_path, const std::string& candidate_path) {
  const FrugalParityGame game = load_game(game_path);
  const ThresholdMap t = parse_threshold_document(read_file(candidate_path), game);
  const CertReport report = certify(game, t);
  std::cout << verdict_line(game, report) << "\n";
  return report.verdict == Verdict::kVerified ? kOk : kRejected;
}

int cmd_oracle(const std::string& path, std::size_t max_states) {
  const FrugalParityGame game = load_game(path);
  std::cout << format_thresholds(game, oracle_thresholds(game, max_states)) << "\n";
  return kOk;
}

int cmd_decide(const std::string& path, const std::string& vertex, const std::string& level,
               const std::string& candidate_path) {
  const FrugalParityGame game = load_game(path);
  const int v = vertex_arg(game, vertex);
  const ThresholdValue l = parse_threshold(level);
  bool answer = false;
  if (candidate_path.empty()) {
    answer = decide_threshold(game, v, l);
  } else {
    const ThresholdMap t = parse_threshold_document(read_file(candidate_path), game);
    const Decision d = decide_threshold(game, t, v, l);
    if (!d.certified) {
      std::cout << "uncertified\n";
      return kRejected;
    }
    answer = d.answer;
  }
  std::cout << (answer ? "true" : "false") << "\n";
  return answer ? kOk : kRejected;
}

void print_state(const Session& s) {
  const FrugalParityGame& g = s.game();
  std::cout << "round " << s.history.size() << ": at " << g.ids[s.config.vertex]
            << ", player1 " << to_string(s.budget(Player::kOne)) << ", player2 "
            << to_string(s.budget(Player::kTwo)) << "\n";
}

void print_seats(const Session& s) {
  for (const EngineSeat& seat : s.seats) {
    std::cout << "engine " << to_string(seat.side) << ": " << to_string(seat.mode);
    if (seat.mode != StrategySource::kCertified && seat.preferred == StrategySource::kCertified) {
      std::cout << " (certified play refused: "
                << (certified_side(*s.context, seat.side) ? "budget below threshold"
                                                          : "certificate not verified")
                << "; heuristic mode, best effort)";
    }
    std::cout << "\n";
  }
}

int cmd_play(const std::string& path, int as, const std::string& start,
             const std::string& budget, const std::string& source, std::size_t horizon) {
  const FrugalParityGame game = load_game(path);
  SessionOptions options;
  options.human = as == 1 ? HumanSide::kPlayer1 : HumanSide::kPlayer2;
  options.start = vertex_arg(game, start);
  options.p1_budget = parse_budget(budget);
  options.preferred = source == "oracle"      ? StrategySource::kOracle
                      : source == "heuristic" ? StrategySource::kHeuristic
                                              : StrategySource::kCertified;
  options.horizon = horizon;
  Session s = new_session(make_context(game, source == "oracle"), options);
  const Player human = as == 1 ? Player::kOne : Player::kTwo;
  std::cout << "thresholds " << format_thresholds(game, s.context->thresholds) << "\n";
  print_seats(s);
  std::string line;
  while (s.status == PlayStatus::kOngoing) {
    print_state(s);
    std::cout << "your bid and move (" << to_string(human) << "): " << std::flush;
    if (!std::getline(std::cin, line)) {
      std::cout << "\n";
      break;
    }
    std::istringstream in(line);
    std::string bid, move;
    if (!(in >> bid >> move)) {
      std::cout << "expected: <bid> <vertex>\n";
      continue;
    }
    try {
      const auto target = game.find(move);
      if (!target) throw IllegalAction("unknown vertex '" + move + "'");
      const RoundRecord& r = step(s, MoveHalf{parse_budget(bid), *target});
      std::cout << "bids player1 " << to_string(r.p1.bid) << ", player2 " << to_string(r.p2.bid)
                << "; " << to_string(r.outcome.winner) << " moves to "
                << game.ids[r.outcome.next.vertex] << (r.outcome.tie ? " (tie)" : "") << "\n";
    } catch (const BudgetError& e) {
      std::cout << "illegal: " << e.what() << "\n";
    } catch (const IllegalAction& e) {
      std::cout << "illegal: " << e.what() << "\n";
    }
  }
  if (s.status != PlayStatus::kOngoing) print_state(s);
  std::cout << "status: " << to_string(s.status);
  if (s.provisional_winner) std::cout << " (provisional " << to_string(*s.provisional_winner) << ")";
  std::cout << "\n";
  return kOk;
}

int cmd_serve(int port, const std::string& host) {
  Service service(service_config_from_env());
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!service.listen(host, port)) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve, certify and play discrete-bidding graph games"};
  app.require_subcommand(1);

  std::string game_path, candidate_path, vertex, level, start, budget;
  bool trace = false, certify_flag = false, json = false;
  std::size_t max_states = kDefaultMaxStates;
  int as = 2;
  std::string source = "certified";
  std::size_t horizon = 200;
  int port = service_port_from_env();
  std::string host = "127.0.0.1";

  auto* solve = app.add_subcommand("solve", "Compute threshold budgets");
  solve->add_option("game", game_path, "Game file")->required();
  solve->add_flag("--trace", trace, "Print the iteration tables");
  solve->add_flag("--certify", certify_flag, "Certify the result");
  solve->add_flag("--json", json, "Print a threshold document");

  auto* verify = app.add_subcommand("verify", "Certify a candidate threshold map");
  verify->add_option("game", game_path, "Game file")->required();
  verify->add_option("candidate", candidate_path, "Threshold document")->required();

  auto* oracle = app.add_subcommand("oracle", "Thresholds by explicit-state search");
  oracle->add_option("game", game_path, "Game file")->required();
  oracle->add_option("--max-states", max_states, "Refuse games needing more states");

  auto* decide = app.add_subcommand("decide", "Is the threshold at a vertex at least a level");
  decide->add_option("game", game_path, "Game file")->required();
  decide->add_option("vertex", vertex, "Vertex id")->required();
  decide->add_option("level", level, "Budget literal or top")->required();
  decide->add_option("--candidate", candidate_path, "Certify this map and answer from it");

  auto* play = app.add_subcommand("play", "Play against the engine on the terminal");
  play->add_option("game", game_path, "Game file")->required();
  play->add_option("--as", as, "Human side")->check(CLI::IsMember({1, 2}));
  play->add_option("--start", start, "Start vertex")->required();
  play->add_option("--p1-budget", budget, "Player 1 budget")->required();
  play->add_option("--source", source, "Engine strategy")
      ->check(CLI::IsMember({"certified", "oracle", "heuristic"}));
  play->add_option("--horizon", horizon, "Round limit");

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port, "Port (default BIDGAME_PORT or 8080)");
  serve->add_option("--host", host, "Bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve) return cmd_solve(game_path, trace, certify_flag, json);
    if (*verify) return cmd_verify(game_path, candidate_path);
    if (*oracle) return cmd_oracle(game_path, max_states);
    if (*decide) return cmd_decide(game_path, vertex, level, candidate_path);
    if (*play) return cmd_play(game_path, as, start, budget, source, horizon);
    if (*serve) return cmd_serve(port, host);
  } catch (const GameError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const BudgetError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const OracleCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
