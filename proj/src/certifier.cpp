#include "bidding/certifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "bidding/average.hpp"
#include "bidding/parity.hpp"

namespace bidding {

namespace {

constexpr int kSinkPriority = 1;
constexpr int kResponsePriority = 0;

[[noreturn]] void broken(const std::string& what) {
  throw std::logic_error("certificate construction: " + what);
}

}  // namespace

int CertGame::agreeing(int v, AdvValue b) const {
  for (int node : config_nodes[v]) {
    if (node < 0) continue;
    const AdvValue c = nodes[node].budget;
    if (c.has_advantage() == b.has_advantage() && c <= b) return node;
  }
  return -1;
}

std::string CertGame::label(int node) const {
  const CertNode& n = nodes[node];
  switch (n.kind) {
    case CertNode::Kind::kConfig:
      return "<" + game.ids[n.vertex] + "," + to_string(n.budget) + ">";
    case CertNode::Kind::kTop:
      return "<" + game.ids[n.vertex] + ",top>";
    case CertNode::Kind::kResponse:
      return "<" + game.ids[n.vertex] + "|" + label(n.parent) + ">";
  }
  return "?";
}

std::size_t cert_vertex_bound(const FrugalParityGame& game) {
  return 3 * game.ids.size() + 2 * game.edge_count();
}

std::size_t cert_edge_bound(const FrugalParityGame& game) {
  return 2 * game.edge_count() * (2 + game.max_out_degree());
}

CertGame build_cert_game(const FrugalParityGame& input, const ThresholdMap& input_t,
                         CertSide side) {
  if (!check_average(input, input_t).empty()) {
    throw std::invalid_argument("build_cert_game: map lacks the average property");
  }
  CertGame cert;
  cert.side = side;
  if (side == CertSide::kPlayer1) {
    cert.game = input;
    cert.thresholds = input_t;
  } else {
    cert.game = dualize(input);
    cert.thresholds = complement_function(input_t, input.k);
    if (!check_average(cert.game, cert.thresholds).empty()) {
      broken("complement lacks the average property on the dual");
    }
  }
  const FrugalParityGame& g = cert.game;
  const ThresholdMap& t = cert.thresholds;
  const AdvValue cap = max_budget(g.k);
  const int n = g.size();

  cert.config_nodes.assign(n, {-1, -1});
  cert.top_nodes.assign(n, -1);
  auto add = [&](CertNode node, Owner owner, int priority, bool sink) {
    cert.nodes.push_back(node);
    return cert.arena.add_vertex(owner, priority, sink);
  };
  for (int v = 0; v < n; ++v) {
    const bool sink = g.sink[v];
    const int p = sink ? kSinkPriority : g.priority[v];
    if (!t[v].is_top()) {
      const AdvValue low = t[v].value();
      cert.config_nodes[v][0] =
          add({CertNode::Kind::kConfig, v, low, -1}, Owner::kProtagonist, p, sink);
      if (low < cap) {
        cert.config_nodes[v][1] = add({CertNode::Kind::kConfig, v, succ(low), -1},
                                      Owner::kProtagonist, p, sink);
      }
    }
    cert.top_nodes[v] =
        add({CertNode::Kind::kTop, v, AdvValue(), -1}, Owner::kProtagonist, kSinkPriority, true);
  }

  // Node for <w, budget>, or <w, top> above succ T(w).
  auto target = [&](int w, AdvValue budget) {
    if (!meets(budget, t[w])) broken("budget " + to_string(budget) + " below T(" + g.ids[w] + ")");
    for (int node : cert.config_nodes[w]) {
      if (node >= 0 && cert.nodes[node].budget == budget) return node;
    }
    return cert.top_nodes[w];
  };

  const int config_count = static_cast<int>(cert.nodes.size());
  for (int c = 0; c < config_count; ++c) {
    const CertNode node = cert.nodes[c];
    if (node.kind != CertNode::Kind::kConfig || g.sink[node.vertex]) continue;
    const int v = node.vertex;
    const AdvValue b = node.budget;
    const AdvValue bid = strategy_bid(g, t, v, b);
    const AdvValue overbid = cheapest_overbid(b, bid);
    const AdvValue opponent = opponent_budget(b, g.k);
    const bool contested = overbid <= opponent;
    for (int allowed : allowed_set(g, t, v)) {
      const int r = add({CertNode::Kind::kResponse, allowed, AdvValue(), c},
                        Owner::kAntagonist, kResponsePriority, false);
      cert.arena.succ[c].push_back(r);
      std::vector<int> out;
      const AdvValue conceded = ominus(b, bid);
      const int keep = target(allowed, conceded);
      if (keep == cert.top_nodes[allowed]) broken("concession lands above succ T");
      out.push_back(keep);
      if (contested) {
        const AdvValue raised = oplus(b, overbid);
        if (raised > cap) broken("raised budget above k*");
        for (int w : g.succ[v]) out.push_back(target(w, raised));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      cert.arena.succ[r] = std::move(out);
    }
  }

  if (cert.nodes.size() > cert_vertex_bound(g)) broken("vertex bound exceeded");
  if (cert.arena.edge_count() > cert_edge_bound(g)) broken("edge bound exceeded");
  return cert;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kVerified: return "Verified";
    case Verdict::kRejectedAverage: return "RejectedAverage";
    case Verdict::kRejectedUpper: return "RejectedUpper";
    case Verdict::kRejectedLower: return "RejectedLower";
  }
  return "?";
}

namespace {

// First game vertex of a node the protagonist does not win.
std::optional<int> first_loss(const CertGame& cert, const TurnBasedSolution& sol) {
  for (int node = 0; node < cert.arena.size(); ++node) {
    if (sol.protagonist_wins[node]) continue;
    const CertNode& n = cert.nodes[node];
    return n.kind == CertNode::Kind::kResponse ? cert.nodes[n.parent].vertex : n.vertex;
  }
  return std::nullopt;
}

}  // namespace

CertReport certify(const FrugalParityGame& game, const ThresholdMap& t) {
  CertReport report;
  bool in_range = t.size() == game.ids.size();
  for (std::size_t v = 0; in_range && v < t.size(); ++v) in_range = t[v].within(game.k);
  if (!in_range) {
    report.verdict = Verdict::kRejectedAverage;
    return report;
  }
  const std::vector<int> bad = check_average(game, t);
  if (!bad.empty()) {
    report.verdict = Verdict::kRejectedAverage;
    report.vertex = bad.front();
    return report;
  }
  report.upper = build_cert_game(game, t, CertSide::kPlayer1);
  report.upper_solution = solve_turn_based_parity(report.upper->arena);
  report.lower = build_cert_game(game, t, CertSide::kPlayer2);
  report.lower_solution = solve_turn_based_parity(report.lower->arena);
  if (auto v = first_loss(*report.upper, report.upper_solution)) {
    report.verdict = Verdict::kRejectedUpper;
    report.vertex = v;
  } else if (auto w = first_loss(*report.lower, report.lower_solution)) {
    report.verdict = Verdict::kRejectedLower;
    report.vertex = w;
  } else {
    report.verdict = Verdict::kVerified;
  }
  return report;
}

int StrategyTable::move(const CertGame& cert, int node) const {
  const int r = choice.at(node);
  if (r < 0) throw std::out_of_range("no strategy entry at " + cert.label(node));
  return cert.nodes[r].vertex;
}

bool side_verified(const CertReport& report, CertSide side) {
  const auto& cert = side == CertSide::kPlayer1 ? report.upper : report.lower;
  const TurnBasedSolution& sol =
      side == CertSide::kPlayer1 ? report.upper_solution : report.lower_solution;
  return cert && !first_loss(*cert, sol);
}

StrategyTable extract_strategy(const CertReport& report, CertSide side) {
  if (!side_verified(report, side)) {
    throw std::invalid_argument("extract_strategy: side is not verified");
  }
  const CertGame& cert = side == CertSide::kPlayer1 ? *report.upper : *report.lower;
  const TurnBasedSolution& sol =
      side == CertSide::kPlayer1 ? report.upper_solution : report.lower_solution;
  StrategyTable table;
  table.choice.assign(cert.arena.size(), -1);
  for (int node = 0; node < cert.arena.size(); ++node) {
    if (cert.arena.sink[node] || cert.arena.owner[node] != Owner::kProtagonist) continue;
    table.choice[node] = sol.strategy[node];
    ++table.entries;
  }
  return table;
}

bool decide_threshold(const FrugalParityGame& game, int v, ThresholdValue level) {
  const ThresholdMap t = solve_frugal_parity(game).thresholds;
  const CertReport report = certify(game, t);
  if (report.verdict != Verdict::kVerified) {
    throw std::logic_error("decide_threshold: solver output failed certification (" +
                           to_string(report.verdict) + ")");
  }
  return t[v] >= level;
}

Decision decide_threshold(const FrugalParityGame& game, const ThresholdMap& candidate,
                          int v, ThresholdValue level) {
  if (certify(game, candidate).verdict != Verdict::kVerified) return {false, false};
  return {true, candidate[v] >= level};
}

}  // namespace bidding
