#include "bidding/game.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bidding {

namespace {

bool requires_priorities(ObjectiveKind kind) {
  return kind == ObjectiveKind::kParity || kind == ObjectiveKind::kFrugalParity;
}

bool requires_frugal(ObjectiveKind kind) {
  return kind == ObjectiveKind::kFrugalReachability ||
         kind == ObjectiveKind::kFrugalSafety ||
         kind == ObjectiveKind::kFrugalParity;
}

bool uses_accepting_set(ObjectiveKind kind) {
  return kind == ObjectiveKind::kBuchi || kind == ObjectiveKind::kCoBuchi;
}

std::string edge_location(const std::string& from, const std::string& to) {
  return "edge " + from + "->" + to;
}

}  // namespace

std::string format_report(const ValidationReport& report) {
  std::ostringstream os;
  for (const auto& issue : report) {
    os << issue.location << ": " << issue.message << '\n';
  }
  return os.str();
}

GameError::GameError(ValidationReport report)
    : std::runtime_error("invalid game:\n" + format_report(report)),
      report_(std::move(report)) {}

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kReachability: return "reachability";
    case ObjectiveKind::kSafety: return "safety";
    case ObjectiveKind::kBuchi: return "buchi";
    case ObjectiveKind::kCoBuchi: return "cobuchi";
    case ObjectiveKind::kParity: return "parity";
    case ObjectiveKind::kFrugalReachability: return "frugal-reachability";
    case ObjectiveKind::kFrugalSafety: return "frugal-safety";
    case ObjectiveKind::kFrugalParity: return "frugal-parity";
  }
  return "unknown";
}

std::optional<ObjectiveKind> parse_objective_kind(std::string_view text) {
  for (auto kind : {ObjectiveKind::kReachability, ObjectiveKind::kSafety,
                    ObjectiveKind::kBuchi, ObjectiveKind::kCoBuchi,
                    ObjectiveKind::kParity, ObjectiveKind::kFrugalReachability,
                    ObjectiveKind::kFrugalSafety, ObjectiveKind::kFrugalParity}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::optional<int> FrugalParityGame::find(std::string_view id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids.begin());
}

int FrugalParityGame::index(std::string_view id) const {
  auto v = find(id);
  if (!v) throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::vector<int> FrugalParityGame::non_sinks() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (!sink[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> FrugalParityGame::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (sink[v]) out.push_back(v);
  }
  return out;
}

std::size_t FrugalParityGame::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ) n += s.size();
  return n;
}

std::size_t FrugalParityGame::max_out_degree() const {
  std::size_t d = 0;
  for (const auto& s : succ) d = std::max(d, s.size());
  return d;
}

ValidationReport validate_game(const GameDescription& description) {
  ValidationReport report;
  const ObjectiveKind kind = description.objective
                                 ? description.objective->kind
                                 : ObjectiveKind::kFrugalParity;
  std::map<std::string, bool> is_sink;
  auto declare = [&](const std::string& id, bool sink) {
    if (id.empty()) {
      report.push_back({"vertices", "empty vertex id"});
      return;
    }
    if (!is_sink.emplace(id, sink).second) {
      report.push_back({id, "duplicate vertex id"});
    }
  };
  for (const auto& v : description.vertices) {
    declare(v.id, false);
    if (v.priority && *v.priority < 0) {
      report.push_back({v.id, "negative priority"});
    }
    if (!v.priority && requires_priorities(kind)) {
      report.push_back({v.id, "missing priority"});
    }
  }
  for (const auto& s : description.sinks) {
    declare(s.id, true);
    if (s.frugal && !s.frugal->within(description.k)) {
      report.push_back({s.id, "frugal target " + to_string(*s.frugal) +
                                  " exceeds " +
                                  to_string(max_budget(description.k))});
    }
    if (!s.frugal && requires_frugal(kind)) {
      report.push_back({s.id, "missing frugal target"});
    }
    if (s.frugal && kind == ObjectiveKind::kSafety && !s.frugal->is_top()) {
      report.push_back({s.id, "safety sinks are losing; frugal must be top"});
    }
  }
  std::set<std::string> has_out;
  for (const auto& [from, to] : description.edges) {
    auto f = is_sink.find(from);
    auto t = is_sink.find(to);
    if (f == is_sink.end()) {
      report.push_back({edge_location(from, to), "unknown source vertex"});
    } else if (f->second) {
      report.push_back({edge_location(from, to), "sink with outgoing edge"});
    } else {
      has_out.insert(from);
    }
    if (t == is_sink.end()) {
      report.push_back({edge_location(from, to), "unknown target vertex"});
    }
  }
  for (const auto& v : description.vertices) {
    if (!has_out.count(v.id)) {
      report.push_back({v.id, "non-sink without outgoing edge"});
    }
  }
  if (description.objective) {
    for (const auto& id : description.objective->accepting) {
      auto it = is_sink.find(id);
      if (!uses_accepting_set(kind)) {
        report.push_back({"objective", "accepting set given for " + to_string(kind)});
        break;
      }
      if (it == is_sink.end()) {
        report.push_back({"objective", "unknown accepting vertex " + id});
      } else if (it->second) {
        report.push_back({"objective", "accepting vertex " + id + " is a sink"});
      }
    }
  }
  return report;
}

ValidationReport validate_game(const FrugalParityGame& game) {
  ValidationReport report;
  const std::size_t n = game.ids.size();
  if (game.sink.size() != n || game.priority.size() != n ||
      game.frugal.size() != n || game.succ.size() != n) {
    report.push_back({"game", "per-vertex tables differ in length"});
    return report;
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(game.ids[i - 1] < game.ids[i])) {
      report.push_back({game.ids[i], "ids not strictly sorted"});
    }
  }
  for (int v = 0; v < game.size(); ++v) {
    const auto& id = game.ids[v];
    if (game.sink[v]) {
      if (!game.succ[v].empty()) report.push_back({id, "sink with outgoing edge"});
      if (!game.frugal[v].within(game.k)) {
        report.push_back({id, "frugal target exceeds k*"});
      }
    } else {
      if (game.succ[v].empty()) {
        report.push_back({id, "non-sink without outgoing edge"});
      }
      if (game.priority[v] < 0) report.push_back({id, "negative priority"});
    }
    for (std::size_t i = 0; i < game.succ[v].size(); ++i) {
      int w = game.succ[v][i];
      if (w < 0 || w >= game.size()) {
        report.push_back({id, "edge to unknown vertex"});
      } else if (i > 0 && game.succ[v][i - 1] >= w) {
        report.push_back({id, "successor list not sorted"});
      }
    }
  }
  return report;
}

FrugalParityGame normalize_objective(const GameDescription& description) {
  ValidationReport report = validate_game(description);
  if (!report.empty()) throw GameError(std::move(report));

  const ObjectiveKind kind = description.objective
                                 ? description.objective->kind
                                 : ObjectiveKind::kFrugalParity;
  std::set<std::string> accepting;
  if (description.objective) {
    accepting.insert(description.objective->accepting.begin(),
                     description.objective->accepting.end());
  }

  FrugalParityGame game;
  game.k = description.k;
  for (const auto& v : description.vertices) game.ids.push_back(v.id);
  for (const auto& s : description.sinks) game.ids.push_back(s.id);
  std::sort(game.ids.begin(), game.ids.end());
  const int n = game.size();
  game.sink.assign(n, false);
  game.priority.assign(n, 0);
  game.frugal.assign(n, AdvValue(0));
  game.succ.assign(n, {});

  for (const auto& v : description.vertices) {
    const int i = game.index(v.id);
    switch (kind) {
      case ObjectiveKind::kReachability:
      case ObjectiveKind::kFrugalReachability:
        game.priority[i] = 2;
        break;
      case ObjectiveKind::kSafety:
      case ObjectiveKind::kFrugalSafety:
        game.priority[i] = 1;
        break;
      case ObjectiveKind::kBuchi:
        game.priority[i] = accepting.count(v.id) ? 3 : 2;
        break;
      case ObjectiveKind::kCoBuchi:
        game.priority[i] = accepting.count(v.id) ? 2 : 1;
        break;
      case ObjectiveKind::kParity:
      case ObjectiveKind::kFrugalParity:
        game.priority[i] = static_cast<int>(*v.priority);
        break;
    }
  }
  for (const auto& s : description.sinks) {
    const int i = game.index(s.id);
    game.sink[i] = true;
    if (kind == ObjectiveKind::kSafety) {
      game.frugal[i] = ThresholdValue::top();
    } else {
      game.frugal[i] = s.frugal.value_or(AdvValue(0));
    }
  }
  for (const auto& [from, to] : description.edges) {
    game.succ[game.index(from)].push_back(game.index(to));
  }
  for (auto& s : game.succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return game;
}

GameDescription describe(const FrugalParityGame& game) {
  GameDescription d;
  d.k = game.k;
  for (int v = 0; v < game.size(); ++v) {
    if (game.sink[v]) {
      d.sinks.push_back({game.ids[v], game.frugal[v]});
    } else {
      d.vertices.push_back({game.ids[v], game.priority[v]});
      for (int w : game.succ[v]) d.edges.emplace_back(game.ids[v], game.ids[w]);
    }
  }
  return d;
}

FrugalParityGame dualize(const FrugalParityGame& game) {
  FrugalParityGame dual = game;
  for (int v = 0; v < dual.size(); ++v) {
    if (dual.sink[v]) {
      dual.frugal[v] = flip_threshold(game.frugal[v], game.k);
    } else {
      dual.priority[v] = game.priority[v] + 1;
    }
  }
  return dual;
}

FrugalParityGame make_game(
    std::uint64_t k, const std::vector<std::pair<std::string, int>>& vertices,
    const std::vector<std::pair<std::string, ThresholdValue>>& sinks,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  GameDescription d;
  d.k = k;
  for (const auto& [id, p] : vertices) d.vertices.push_back({id, p});
  for (const auto& [id, fr] : sinks) d.sinks.push_back({id, fr});
  d.edges = edges;
  return normalize_objective(d);
}

bool all_priorities_even(const FrugalParityGame& game) {
  for (int v : game.non_sinks()) {
    if (game.priority[v] % 2 != 0) return false;
  }
  return true;
}

bool all_priorities_odd(const FrugalParityGame& game) {
  for (int v : game.non_sinks()) {
    if (game.priority[v] % 2 == 0) return false;
  }
  return true;
}

std::string format_thresholds(const FrugalParityGame& game, const ThresholdMap& t) {
  std::string out;
  for (int v = 0; v < game.size(); ++v) {
    if (v > 0) out += ' ';
    out += game.ids[v] + '=' + to_string(t[v]);
  }
  return out;
}

}  // namespace bidding
