#include "bidding/parity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bidding/average.hpp"
#include "bidding/reach.hpp"

namespace bidding {

namespace {

// Vertices flagged in `to_sink` become sinks with frugal target fr[v].
FrugalParityGame with_sinks(const FrugalParityGame& game, const std::vector<bool>& to_sink,
                            const ThresholdMap& fr) {
  FrugalParityGame sub = game;
  for (int v = 0; v < sub.size(); ++v) {
    if (!to_sink[v] || sub.sink[v]) continue;
    sub.sink[v] = true;
    sub.priority[v] = 0;
    sub.frugal[v] = fr[v];
    sub.succ[v].clear();
  }
  return sub;
}

bool equal_on(const ThresholdMap& a, const ThresholdMap& b, const std::vector<bool>& mask) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (mask[v] && a[v] != b[v]) return false;
  }
  return true;
}

ThresholdMap solve_level(const FrugalParityGame& game, int depth, bool dual,
                         ParityTrace* trace) {
  const std::vector<int> non_sinks = game.non_sinks();
  if (non_sinks.empty()) return game.frugal;
  if (all_priorities_even(game)) return solve_frugal_reachability(game).thresholds;
  if (all_priorities_odd(game)) return solve_frugal_safety(game).thresholds;

  int d = 0;
  for (int v : non_sinks) d = std::max(d, game.priority[v]);
  if (d % 2 == 1) {
    return complement_function(solve_level(dualize(game), depth, !dual, trace), game.k);
  }

  std::vector<bool> in_f(game.size(), false);
  std::vector<bool> off_f(game.size(), false);  // non-sinks outside F_d
  std::vector<int> top_set;
  for (int v : non_sinks) {
    if (game.priority[v] == d) {
      in_f[v] = true;
      top_set.push_back(v);
    } else {
      off_f[v] = true;
    }
  }
  std::vector<bool> not_f(game.size());
  for (int v = 0; v < game.size(); ++v) not_f[v] = !in_f[v];

  ThresholdMap fr(game.size(), ThresholdValue::top());
  ThresholdMap previous_inner;
  ThresholdMap combined;
  const std::size_t bound = outer_iteration_bound(game);
  for (std::size_t i = 0;; ++i) {
    if (i > bound) throw std::logic_error("solve_frugal_parity: iteration bound exceeded");
    ThresholdMap inner = solve_level(with_sinks(game, in_f, fr), depth + 1, dual, trace);
    combined = inner;
    ParityIteration entry{depth, dual, d, i, top_set, inner, {}, combined};
    const bool settled = i > 0 && equal_on(inner, previous_inner, off_f);
    if (!settled) {
      // Targets: everything outside F_d, valued by the inner solution.
      entry.reach = solve_frugal_reachability(with_sinks(game, not_f, inner)).thresholds;
    }
    if (trace) trace->entries.push_back(entry);
    if (settled) break;
    ThresholdMap next = fr;
    for (int v : top_set) next[v] = entry.reach[v];
    if (equal_on(next, fr, in_f)) break;
    fr = std::move(next);
    previous_inner = std::move(inner);
  }
  return combined;
}

}  // namespace

std::size_t outer_iteration_bound(const FrugalParityGame& game) {
  return game.ids.size() * (2 * game.k + 2) + 1;
}

ParityResult solve_frugal_parity(const FrugalParityGame& game) {
  ParityResult result;
  result.thresholds = solve_level(game, 0, false, &result.trace);
  return result;
}

ParityResult solve_cobuchi(const FrugalParityGame& game) {
  for (int v : game.non_sinks()) {
    if (game.priority[v] != 1 && game.priority[v] != 2) {
      throw std::invalid_argument("solve_cobuchi: priority outside {1, 2} at " + game.ids[v]);
    }
  }
  return solve_frugal_parity(game);
}

ThresholdMap bounded_threshold(const FrugalParityGame& game, std::size_t i) {
  ParityResult result = solve_frugal_parity(game);
  const ParityIteration* hit = nullptr;
  for (const auto& e : result.trace.entries) {
    if (e.depth == 0 && e.index == i) hit = &e;
  }
  if (!hit) return result.thresholds;
  return hit->dual ? complement_function(hit->combined, game.k) : hit->combined;
}

std::string render_parity_trace(const FrugalParityGame& game, const ParityTrace& trace) {
  std::ostringstream os;
  for (const auto& e : trace.entries) {
    std::vector<bool> in_f(game.size(), false);
    for (int v : e.top_set) in_f[v] = true;
    auto row = [&](const char* name, const ThresholdMap& m, auto keep) {
      os << "  " << name;
      for (int v = 0; v < game.size(); ++v) {
        if (keep(v)) os << ' ' << game.ids[v] << '=' << to_string(m[v]);
      }
      os << '\n';
    };
    os << "level " << e.depth << (e.dual ? " dual" : "") << " priority "
       << e.top_priority << " iteration " << e.index << '\n';
    row("inner", e.inner, [&](int v) { return !in_f[v] && !game.sink[v]; });
    if (!e.reach.empty()) row("reach", e.reach, [&](int v) { return in_f[v]; });
    row("Th   ", e.combined, [](int) { return true; });
  }
  return os.str();
}

}  // namespace bidding
