#include "bidding/reach.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bidding/average.hpp"

namespace bidding {

std::size_t sweep_bound(const FrugalParityGame& game) {
  return game.ids.size() * (2 * game.k + 2);
}

ReachResult solve_frugal_reachability(const FrugalParityGame& game) {
  if (!all_priorities_even(game)) {
    throw std::invalid_argument("solve_frugal_reachability: odd priority present");
  }
  ThresholdMap t(game.size());
  for (int v = 0; v < game.size(); ++v) {
    t[v] = game.sink[v] ? game.frugal[v] : ThresholdValue::top();
  }
  ReachResult result;
  result.trace.sweeps.push_back(t);
  const std::size_t bound = sweep_bound(game);
  for (std::size_t sweep = 0;; ++sweep) {
    // Each sweep reads only the previous map.
    ThresholdMap next = t;
    for (int v : game.non_sinks()) next[v] = average_at(game, t, v);
    result.trace.sweeps.push_back(next);
    if (next == t) break;
    if (sweep >= bound) {
      throw std::logic_error("solve_frugal_reachability: sweep bound exceeded");
    }
    t = std::move(next);
  }
  result.thresholds = std::move(t);
  return result;
}

ReachResult solve_frugal_safety(const FrugalParityGame& game) {
  if (!all_priorities_odd(game)) {
    throw std::invalid_argument("solve_frugal_safety: even priority present");
  }
  ReachResult dual = solve_frugal_reachability(dualize(game));
  dual.thresholds = complement_function(dual.thresholds, game.k);
  return dual;
}

std::string render_trace(const FrugalParityGame& game, const IterationTrace& trace) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n"});
  for (const auto& id : game.ids) rows.back().push_back(id);
  for (std::size_t n = 0; n < trace.sweeps.size(); ++n) {
    rows.push_back({std::to_string(n)});
    for (auto x : trace.sweeps[n]) rows.back().push_back(to_string(x));
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bidding
