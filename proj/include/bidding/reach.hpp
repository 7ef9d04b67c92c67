#ifndef BIDDING_REACH_HPP_
#define BIDDING_REACH_HPP_

#include <string>
#include <vector>

#include "bidding/game.hpp"

namespace bidding {

// T_0, T_1, ..., T_fix; the last two entries are equal.
struct IterationTrace {
  std::vector<ThresholdMap> sweeps;
};

struct ReachResult {
  ThresholdMap thresholds;
  IterationTrace trace;
};

// Jacobi value iteration from top. Requires every priority even.
ReachResult solve_frugal_reachability(const FrugalParityGame& game);

// Requires every priority odd. Solved through the dual game only; the trace
// is the dual iteration.
ReachResult solve_frugal_safety(const FrugalParityGame& game);

// Upper bound on sweeps before the fixed point: |V| * (2k + 2).
std::size_t sweep_bound(const FrugalParityGame& game);

// One row per sweep, one column per vertex.
std::string render_trace(const FrugalParityGame& game, const IterationTrace& trace);

}  // namespace bidding

#endif  // BIDDING_REACH_HPP_
