#ifndef BIDDING_PARITY_HPP_
#define BIDDING_PARITY_HPP_

#include <string>
#include <vector>

#include "bidding/game.hpp"

namespace bidding {

// One outer iteration of the top-priority loop at some recursion depth.
// Maps cover every vertex of the game solved at that depth; when `dual` is
// set they are player 2's thresholds (the level was solved on the dual).
struct ParityIteration {
  int depth = 0;
  bool dual = false;
  int top_priority = 0;
  std::size_t index = 0;
  std::vector<int> top_set;   // F_d
  ThresholdMap inner;         // S_i / G_i: F_d entries hold fr_i
  ThresholdMap reach;         // R_i; empty when the loop stopped first
  ThresholdMap combined;      // Th_i
};

struct ParityTrace {
  std::vector<ParityIteration> entries;
};

struct ParityResult {
  ThresholdMap thresholds;
  ParityTrace trace;
};

ParityResult solve_frugal_parity(const FrugalParityGame& game);

// The d = 2 instance: priorities in {1, 2}, F = the priority-2 vertices.
ParityResult solve_cobuchi(const FrugalParityGame& game);

// Th_i of the top-level loop: S_i / G_i off F_d, fr_i on F_d with fr_0 = top
// and fr_i = R_{i-1}. Past the fixed point, or when a base case solves the
// game without the loop, this is the final map.
ThresholdMap bounded_threshold(const FrugalParityGame& game, std::size_t i);

// Cap on outer iterations per level: |V| * (2k + 2) + 1.
std::size_t outer_iteration_bound(const FrugalParityGame& game);

std::string render_parity_trace(const FrugalParityGame& game, const ParityTrace& trace);

}  // namespace bidding

#endif  // BIDDING_PARITY_HPP_
