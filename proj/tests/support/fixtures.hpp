#ifndef BIDDING_TESTS_FIXTURES_HPP_
#define BIDDING_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "bidding/game.hpp"

namespace bidding::testing {

// Three-vertex loop with exit v2 -> t, k = 5, fr(t) = 2; reachability.
FrugalParityGame fix_a();
// Same loop with t as a non-sink back to v1; co-Buchi on {t}, k = 5.
FrugalParityGame fix_b();

struct RandomGameOptions {
  int max_vertices = 5;       // sinks included
  int max_sinks = 2;
  std::uint64_t max_k = 5;
  int max_priority = 3;       // priorities drawn from [0, max_priority]
  int distinct_priorities = 3;
  double edge_probability = 0.4;
};

FrugalParityGame random_game(std::mt19937_64& rng, const RandomGameOptions& options = {});

// Source directory of the test data files.
std::string data_path(const std::string& name);

}  // namespace bidding::testing

#endif  // BIDDING_TESTS_FIXTURES_HPP_
