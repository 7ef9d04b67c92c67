#include <gtest/gtest.h>

#include <random>

#include "bidding/average.hpp"
#include "bidding/parity.hpp"
#include "bidding/reach.hpp"
#include "brute_force.hpp"
#include "fixtures.hpp"

namespace bidding {
namespace {

ThresholdMap parse_map(const FrugalParityGame& g, const std::vector<std::string>& literals) {
  ThresholdMap t;
  for (const auto& l : literals) t.push_back(parse_threshold(l));
  EXPECT_EQ(t.size(), g.ids.size());
  return t;
}

// Restriction of a map to the listed vertices, as text.
std::string on(const FrugalParityGame& g, const ThresholdMap& t, std::vector<std::string> ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += id + "=" + to_string(t[g.index(id)]);
  }
  return out;
}

TEST(CoBuchi, LoopGameIterationsMatchBoundedReference) {
  const auto g = testing::fix_b();
  const ParityResult r = solve_cobuchi(g);
  std::vector<const ParityIteration*> top;
  for (const auto& e : r.trace.entries) {
    if (e.depth == 0) top.push_back(&e);
  }
  ASSERT_EQ(top.size(), 4u);
  const std::vector<std::string> outside = {"v0", "v1", "v2"};
  // S_i outside F is the bounded threshold for i entries; R_i on F is the
  // bounded threshold for i + 1 entries.
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(on(g, top[i]->inner, outside),
              on(g, testing::brute_bounded_thresholds(g, i), outside)) << i;
    EXPECT_EQ(on(g, top[i]->reach, {"t"}),
              on(g, testing::brute_bounded_thresholds(g, i + 1), {"t"})) << i;
  }
  EXPECT_EQ(on(g, top[0]->inner, outside), "v0=3 v1=3* v2=4*");
  EXPECT_EQ(on(g, top[0]->reach, {"t"}), "t=3*");
  EXPECT_EQ(on(g, top[1]->inner, outside), "v0=0 v1=0* v2=1*");
  EXPECT_EQ(on(g, top[1]->reach, {"t"}), "t=0*");
  EXPECT_EQ(on(g, top[2]->inner, outside), "v0=0 v1=0 v2=0");
  EXPECT_EQ(on(g, top[2]->reach, {"t"}), "t=0");
  EXPECT_TRUE(top[3]->reach.empty());
  EXPECT_EQ(format_thresholds(g, r.thresholds), "t=0 v0=0 v1=0 v2=0");
  EXPECT_EQ(r.thresholds, testing::brute_thresholds(g));
}

TEST(CoBuchi, SameAsTheGeneralRecursion) {
  const auto g = testing::fix_b();
  const ParityResult a = solve_cobuchi(g);
  const ParityResult b = solve_frugal_parity(g);
  EXPECT_EQ(a.thresholds, b.thresholds);
  EXPECT_EQ(render_parity_trace(g, a.trace), render_parity_trace(g, b.trace));
  EXPECT_THROW(solve_cobuchi(make_game(1, {{"a", 3}}, {}, {{"a", "a"}})), std::invalid_argument);
}

TEST(CoBuchi, BoundedThresholdsDecreaseToTheAnswer) {
  const auto g = testing::fix_b();
  EXPECT_EQ(bounded_threshold(g, 0), parse_map(g, {"top", "3", "3*", "4*"}));
  EXPECT_EQ(bounded_threshold(g, 1), parse_map(g, {"3*", "0", "0*", "1*"}));
  EXPECT_EQ(bounded_threshold(g, 2), parse_map(g, {"0*", "0", "0", "0"}));
  EXPECT_EQ(bounded_threshold(g, 3), parse_map(g, {"0", "0", "0", "0"}));
  EXPECT_EQ(bounded_threshold(g, 10), solve_frugal_parity(g).thresholds);
}

TEST(FrugalParity, BaseCasesDelegate) {
  const auto a = testing::fix_a();
  EXPECT_EQ(solve_frugal_parity(a).thresholds, solve_frugal_reachability(a).thresholds);
  EXPECT_TRUE(solve_frugal_parity(a).trace.entries.empty());
  const auto s = make_game(2, {{"a", 3}, {"b", 1}}, {{"x", ThresholdValue::top()}},
                           {{"a", "b"}, {"b", "a"}, {"b", "x"}});
  EXPECT_EQ(solve_frugal_parity(s).thresholds, solve_frugal_safety(s).thresholds);
}

TEST(FrugalParity, BuchiGameMatchesReference) {
  // Player 1 must see v1 infinitely often.
  GameDescription d;
  d.k = 4;
  d.vertices = {{"v0", {}}, {"v1", {}}, {"v2", {}}};
  d.edges = {{"v0", "v1"}, {"v0", "v2"}, {"v1", "v0"}, {"v2", "v2"}, {"v2", "v0"}};
  d.objective = Objective{ObjectiveKind::kBuchi, {"v1"}};
  const auto g = normalize_objective(d);
  EXPECT_EQ(solve_frugal_parity(g).thresholds, testing::brute_thresholds(g));
}

TEST(FrugalParity, OutputHasTheAverageProperty) {
  std::mt19937_64 rng(50);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_game(rng);
    EXPECT_TRUE(check_average(g, solve_frugal_parity(g).thresholds).empty());
  }
}

TEST(FrugalParity, DualityOnRandomGames) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_game(rng);
    const ThresholdMap t = solve_frugal_parity(g).thresholds;
    const ThresholdMap dual = solve_frugal_parity(dualize(g)).thresholds;
    ASSERT_EQ(complement_function(dual, g.k), t);
  }
}

TEST(FrugalParity, InvariantUnderEvenPriorityShift) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_game(rng);
    FrugalParityGame shifted = g;
    for (int v : g.non_sinks()) shifted.priority[v] += 2;
    ASSERT_EQ(solve_frugal_parity(shifted).thresholds, solve_frugal_parity(g).thresholds);
    ASSERT_EQ(solve_frugal_parity(dualize(dualize(g))).thresholds,
              solve_frugal_parity(g).thresholds);
  }
}

TEST(FrugalParity, OuterLoopWithinBound) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_game(rng);
    const ParityResult r = solve_frugal_parity(g);
    for (const auto& e : r.trace.entries) EXPECT_LE(e.index, outer_iteration_bound(g));
  }
}

TEST(FrugalParity, TraceRendering) {
  const auto g = testing::fix_b();
  const std::string text = render_parity_trace(g, solve_frugal_parity(g).trace);
  EXPECT_EQ(text.rfind("level 0 priority 2 iteration 0\n  inner v0=3 v1=3* v2=4*\n", 0), 0u);
}

}  // namespace
}  // namespace bidding
