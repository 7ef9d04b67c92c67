#include <gtest/gtest.h>

#include <random>

#include "bidding/average.hpp"
#include "bidding/engine.hpp"
#include "brute_force.hpp"
#include "fixtures.hpp"
#include "json.hpp"

namespace bidding {
namespace {

MoveHalf random_half(std::mt19937_64& rng, const Session& s, Player p) {
  const auto bids = legal_bids(s.budget(p));
  const auto& succ = s.game().succ[s.config.vertex];
  return {bids[rng() % bids.size()], succ[rng() % succ.size()]};
}

// Plays an engine seat against a uniformly random opponent and checks the
// per-round invariants of the engine seat.
Session play_random(std::shared_ptr<const EngineContext> ctx, const SessionOptions& options,
                    std::mt19937_64& rng) {
  Session s = new_session(std::move(ctx), options);
  const Player human = options.human == HumanSide::kPlayer1 ? Player::kOne : Player::kTwo;
  const std::uint64_t total = 2 * s.game().k + 1;
  while (s.status == PlayStatus::kOngoing) {
    const EngineSeat before = *s.seat(other(human));
    step(s, random_half(rng, s, human));
    EXPECT_EQ(s.budget(Player::kOne).level() + s.budget(Player::kTwo).level(), total);
    const EngineSeat& after = *s.seat(other(human));
    if (before.mode == StrategySource::kCertified && after.mode == StrategySource::kCertified &&
        s.status == PlayStatus::kOngoing) {
      EXPECT_GE(after.spare, before.spare);
      EXPECT_GE(after.restarts, before.restarts);
      EXPECT_LE(after.restarts, s.game().k + 1);
    }
  }
  return s;
}

TEST(ApplyBids, MatchesReferenceRules) {
  for (std::uint64_t k = 0; k <= 4; ++k) {
    const auto g = make_game(k, {{"v", 0}}, {{"a", AdvValue(0)}, {"b", AdvValue(0)}},
                             {{"v", "a"}, {"v", "b"}});
    const int a = g.index("a");
    const int b = g.index("b");
    for (long l1 = 0; l1 < static_cast<long>(2 * k + 2); ++l1) {
      const long l2 = static_cast<long>(2 * k + 1) - l1;
      for (long b1 : testing::legal_bid_levels(l1)) {
        for (long b2 : testing::legal_bid_levels(l2)) {
          bool p1_wins = false;
          const long next = testing::resolve_levels(l1, b1, b2, k, &p1_wins);
          const RoundOutcome r = apply_bids(
              g, {g.index("v"), AdvValue::from_level(l1)},
              {AdvValue::from_level(b1), a}, {AdvValue::from_level(b2), b});
          ASSERT_EQ(r.winner == Player::kOne, p1_wins) << k << " " << l1 << " " << b1 << " " << b2;
          ASSERT_EQ(static_cast<long>(r.next.p1_budget.level()), next);
          ASSERT_EQ(r.next.vertex, p1_wins ? a : b);
          ASSERT_EQ(r.tie, b1 / 2 == b2 / 2 && (b1 % 2) == 0 && (b2 % 2) == 0);
        }
      }
    }
  }
}

TEST(ApplyBids, RejectsIllegalHalves) {
  const auto g = testing::fix_a();
  const Configuration c{g.index("v0"), AdvValue(4)};
  const int v1 = g.index("v1");
  const int v2 = g.index("v2");
  EXPECT_THROW(apply_bids(g, c, {AdvValue(0, true), v1}, {AdvValue(0), v1}), IllegalAction);
  EXPECT_THROW(apply_bids(g, c, {AdvValue(5), v1}, {AdvValue(0), v1}), IllegalAction);
  EXPECT_THROW(apply_bids(g, c, {AdvValue(0), v1}, {AdvValue(2), v1}), IllegalAction);
  EXPECT_THROW(apply_bids(g, c, {AdvValue(0), v2}, {AdvValue(0), v1}), IllegalAction);
  EXPECT_THROW(apply_bids(g, {g.index("t"), AdvValue(4)}, {AdvValue(0), v1}, {AdvValue(0), v1}),
               IllegalAction);
  try {
    apply_bids(g, c, {AdvValue(1, true), v1}, {AdvValue(0), v1});
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_STREQ(e.what(), "player1 bid 1* claims the advantage it lacks");
  }
  EXPECT_NO_THROW(apply_bids(g, c, {AdvValue(0), v1}, {AdvValue(1, true), v1}));
}

TEST(Engine, CertifiedPlayer1FollowsTheStrategyOnTheLoop) {
  const auto ctx = make_context(testing::fix_a());
  const Session s = new_session(ctx, {.human = HumanSide::kPlayer2,
                                      .start = ctx->game.index("v1"),
                                      .p1_budget = AdvValue(4, true)});
  ASSERT_EQ(s.seat(Player::kOne)->mode, StrategySource::kCertified);
  const MoveHalf half = engine_action(s, Player::kOne);
  EXPECT_EQ(half.bid, AdvValue(0, true));
  EXPECT_EQ(ctx->game.ids[half.target], "v2");
  EXPECT_EQ(engine_action(s, Player::kOne), half);
}

TEST(Engine, CertifiedPlayer1WinsFromTheThreshold) {
  const auto ctx = make_context(testing::fix_a());
  std::mt19937_64 rng(90);
  std::size_t restarts = 0;
  for (int start : ctx->game.non_sinks()) {
    for (int run = 0; run < 1000; ++run) {
      const Session s = play_random(ctx,
                                    {.human = HumanSide::kPlayer2,
                                     .start = start,
                                     .p1_budget = ctx->thresholds[start].value(),
                                     .horizon = 10000},
                                    rng);
      ASSERT_EQ(s.status, PlayStatus::kPlayer1Won);
      EXPECT_GE(s.config.p1_budget, AdvValue(2));
      restarts += s.seat(Player::kOne)->restarts;
    }
  }
  EXPECT_GT(restarts, 0u);
}

TEST(Engine, CertifiedPlayer2WinsBelowTheThreshold) {
  const auto ctx = make_context(testing::fix_a());
  std::mt19937_64 rng(91);
  for (int start : ctx->game.non_sinks()) {
    const SessionOptions options = {.human = HumanSide::kPlayer1,
                                    .start = start,
                                    .p1_budget = pred(ctx->thresholds[start].value()),
                                    .horizon = 300};
    ASSERT_EQ(new_session(ctx, options).seat(Player::kTwo)->mode, StrategySource::kCertified);
    for (int run = 0; run < 1000; ++run) {
      ASSERT_NE(play_random(ctx, options, rng).status, PlayStatus::kPlayer1Won);
    }
  }
}

TEST(Engine, CertifiedSeatsKeepTheirInvariantsOnRandomGames) {
  std::mt19937_64 rng(92);
  int certified_plays = 0;
  for (int i = 0; i < 150; ++i) {
    const auto g = testing::random_game(rng);
    const auto ctx = make_context(g);
    for (Player p : {Player::kOne, Player::kTwo}) {
      if (!certified_side(*ctx, p)) continue;
      const ThresholdMap& t = p == Player::kOne ? ctx->thresholds : ctx->dual_thresholds;
      for (int v : g.non_sinks()) {
        if (t[v].is_top()) continue;
        const AdvValue own = t[v].value();
        const AdvValue p1 = p == Player::kOne ? own : opponent_budget(own, g.k);
        for (int run = 0; run < 20; ++run) {
          const Session s = play_random(ctx,
                                        {.human = p == Player::kOne ? HumanSide::kPlayer2
                                                                    : HumanSide::kPlayer1,
                                         .start = v,
                                         .p1_budget = p1,
                                         .horizon = 200},
                                        rng);
          ++certified_plays;
          // A certified seat never loses at a sink.
          if (p == Player::kOne) EXPECT_NE(s.status, PlayStatus::kPlayer2Won);
          if (p == Player::kTwo) EXPECT_NE(s.status, PlayStatus::kPlayer1Won);
        }
      }
    }
  }
  EXPECT_GT(certified_plays, 1000);
}

TEST(Engine, HeuristicBelowTheThreshold) {
  const auto ctx = make_context(testing::fix_a());
  const Session s = new_session(
      ctx, {.human = HumanSide::kPlayer2, .start = ctx->game.index("v0"), .p1_budget = AdvValue(4)});
  const EngineSeat& seat = *s.seat(Player::kOne);
  EXPECT_EQ(seat.mode, StrategySource::kHeuristic);
  const MoveHalf half = engine_action(s, Player::kOne);
  EXPECT_EQ(half.bid, AdvValue(0));
  EXPECT_EQ(ctx->game.ids[half.target], "v1");
}

TEST(Engine, OracleSeatWinsFromTheThreshold) {
  const auto ctx = make_context(testing::fix_a(), true);
  std::mt19937_64 rng(93);
  for (int run = 0; run < 200; ++run) {
    const Session s = play_random(ctx,
                                  {.human = HumanSide::kPlayer2,
                                   .start = ctx->game.index("v0"),
                                   .p1_budget = AdvValue(5),
                                   .preferred = StrategySource::kOracle,
                                   .horizon = 10000},
                                  rng);
    EXPECT_EQ(s.seat(Player::kOne)->mode, StrategySource::kOracle);
    ASSERT_EQ(s.status, PlayStatus::kPlayer1Won);
  }
}

TEST(Engine, HorizonEndsEngineOnlyPlays) {
  const auto ctx = make_context(testing::fix_b());
  Session s = new_session(ctx, {.human = HumanSide::kNone,
                                .start = ctx->game.index("v0"),
                                .p1_budget = AdvValue(2),
                                .horizon = 6});
  EXPECT_EQ(s.seats.size(), 2u);
  while (s.status == PlayStatus::kOngoing) step(s);
  EXPECT_EQ(s.status, PlayStatus::kHorizon);
  EXPECT_EQ(s.history.size(), 6u);
  ASSERT_TRUE(s.provisional_winner);
  EXPECT_THROW(step(s), IllegalAction);
}

TEST(Engine, IllegalHumanHalfLeavesTheSessionUnchanged) {
  const auto ctx = make_context(testing::fix_a());
  Session s = new_session(
      ctx, {.human = HumanSide::kPlayer2, .start = ctx->game.index("v0"), .p1_budget = AdvValue(5)});
  EXPECT_THROW(step(s, MoveHalf{AdvValue(1), ctx->game.index("v1")}), IllegalAction);
  EXPECT_TRUE(s.history.empty());
  EXPECT_EQ(s.config.p1_budget, AdvValue(5));
  EXPECT_THROW(step(s), IllegalAction);
  EXPECT_THROW(new_session(ctx, {.start = 9}), IllegalAction);
  EXPECT_THROW(new_session(ctx, {.p1_budget = AdvValue(6)}), IllegalAction);
}

TEST(Engine, StartingAtASinkEndsThePlay) {
  const auto ctx = make_context(testing::fix_a());
  const Session s = new_session(
      ctx, {.human = HumanSide::kPlayer2, .start = ctx->game.index("t"), .p1_budget = AdvValue(2)});
  EXPECT_EQ(s.status, PlayStatus::kPlayer1Won);
}

TEST(Engine, RoundLogHasOneRecordPerRound) {
  const auto ctx = make_context(testing::fix_a());
  Session s = new_session(
      ctx, {.human = HumanSide::kPlayer2, .start = ctx->game.index("v0"), .p1_budget = AdvValue(5)});
  step(s, MoveHalf{AdvValue(0), ctx->game.index("v1")});
  step(s, MoveHalf{AdvValue(0), ctx->game.index("v0")});
  const std::string log = round_log(s);
  EXPECT_EQ(std::count(log.begin(), log.end(), '\n'), 2);
  const auto first = nlohmann::json::parse(log.substr(0, log.find('\n')));
  EXPECT_EQ(first["round"], 1);
  EXPECT_EQ(first["vertex"], "v0");
  EXPECT_EQ(first["p1_budget"], "5");
  EXPECT_EQ(first["winner"], "player1");
  EXPECT_EQ(first["moves"]["player1"], "v1");
  EXPECT_EQ(first["restart"], false);
  EXPECT_TRUE(first.contains("bids"));
  EXPECT_TRUE(first.contains("next_p1_budget"));
}

TEST(Engine, UncertifiedSideFallsBack) {
  const auto g = make_game(3, {{"v0", 0}, {"v1", 0}}, {{"s0", AdvValue(2, true)}},
                           {{"v0", "s0"}, {"v0", "v1"}, {"v1", "v0"}});
  const auto ctx = make_context(g);
  EXPECT_FALSE(certified_side(*ctx, Player::kOne));
  const Session s =
      new_session(ctx, {.human = HumanSide::kPlayer2, .start = 0, .p1_budget = AdvValue(3)});
  EXPECT_EQ(s.seat(Player::kOne)->mode, StrategySource::kHeuristic);
}

}  // namespace
}  // namespace bidding
