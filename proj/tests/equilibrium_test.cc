// Copyright 2026 The MONFG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monfg/equilibrium.h"

#include <random>

#include "gtest/gtest.h"
#include "monfg/errors.h"
#include "test_support.h"

namespace monfg {
namespace {

using testing::ClippedProductUtility;
using testing::CriteriaDisagreeGame;
using testing::GymGame;
using testing::GymUtilities;
using testing::Mix;

std::vector<UtilityExpr> ClippedProductUtilities() {
  return {ClippedProductUtility(), ClippedProductUtility()};
}

std::vector<double> ScalarPayoffs(const Nfg& nfg, int player) {
  return {nfg.flat_payoffs(player).begin(), nfg.flat_payoffs(player).end()};
}

TEST(ReduceMonfgTest, GymTradeOffGame) {
  const TradeOffGame t = ReduceMonfg(GymGame(), GymUtilities());
  EXPECT_TRUE(t.nfg.is_scalar());
  EXPECT_EQ(ScalarPayoffs(t.nfg, 0), (std::vector<double>{17, 26, 5, 4}));
  EXPECT_EQ(ScalarPayoffs(t.nfg, 1), (std::vector<double>{4, 4, 5, 3}));
  EXPECT_EQ(t.source, GymGame());
}

TEST(ReduceMonfgTest, CounterTradeOffGame) {
  const TradeOffGame t =
      ReduceMonfg(CriteriaDisagreeGame(), ClippedProductUtilities());
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(ScalarPayoffs(t.nfg, i), (std::vector<double>{0.1, 0, 0, -1}));
  }
}

TEST(ReduceMonfgTest, LinearUtilityOnScalarGameIsIdentity) {
  const Monfg pd = testing::PrisonersDilemma();
  const TradeOffGame t = ReduceMonfg(
      pd, std::vector<UtilityExpr>{ParseUtility("p1"), ParseUtility("p1")});
  EXPECT_EQ(t.nfg, pd);
}

TEST(ComputeAllPsneTest, PrisonersDilemma) {
  const PsneSet s = ComputeAllPsne(testing::PrisonersDilemma());
  EXPECT_TRUE(s.all);
  EXPECT_EQ(s.profiles, (std::vector<ActionProfile>{{1, 1}}));
}

TEST(ComputeAllPsneTest, GymTradeOffGame) {
  const PsneSet s = ComputeAllPsne(ReduceMonfg(GymGame(), GymUtilities()).nfg);
  EXPECT_EQ(s.profiles, (std::vector<ActionProfile>{{0, 0}, {0, 1}}));
}

TEST(ComputeAllPsneTest, CounterTradeOffGame) {
  const PsneSet s = ComputeAllPsne(
      ReduceMonfg(CriteriaDisagreeGame(), ClippedProductUtilities()).nfg);
  EXPECT_EQ(s.profiles, (std::vector<ActionProfile>{{0, 0}}));
}

TEST(ComputeAllPsneTest, NoEquilibriumGameHasNone) {
  const std::vector<UtilityExpr> u{testing::SquaredNorm(),
                                   testing::SquaredNorm()};
  const TradeOffGame t = ReduceMonfg(testing::NoEquilibriumGame(), u);
  EXPECT_TRUE(ComputeAllPsne(t.nfg).profiles.empty());
  EXPECT_FALSE(ComputeSamplePsne(t.nfg));
}

TEST(ComputeAllPsneTest, MatchingPenniesHasNone) {
  const Nfg pennies({2, 2}, 1, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
  EXPECT_TRUE(ComputeAllPsne(pennies).profiles.empty());
}

TEST(ComputeAllPsneTest, SingleCellIsEquilibrium) {
  const Nfg trivial({1, 1}, 1, {{3}, {-2}});
  EXPECT_EQ(ComputeAllPsne(trivial).profiles,
            (std::vector<ActionProfile>{{0, 0}}));
  EXPECT_EQ(ComputeSamplePsne(trivial), (ActionProfile{0, 0}));
}

TEST(ComputeAllPsneTest, TiesCountAsEquilibria) {
  const Nfg constant({2, 3}, 1, {{1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0}});
  EXPECT_EQ(ComputeAllPsne(constant).profiles.size(), 6u);
}

TEST(ComputeAllPsneTest, ToleranceAbsorbsTinyGains) {
  const Nfg g({2}, 1, {{1.0, 1.0 + 1e-12}});
  EXPECT_EQ(ComputeAllPsne(g).profiles.size(), 2u);
  EXPECT_EQ(ComputeAllPsne(g, 0.0).profiles, (std::vector<ActionProfile>{{1}}));
}

TEST(ComputeAllPsneTest, RejectsVectorGames) {
  EXPECT_THROW(ComputeAllPsne(GymGame()), InvalidInputError);
}

TEST(ComputeAllPsneTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(7);
  int discrepancies = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int players = testing::UniformInt(rng, 1, 3);
    const Monfg game = testing::RandomGame(rng, players, 3, 1, -5, 5);
    std::vector<std::vector<double>> payoffs;
    for (int i = 0; i < players; ++i) payoffs.push_back(ScalarPayoffs(game, i));
    const auto expected =
        testing::BruteForcePsne(game.action_counts(), payoffs, 1e-9);
    std::vector<std::vector<int>> actual;
    for (const ActionProfile& a : ComputeAllPsne(game).profiles) {
      actual.push_back(a.actions());
    }
    if (actual != expected) ++discrepancies;
    if (const auto sample = ComputeSamplePsne(game)) {
      EXPECT_FALSE(expected.empty());
      EXPECT_EQ(sample->actions(), expected.front());
    } else {
      EXPECT_TRUE(expected.empty());
    }
  }
  EXPECT_EQ(discrepancies, 0);
}

TEST(BestResponseTest, CounterGameAgainstPureA) {
  const StrategyProfile s{Mix({1, 0}), Mix({1, 0})};
  for (int player = 0; player < 2; ++player) {
    const BestResponseResult r =
        BestResponse(CriteriaDisagreeGame(), ClippedProductUtilities(), player,
                     s, Criterion::kSer);
    EXPECT_FALSE(r.exact);
    EXPECT_NEAR(r.strategy[0], 0.55, 1e-6);
    EXPECT_NEAR(r.strategy[1], 0.45, 1e-6);
    EXPECT_NEAR(r.value, 0.3025, 1e-8);
    EXPECT_EQ(r.grid, 50);
    EXPECT_EQ(r.restarts, 8);
  }
}

TEST(BestResponseTest, GymColumnPlayerAgainstCardio) {
  const StrategyProfile s{Mix({1, 0}), Mix({1, 0})};
  const BestResponseResult r =
      BestResponse(GymGame(), GymUtilities(), 1, s, Criterion::kSer);
  EXPECT_NEAR(r.strategy[0], 0.5, 1e-6);
  EXPECT_NEAR(r.value, 6.25, 1e-8);
}

TEST(BestResponseTest, EsrIsExactLowestIndexArgmax) {
  const StrategyProfile s{Mix({1, 0}), Mix({0.5, 0.5})};
  const BestResponseResult r =
      BestResponse(GymGame(), GymUtilities(), 1, s, Criterion::kEsr);
  EXPECT_TRUE(r.exact);
  // Against Cardio the trade-off column values are 4 and 4.
  EXPECT_EQ(r.strategy, MixedStrategy::Pure(2, 0));
  EXPECT_EQ(r.value, 4);
}

TEST(BestResponseTest, SerNeverWorseThanBestPureAction) {
  std::mt19937_64 rng(11);
  SearchConfig fast{.grid = 10, .restarts = 2, .refinement_budget = 200};
  for (int trial = 0; trial < 100; ++trial) {
    const Monfg game = testing::RandomGame(rng, 2, 4, 2, -3, 3);
    const std::vector<UtilityExpr> u{testing::RandomUtility(rng),
                                     testing::RandomUtility(rng)};
    const StrategyProfile s = testing::RandomProfile(rng, game);
    const int i = testing::UniformInt(rng, 0, 1);
    const BestResponseResult r =
        BestResponse(game, u, i, s, Criterion::kSer, fast);
    EXPECT_NEAR(r.value,
                SerValue(
                    game, u,
                    [&] {
                      StrategyProfile t = s;
                      t[i] = r.strategy;
                      return t;
                    }(),
                    i),
                1e-12);
    for (int a = 0; a < game.num_actions(i); ++a) {
      StrategyProfile t = s;
      t[i] = MixedStrategy::Pure(game.num_actions(i), a);
      EXPECT_GE(r.value, SerValue(game, u, t, i) - 1e-12);
    }
  }
}

TEST(BestResponseTest, RejectsBadConfig) {
  const StrategyProfile s{Mix({1, 0}), Mix({1, 0})};
  EXPECT_THROW(BestResponse(GymGame(), GymUtilities(), 1, s, Criterion::kSer,
                            {.grid = 1}),
               InvalidInputError);
  EXPECT_THROW(BestResponse(GymGame(), GymUtilities(), 2, s, Criterion::kSer),
               InvalidInputError);
}

TEST(VerifyNeTest, CounterGameMixAgainstPureA) {
  const BlendedAssignment all_ser{Criterion::kSer, Criterion::kSer};
  for (const StrategyProfile& s :
       {StrategyProfile{Mix({0.55, 0.45}), Mix({1, 0})},
        StrategyProfile{Mix({1, 0}), Mix({0.55, 0.45})}}) {
    const VerificationReport r = VerifyNe(
        CriteriaDisagreeGame(), ClippedProductUtilities(), s, all_ser, 1e-6);
    EXPECT_TRUE(r.is_epsilon_ne);
    for (int i = 0; i < 2; ++i) {
      EXPECT_NEAR(r.values[i], 0.3025, 1e-12);
      EXPECT_GE(r.exploitability[i], 0.0);
      EXPECT_LE(r.exploitability[i], 1e-6);
      EXPECT_TRUE(r.lower_bound[i]);
    }
  }
}

TEST(VerifyNeTest, CounterGameBothMixingIsExploitable) {
  const StrategyProfile s{Mix({0.55, 0.45}), Mix({0.55, 0.45})};
  const VerificationReport r =
      VerifyNe(CriteriaDisagreeGame(), ClippedProductUtilities(), s,
               {Criterion::kSer, Criterion::kSer}, 1e-6);
  EXPECT_FALSE(r.is_epsilon_ne);
  // Deviating to pure A yields 0.3025 against the mix.
  EXPECT_NEAR(r.values[0], -0.17225, 1e-12);
  EXPECT_GE(r.best_response_values[0], 0.3025 - 1e-12);
}

TEST(VerifyNeTest, CounterGamePureAIsRejectedUnderSer) {
  const StrategyProfile s{Mix({1, 0}), Mix({1, 0})};
  const VerificationReport r =
      VerifyNe(CriteriaDisagreeGame(), ClippedProductUtilities(), s,
               {Criterion::kSer, Criterion::kSer}, 1e-6);
  EXPECT_FALSE(r.is_epsilon_ne);
  for (int i = 0; i < 2; ++i) {
    EXPECT_NEAR(r.exploitability[i], 0.2025, 1e-6);
  }
  EXPECT_NEAR(r.max_exploitability(), 0.2025, 1e-6);
}

TEST(VerifyNeTest, CounterGamePureAIsEquilibriumUnderEsr) {
  const StrategyProfile s{Mix({1, 0}), Mix({1, 0})};
  const VerificationReport r =
      VerifyNe(CriteriaDisagreeGame(), ClippedProductUtilities(), s,
               {Criterion::kEsr, Criterion::kEsr}, 0.0);
  EXPECT_TRUE(r.is_epsilon_ne);
  EXPECT_EQ(r.exploitability, (std::vector<double>{0, 0}));
  EXPECT_EQ(r.lower_bound, (std::vector<bool>{false, false}));
}

TEST(VerifyNeTest, GymBlendedProfile) {
  const StrategyProfile s{Mix({1, 0}), Mix({0.5, 0.5})};
  const VerificationReport r = VerifyNe(
      GymGame(), GymUtilities(), s, {Criterion::kEsr, Criterion::kSer}, 1e-6);
  EXPECT_TRUE(r.is_epsilon_ne);
  EXPECT_NEAR(r.values[1], 6.25, 1e-12);
  // Player 2 playing pure Cardio instead is exploitable.
  const VerificationReport pure =
      VerifyNe(GymGame(), GymUtilities(), {Mix({1, 0}), Mix({1, 0})},
               {Criterion::kEsr, Criterion::kSer}, 1e-6);
  EXPECT_FALSE(pure.is_epsilon_ne);
  EXPECT_NEAR(pure.exploitability[1], 2.25, 1e-6);
}

TEST(VerifyNeTest, Validation) {
  const StrategyProfile s{Mix({1, 0}), Mix({1, 0})};
  EXPECT_THROW(VerifyNe(GymGame(), GymUtilities(), s, {Criterion::kEsr}, 0),
               InvalidInputError);
  EXPECT_THROW(VerifyNe(GymGame(), GymUtilities(), s,
                        {Criterion::kEsr, Criterion::kEsr}, -1),
               InvalidInputError);
  EXPECT_THROW(
      VerifyNe(GymGame(), GymUtilities(), {Mix({1, 0, 0}), Mix({1, 0})},
               {Criterion::kEsr, Criterion::kEsr}, 0),
      InvalidInputError);
}

TEST(PsneMonfgTest, CounterGameTrustedWarns) {
  const PsneResult r =
      PsneMonfg(CriteriaDisagreeGame(), ClippedProductUtilities());
  EXPECT_EQ(r.psne.profiles, (std::vector<ActionProfile>{{0, 0}}));
  ASSERT_EQ(r.warnings.size(), 2u);
  for (const PsneWarning& w : r.warnings) {
    ASSERT_TRUE(w.counterexample);
    const ShapeCounterexample& c = *w.counterexample;
    const ShapeSides sides = EvaluateShapeSides(
        ClippedProductUtility(), Shape::kQuasiconvex, c.x1, c.x2, c.lambda);
    EXPECT_GT(sides.lhs, sides.rhs + kDefaultTolerance);
  }
  EXPECT_EQ(r.valid_for, (std::vector<std::string>{"ESR"}));
}

TEST(PsneMonfgTest, CounterGameVerifiedRejectsPureA) {
  PsneOptions options;
  options.mode = PsneMode::kVerifiedSer;
  const PsneResult r =
      PsneMonfg(CriteriaDisagreeGame(), ClippedProductUtilities(), options);
  EXPECT_TRUE(r.psne.profiles.empty());
  ASSERT_EQ(r.rejected.size(), 1u);
  EXPECT_EQ(r.rejected[0].profile, (ActionProfile{0, 0}));
  EXPECT_NEAR(r.rejected[0].report.max_exploitability(), 0.2025, 1e-6);
}

TEST(PsneMonfgTest, GymUtilityTwoIsNotQuasiconvex) {
  const PsneResult r = PsneMonfg(GymGame(), GymUtilities());
  EXPECT_EQ(r.psne.profiles, (std::vector<ActionProfile>{{0, 0}, {0, 1}}));
  // p1^2 + p2 is convex; p1 * p2 is not quasiconvex on the positive box.
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].player, 1);
  // The explicit triple (5,0), (0,5) at 0.5 witnesses the failure.
  const std::vector<double> x1{5, 0};
  const std::vector<double> x2{0, 5};
  const ShapeSides sides = EvaluateShapeSides(ParseUtility("(* p1 p2)"),
                                              Shape::kQuasiconvex, x1, x2, 0.5);
  EXPECT_EQ(sides.lhs, 6.25);
  EXPECT_EQ(sides.rhs, 0);
}

TEST(PsneMonfgTest, GymVerifiedKeepsOnlySerStableProfiles) {
  PsneOptions options;
  options.mode = PsneMode::kVerifiedSer;
  const PsneResult r = PsneMonfg(GymGame(), GymUtilities(), options);
  // Against Cardio the column player gains by mixing, so (Cardio, Cardio) and
  // (Cardio, Lifting) are both exploitable under SER.
  EXPECT_TRUE(r.psne.profiles.empty());
  EXPECT_EQ(r.rejected.size(), 2u);
}

TEST(PsneMonfgTest, QuasiconvexUtilitiesAreTrusted) {
  const std::vector<UtilityExpr> u{testing::SquaredNorm(),
                                   ParseUtility("(max p1 p2)")};
  const PsneResult r = PsneMonfg(testing::NoEquilibriumGame(), u);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_EQ(r.valid_for, (std::vector<std::string>{"ESR", "SER", "blended"}));
}

TEST(PsneMonfgTest, PrisonersDilemmaWithIdentityUtility) {
  const std::vector<UtilityExpr> u{ParseUtility("p1"), ParseUtility("p1")};
  PsneOptions options;
  options.mode = PsneMode::kVerifiedSer;
  const PsneResult r = PsneMonfg(testing::PrisonersDilemma(), u, options);
  EXPECT_EQ(r.psne.profiles, (std::vector<ActionProfile>{{1, 1}}));
  EXPECT_TRUE(r.warnings.empty());
}

}  // namespace
}  // namespace monfg
