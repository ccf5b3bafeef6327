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

#include "monfg/game.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "monfg/errors.h"
#include "test_support.h"

namespace monfg {
namespace {

using testing::GymGame;
using testing::Mix;
using testing::PrisonersDilemma;
using testing::TwoObjectiveExample;

TEST(PurePayoffVectorTest, PrisonersDilemmaDefectAgainstCooperate) {
  const Monfg game = PrisonersDilemma();
  EXPECT_EQ(PurePayoffVector(game, {1, 0}, 0), std::vector<double>{0});
  EXPECT_EQ(PurePayoffVector(game, {1, 0}, 1), std::vector<double>{-3});
}

TEST(PurePayoffVectorTest, TwoObjectiveExampleRowPlaysB) {
  const Monfg game = TwoObjectiveExample();
  EXPECT_EQ(PurePayoffVector(game, {1, 0}, 0), (std::vector<double>{1, 0}));
  EXPECT_EQ(PurePayoffVector(game, {1, 0}, 1), (std::vector<double>{0, 1}));
}

TEST(PurePayoffVectorTest, FirstProfileIsFirstStoredVector) {
  const Monfg game = GymGame();
  EXPECT_EQ(PurePayoffVector(game, {0, 0}, 0), (std::vector<double>{4, 1}));
}

TEST(PurePayoffVectorTest, RejectsOutOfRangeIndices) {
  const Monfg game = GymGame();
  EXPECT_THROW(PurePayoffVector(game, {2, 0}, 0), InvalidInputError);
  EXPECT_THROW(PurePayoffVector(game, {0, 0}, 2), InvalidInputError);
  EXPECT_THROW(PurePayoffVector(game, {0}, 0), InvalidInputError);
}

TEST(ExpectedPayoffVectorTest, EvenMixOfTwoOutcomes) {
  // Outcomes (0, 2) and (2, 0) with probability 1/2 each.
  const Monfg game = Monfg::FromVectors({2}, {{{0, 2}, {2, 0}}});
  EXPECT_EQ(ExpectedPayoffVector(game, {Mix({0.5, 0.5})}, 0),
            (std::vector<double>{1, 1}));
}

TEST(ExpectedPayoffVectorTest, GymColumnPlayerAgainstCardio) {
  const Monfg game = GymGame();
  for (double x : {0.0, 0.25, 0.5, 0.8, 1.0}) {
    const auto v = ExpectedPayoffVector(
        game, {MixedStrategy::Pure(2, 0), Mix({x, 1 - x})}, 1);
    EXPECT_NEAR(v[0], 4 * x + (1 - x), 1e-15);
    EXPECT_NEAR(v[1], x + 4 * (1 - x), 1e-15);
  }
  EXPECT_EQ(ExpectedPayoffVector(
                game, {MixedStrategy::Pure(2, 0), Mix({0.5, 0.5})}, 1),
            (std::vector<double>{2.5, 2.5}));
}

TEST(ExpectedPayoffVectorTest, RejectsShapeMismatch) {
  const Monfg game = GymGame();
  EXPECT_THROW(ExpectedPayoffVector(game, {Mix({1.0})}, 0), InvalidInputError);
  EXPECT_THROW(
      ExpectedPayoffVector(game, {Mix({1.0}), MixedStrategy::Uniform(2)}, 0),
      InvalidInputError);
}

TEST(JointActionProfilesTest, RowMajorOrder) {
  const Monfg two_by_two = PrisonersDilemma();
  const std::vector<ActionProfile> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(JointActionProfiles(two_by_two), expected);

  const Monfg single = Monfg({3}, 1, {{1, 2, 3}});
  EXPECT_EQ(JointActionProfiles(single),
            (std::vector<ActionProfile>{{0}, {1}, {2}}));

  const Monfg two_by_three =
      Monfg({2, 3}, 1, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}});
  const auto profiles = JointActionProfiles(two_by_three);
  ASSERT_EQ(profiles.size(), 6u);
  EXPECT_EQ(profiles[2], (ActionProfile{0, 2}));
  EXPECT_EQ(two_by_three.JointIndex({0, 2}), 2);
}

TEST(JointActionProfilesTest, EnumerationIsCompleteAndDistinct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Monfg game =
        testing::RandomGame(rng, testing::UniformInt(rng, 1, 4), 3, 1, 0, 0);
    const auto profiles = JointActionProfiles(game);
    const std::set<ActionProfile> unique(profiles.begin(), profiles.end());
    std::int64_t expected = 1;
    for (int m : game.action_counts()) expected *= m;
    EXPECT_EQ(static_cast<std::int64_t>(profiles.size()), expected);
    EXPECT_EQ(unique.size(), profiles.size());
    EXPECT_TRUE(std::is_sorted(profiles.begin(), profiles.end()));
  }
}

TEST(PureProfileTest, DegenerateStrategies) {
  const std::vector<int> counts{2, 2};
  const StrategyProfile profile = PureProfile({1, 0}, counts);
  EXPECT_EQ(profile[0], Mix({0, 1}));
  EXPECT_EQ(profile[1], Mix({1, 0}));
  const std::vector<int> one{1};
  EXPECT_EQ(PureProfile({0}, one)[0], Mix({1}));
}

TEST(PureProfileTest, ExpectationMatchesLookupExactly) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Monfg game =
        testing::RandomGame(rng, testing::UniformInt(rng, 1, 3), 3, 3, -5, 5);
    for (const ActionProfile& a : JointActionProfiles(game)) {
      const StrategyProfile s = PureProfile(a, game.action_counts());
      for (int i = 0; i < game.num_players(); ++i) {
        EXPECT_EQ(ExpectedPayoffVector(game, s, i),
                  PurePayoffVector(game, a, i));
      }
    }
  }
}

TEST(MixedStrategyTest, ValidatesSimplex) {
  EXPECT_THROW(Mix({}), InvalidInputError);
  EXPECT_THROW(Mix({0.5, 0.6}), InvalidInputError);
  EXPECT_THROW(Mix({1.5, -0.5}), InvalidInputError);
  EXPECT_THROW(Mix({NAN, 1.0}), InvalidInputError);
  const MixedStrategy nearly = Mix({0.3, 0.7 + 5e-13});
  EXPECT_DOUBLE_EQ(nearly[0] + nearly[1], 1.0);
  EXPECT_EQ(Mix({0, 1, 0}).PureAction(), 1);
  EXPECT_EQ(Mix({0.5, 0.5}).PureAction(), -1);
}

TEST(MonfgTest, ValidatesShape) {
  EXPECT_THROW(Monfg({}, 1, {}), InvalidInputError);
  EXPECT_THROW(Monfg({2}, 0, {{}}), InvalidInputError);
  EXPECT_THROW(Monfg({0}, 1, {{}}), InvalidInputError);
  EXPECT_THROW(Monfg({2}, 1, {{1}}), InvalidInputError);
  EXPECT_THROW(Monfg({2}, 1, {{1, 2}, {1, 2}}), InvalidInputError);
  EXPECT_THROW(Monfg({2}, 1, {{1, INFINITY}}), InvalidInputError);
}

// Multilinearity in each player's own strategy.
TEST(ExpectedPayoffVectorTest, LinearInOwnStrategy) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Monfg game =
        testing::RandomGame(rng, testing::UniformInt(rng, 1, 3), 3, 2, -5, 5);
    StrategyProfile s = testing::RandomProfile(rng, game);
    const int i = testing::UniformInt(rng, 0, game.num_players() - 1);
    const MixedStrategy s1 = testing::RandomStrategy(rng, game.num_actions(i));
    const MixedStrategy s2 = testing::RandomStrategy(rng, game.num_actions(i));
    const double lambda = std::uniform_real_distribution<double>(0, 1)(rng);
    std::vector<double> mixed(game.num_actions(i));
    for (int a = 0; a < game.num_actions(i); ++a) {
      mixed[a] = lambda * s1[a] + (1 - lambda) * s2[a];
    }
    s[i] = MixedStrategy(mixed);
    const auto combined = ExpectedPayoffVector(game, s, i);
    s[i] = s1;
    const auto first = ExpectedPayoffVector(game, s, i);
    s[i] = s2;
    const auto second = ExpectedPayoffVector(game, s, i);
    for (int o = 0; o < game.num_objectives(); ++o) {
      EXPECT_NEAR(combined[o], lambda * first[o] + (1 - lambda) * second[o],
                  1e-9);
    }
  }
}

TEST(ExpectedPayoffVectorTest, WithinPayoffHullAndMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Monfg game =
        testing::RandomGame(rng, testing::UniformInt(rng, 1, 3), 3, 2, -5, 5);
    const StrategyProfile s = testing::RandomProfile(rng, game);
    for (int i = 0; i < game.num_players(); ++i) {
      const auto v = ExpectedPayoffVector(game, s, i);
      const auto oracle = testing::BruteForceExpectedVector(game, s, i);
      for (int o = 0; o < game.num_objectives(); ++o) {
        double lo = INFINITY, hi = -INFINITY;
        for (std::int64_t k = 0; k < game.num_joint_actions(); ++k) {
          lo = std::min(lo, game.Payoff(i, k)[o]);
          hi = std::max(hi, game.Payoff(i, k)[o]);
        }
        EXPECT_GE(v[o], lo - 1e-12);
        EXPECT_LE(v[o], hi + 1e-12);
        EXPECT_NEAR(v[o], oracle[o], 1e-12);
      }
    }
  }
}

TEST(DeviationPayoffVectorsTest, AgreesWithPureDeviations) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Monfg game =
        testing::RandomGame(rng, testing::UniformInt(rng, 1, 3), 3, 2, -5, 5);
    StrategyProfile s = testing::RandomProfile(rng, game);
    const int i = testing::UniformInt(rng, 0, game.num_players() - 1);
    const auto deviations = DeviationPayoffVectors(game, s, i);
    for (int a = 0; a < game.num_actions(i); ++a) {
      s[i] = MixedStrategy::Pure(game.num_actions(i), a);
      const auto direct = ExpectedPayoffVector(game, s, i);
      for (int o = 0; o < game.num_objectives(); ++o) {
        EXPECT_NEAR(deviations[a][o], direct[o], 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace monfg
