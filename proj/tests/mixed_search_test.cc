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

#include "monfg/mixed_search.h"

#include <random>

#include "gtest/gtest.h"
#include "monfg/errors.h"
#include "monfg/simplex.h"
#include "test_support.h"

namespace monfg {
namespace {

using testing::CriteriaDisagreeGame;
using testing::Mix;

const BlendedAssignment kAllSer{Criterion::kSer, Criterion::kSer};

TEST(SearchMixedNe2pTest, CounterGameFindsBothAsymmetricEquilibria) {
  const std::vector<UtilityExpr> u{testing::ClippedProductUtility(),
                                   testing::ClippedProductUtility()};
  const MixedSearchResult r =
      SearchMixedNe2p(CriteriaDisagreeGame(), u, kAllSer);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.grid_points, 51 * 51);
  ASSERT_GE(r.equilibria.size(), 2u);
  const SimplexPoint first{{0.55, 0.45}, {1, 0}};
  const SimplexPoint second{{1, 0}, {0.55, 0.45}};
  bool found_first = false;
  bool found_second = false;
  for (const MixedEquilibrium& e : r.equilibria) {
    EXPECT_TRUE(e.report.is_epsilon_ne);
    EXPECT_LE(e.report.max_exploitability(), 1e-6);
    const SimplexPoint p{{e.profile[0][0], e.profile[0][1]},
                         {e.profile[1][0], e.profile[1][1]}};
    EXPECT_GT(LInfDistance(p, {{1, 0}, {1, 0}}), 0.05);
    if (LInfDistance(p, first) < 1e-4) found_first = true;
    if (LInfDistance(p, second) < 1e-4) found_second = true;
  }
  EXPECT_TRUE(found_first);
  EXPECT_TRUE(found_second);
}

TEST(SearchMixedNe2pTest, ResultsAreSortedAndSeparated) {
  const std::vector<UtilityExpr> u{testing::ClippedProductUtility(),
                                   testing::ClippedProductUtility()};
  const MixedSearchResult r =
      SearchMixedNe2p(CriteriaDisagreeGame(), u, kAllSer);
  for (std::size_t k = 1; k < r.equilibria.size(); ++k) {
    const auto& a = r.equilibria[k - 1].profile;
    const auto& b = r.equilibria[k].profile;
    std::vector<double> fa, fb;
    for (const auto& s : a)
      fa.insert(fa.end(), s.probs().begin(), s.probs().end());
    for (const auto& s : b)
      fb.insert(fb.end(), s.probs().begin(), s.probs().end());
    EXPECT_LT(fa, fb);
  }
}

TEST(SearchMixedNe2pTest, NoEquilibriumGameYieldsNothing) {
  const std::vector<UtilityExpr> u{testing::SquaredNorm(),
                                   testing::SquaredNorm()};
  MixedSearchConfig config;
  config.grid = 200;
  config.epsilon = 1e-4;
  const MixedSearchResult r =
      SearchMixedNe2p(testing::NoEquilibriumGame(), u, kAllSer, config);
  EXPECT_TRUE(r.equilibria.empty());
  EXPECT_EQ(r.grid_points, 201 * 201);
  EXPECT_GT(r.candidates_refined, 0);
}

TEST(SearchMixedNe2pTest, ConstantGameGivesSmallCoveringSet) {
  const Monfg constant = Monfg::FromVectors(
      {2, 2},
      {{{1, 1}, {1, 1}, {1, 1}, {1, 1}}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}});
  const std::vector<UtilityExpr> u{ParseUtility("(* p1 p2)"),
                                   ParseUtility("(+ p1 p2)")};
  MixedSearchConfig config;
  config.grid = 10;
  const MixedSearchResult r = SearchMixedNe2p(constant, u, kAllSer, config);
  ASSERT_FALSE(r.equilibria.empty());
  EXPECT_LE(r.equilibria.size(),
            static_cast<std::size_t>(config.max_candidates));
  for (const MixedEquilibrium& e : r.equilibria) {
    EXPECT_NEAR(e.report.max_exploitability(), 0, 1e-12);
  }
}

TEST(SearchMixedNe2pTest, EsrMatchingPenniesMix) {
  const Monfg pennies({2, 2}, 1, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
  const std::vector<UtilityExpr> u{ParseUtility("p1"), ParseUtility("p1")};
  const MixedSearchResult r =
      SearchMixedNe2p(pennies, u, {Criterion::kEsr, Criterion::kEsr});
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_NEAR(r.equilibria[0].profile[0][0], 0.5, 1e-9);
  EXPECT_NEAR(r.equilibria[0].profile[1][0], 0.5, 1e-9);
}

TEST(SearchMixedNe2pTest, RejectsUnsupportedGames) {
  const std::vector<UtilityExpr> u3{ParseUtility("p1"), ParseUtility("p1"),
                                    ParseUtility("p1")};
  const Monfg three({2, 2, 2}, 1,
                    {std::vector<double>(8, 0), std::vector<double>(8, 0),
                     std::vector<double>(8, 0)});
  EXPECT_THROW(
      SearchMixedNe2p(three, u3,
                      {Criterion::kSer, Criterion::kSer, Criterion::kSer}),
      UnsupportedInputError);
  const Monfg wide({5, 2}, 1,
                   {std::vector<double>(10, 0), std::vector<double>(10, 0)});
  const std::vector<UtilityExpr> u2{ParseUtility("p1"), ParseUtility("p1")};
  EXPECT_THROW(SearchMixedNe2p(wide, u2, kAllSer), UnsupportedInputError);
  MixedSearchConfig huge;
  huge.grid = 1000;
  const Monfg square({4, 4}, 1,
                     {std::vector<double>(16, 0), std::vector<double>(16, 0)});
  EXPECT_THROW(SearchMixedNe2p(square, u2, kAllSer, huge),
               UnsupportedInputError);
}

// With strictly convex utilities every action in the support of a certified
// mixed equilibrium earns the same expected payoff vector.
TEST(SearchMixedNe2pTest, SupportedActionsShareExpectedVectors) {
  std::mt19937_64 rng(61);
  MixedSearchConfig config;
  config.grid = 24;
  config.epsilon = 1e-7;
  config.max_candidates = 12;
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Monfg game = testing::RandomGame(rng, 2, 3, 2, -3, 3, 2);
    const std::vector<UtilityExpr> u{testing::RandomStrictlyConvexUtility(rng),
                                     testing::RandomStrictlyConvexUtility(rng)};
    const MixedSearchResult r = SearchMixedNe2p(game, u, kAllSer, config);
    for (const MixedEquilibrium& e : r.equilibria) {
      for (int i = 0; i < 2; ++i) {
        std::vector<int> support;
        for (int a = 0; a < game.num_actions(i); ++a) {
          if (e.profile[i][a] > 1e-3) support.push_back(a);
        }
        if (support.size() < 2) continue;
        ++checked;
        const auto vectors = DeviationPayoffVectors(game, e.profile, i);
        for (std::size_t k = 1; k < support.size(); ++k) {
          for (int o = 0; o < game.num_objectives(); ++o) {
            EXPECT_NEAR(vectors[support[k]][o], vectors[support[0]][o], 1e-4);
          }
        }
      }
    }
  }
  RecordProperty("mixed_supports_checked", checked);
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace monfg
