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

#ifndef MONFG_CRITERIA_H_
#define MONFG_CRITERIA_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "monfg/game.h"
#include "monfg/utility.h"

namespace monfg {

// Default absolute tolerance for scalar comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

// How a player turns a mixed strategy profile into a scalar.
//   ESR: expectation of the utility of each outcome's payoff vector.
//   SER: utility of the expected payoff vector.
enum class Criterion { kEsr, kSer };

// One criterion per player.
using BlendedAssignment = std::vector<Criterion>;

std::string_view CriterionName(Criterion criterion);
std::optional<Criterion> ParseCriterion(std::string_view name);

// Throws InvalidInputError unless there is one utility per player and none
// refers to an objective the game does not have.
void CheckUtilities(const Monfg& game, std::span<const UtilityExpr> utilities);

double EsrValue(const Monfg& game, std::span<const UtilityExpr> utilities,
                const StrategyProfile& profile, int player);

double SerValue(const Monfg& game, std::span<const UtilityExpr> utilities,
                const StrategyProfile& profile, int player);

double Value(const Monfg& game, std::span<const UtilityExpr> utilities,
             const StrategyProfile& profile, int player, Criterion criterion);

// Expected utility of each of `player`'s pure actions against the other
// players' strategies (entry `player` of the profile is ignored).
std::vector<double> EsrDeviationValues(const Monfg& game,
                                       std::span<const UtilityExpr> utilities,
                                       const StrategyProfile& profile,
                                       int player);

}  // namespace monfg

#endif  // MONFG_CRITERIA_H_
