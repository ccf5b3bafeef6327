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

#include "monfg/criteria.h"

#include <string>

#include "monfg/errors.h"

namespace monfg {

std::string_view CriterionName(Criterion criterion) {
  return criterion == Criterion::kEsr ? "ESR" : "SER";
}

std::optional<Criterion> ParseCriterion(std::string_view name) {
  if (name == "ESR" || name == "esr") return Criterion::kEsr;
  if (name == "SER" || name == "ser") return Criterion::kSer;
  return std::nullopt;
}

void CheckUtilities(const Monfg& game, std::span<const UtilityExpr> utilities) {
  if (static_cast<int>(utilities.size()) != game.num_players()) {
    throw InvalidInputError("expected " + std::to_string(game.num_players()) +
                            " utility functions, got " +
                            std::to_string(utilities.size()));
  }
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    if (utilities[i].MaxVariableIndex() > game.num_objectives()) {
      throw InvalidInputError(
          "utility of player " + std::to_string(i) + " refers to p" +
          std::to_string(utilities[i].MaxVariableIndex()) +
          " but the game has " + std::to_string(game.num_objectives()) +
          " objectives");
    }
  }
}

double EsrValue(const Monfg& game, std::span<const UtilityExpr> utilities,
                const StrategyProfile& profile, int player) {
  CheckUtilities(game, utilities);
  game.CheckPlayer(player);
  game.CheckProfile(profile);
  const int n = game.num_players();
  const UtilityExpr& u = utilities[player];
  double value = 0.0;
  std::vector<int> actions(n, 0);
  for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) weight *= profile[j][actions[j]];
    if (weight != 0.0) value += weight * u.Evaluate(game.Payoff(player, joint));
    for (int j = n - 1; j >= 0; --j) {
      if (++actions[j] < game.num_actions(j)) break;
      actions[j] = 0;
    }
  }
  return value;
}

double SerValue(const Monfg& game, std::span<const UtilityExpr> utilities,
                const StrategyProfile& profile, int player) {
  CheckUtilities(game, utilities);
  return utilities[player].Evaluate(
      ExpectedPayoffVector(game, profile, player));
}

double Value(const Monfg& game, std::span<const UtilityExpr> utilities,
             const StrategyProfile& profile, int player, Criterion criterion) {
  return criterion == Criterion::kEsr
             ? EsrValue(game, utilities, profile, player)
             : SerValue(game, utilities, profile, player);
}

std::vector<double> EsrDeviationValues(const Monfg& game,
                                       std::span<const UtilityExpr> utilities,
                                       const StrategyProfile& profile,
                                       int player) {
  CheckUtilities(game, utilities);
  game.CheckPlayer(player);
  game.CheckProfile(profile);
  const int n = game.num_players();
  const UtilityExpr& u = utilities[player];
  std::vector<double> values(game.num_actions(player), 0.0);
  std::vector<int> actions(n, 0);
  for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != player) weight *= profile[j][actions[j]];
    }
    if (weight != 0.0) {
      values[actions[player]] +=
          weight * u.Evaluate(game.Payoff(player, joint));
    }
    for (int j = n - 1; j >= 0; --j) {
      if (++actions[j] < game.num_actions(j)) break;
      actions[j] = 0;
    }
  }
  return values;
}

}  // namespace monfg
