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
#include <numeric>
#include <string>

#include "monfg/errors.h"

namespace monfg {
namespace {

// Dense tensors beyond this size are not desk-scale games.
constexpr std::int64_t kMaxJointActions = std::int64_t{1} << 26;

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw InvalidInputError("mixed strategy must have at least one action");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidInputError(
          "mixed strategy has a negative or non-finite "
          "probability: " +
          std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    throw InvalidInputError("mixed strategy probabilities sum to " +
                            std::to_string(sum) + ", not 1");
  }
  for (double& p : probs_) p /= sum;
}

MixedStrategy MixedStrategy::Pure(int num_actions, int action) {
  if (num_actions < 1 || action < 0 || action >= num_actions) {
    throw InvalidInputError("pure strategy action out of range");
  }
  std::vector<double> probs(num_actions, 0.0);
  probs[action] = 1.0;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  if (num_actions < 1) {
    throw InvalidInputError("uniform strategy needs at least one action");
  }
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

int MixedStrategy::PureAction() const {
  for (int a = 0; a < num_actions(); ++a) {
    if (probs_[a] == 1.0) return a;
  }
  return -1;
}

Monfg::Monfg(std::vector<int> action_counts, int num_objectives,
             std::vector<std::vector<double>> payoffs)
    : action_counts_(std::move(action_counts)),
      num_objectives_(num_objectives),
      payoffs_(std::move(payoffs)) {
  if (action_counts_.empty()) {
    throw InvalidInputError("a game needs at least one player");
  }
  if (num_objectives_ < 1) {
    throw InvalidInputError("a game needs at least one objective");
  }
  const int n = num_players();
  strides_.assign(n, 1);
  num_joint_actions_ = 1;
  for (int i = n - 1; i >= 0; --i) {
    if (action_counts_[i] < 1) {
      throw InvalidInputError("player " + std::to_string(i) +
                              " must have at least one action");
    }
    strides_[i] = num_joint_actions_;
    num_joint_actions_ *= action_counts_[i];
    if (num_joint_actions_ > kMaxJointActions) {
      throw UnsupportedInputError("joint action space too large");
    }
  }
  if (static_cast<int>(payoffs_.size()) != n) {
    throw InvalidInputError("expected payoff tensors for " + std::to_string(n) +
                            " players, got " + std::to_string(payoffs_.size()));
  }
  const std::int64_t expected = num_joint_actions_ * num_objectives_;
  for (int i = 0; i < n; ++i) {
    if (static_cast<std::int64_t>(payoffs_[i].size()) != expected) {
      throw InvalidInputError("payoff tensor of player " + std::to_string(i) +
                              " has " + std::to_string(payoffs_[i].size()) +
                              " values, expected " + std::to_string(expected));
    }
    for (double v : payoffs_[i]) {
      if (!std::isfinite(v)) {
        throw InvalidInputError("payoff tensor of player " + std::to_string(i) +
                                " has a non-finite value");
      }
    }
  }
}

Monfg Monfg::FromVectors(
    std::vector<int> action_counts,
    const std::vector<std::vector<std::vector<double>>>& payoff_vectors) {
  if (payoff_vectors.empty() || payoff_vectors.front().empty()) {
    throw InvalidInputError("payoff vectors must be non-empty");
  }
  const std::size_t d = payoff_vectors.front().front().size();
  std::vector<std::vector<double>> flat;
  flat.reserve(payoff_vectors.size());
  for (const auto& player_vectors : payoff_vectors) {
    std::vector<double>& out = flat.emplace_back();
    for (const auto& v : player_vectors) {
      if (v.size() != d) {
        throw InvalidInputError("payoff vectors must all have length " +
                                std::to_string(d));
      }
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return Monfg(std::move(action_counts), static_cast<int>(d), std::move(flat));
}

std::int64_t Monfg::JointIndex(const ActionProfile& profile) const {
  CheckProfile(profile);
  std::int64_t joint = 0;
  for (int i = 0; i < num_players(); ++i) joint += profile[i] * strides_[i];
  return joint;
}

ActionProfile Monfg::ProfileAt(std::int64_t joint) const {
  if (joint < 0 || joint >= num_joint_actions_) {
    throw InvalidInputError("joint action index out of range");
  }
  std::vector<int> actions(num_players());
  for (int i = 0; i < num_players(); ++i) {
    actions[i] = static_cast<int>((joint / strides_[i]) % action_counts_[i]);
  }
  return ActionProfile(std::move(actions));
}

void Monfg::CheckPlayer(int player) const {
  if (player < 0 || player >= num_players()) {
    throw InvalidInputError("player index " + std::to_string(player) +
                            " out of range [0, " +
                            std::to_string(num_players()) + ")");
  }
}

void Monfg::CheckProfile(const ActionProfile& profile) const {
  if (profile.size() != num_players()) {
    throw InvalidInputError("action profile has " +
                            std::to_string(profile.size()) + " entries for a " +
                            std::to_string(num_players()) + "-player game");
  }
  for (int i = 0; i < num_players(); ++i) {
    if (profile[i] < 0 || profile[i] >= action_counts_[i]) {
      throw InvalidInputError("action " + std::to_string(profile[i]) +
                              " of player " + std::to_string(i) +
                              " out of range");
    }
  }
}

void Monfg::CheckProfile(const StrategyProfile& profile) const {
  if (static_cast<int>(profile.size()) != num_players()) {
    throw InvalidInputError(
        "strategy profile has " + std::to_string(profile.size()) +
        " strategies for a " + std::to_string(num_players()) + "-player game");
  }
  for (int i = 0; i < num_players(); ++i) {
    if (profile[i].num_actions() != action_counts_[i]) {
      throw InvalidInputError(
          "strategy of player " + std::to_string(i) + " has " +
          std::to_string(profile[i].num_actions()) + " entries, expected " +
          std::to_string(action_counts_[i]));
    }
  }
}

std::vector<double> PurePayoffVector(const Monfg& game,
                                     const ActionProfile& profile, int player) {
  game.CheckPlayer(player);
  const auto payoff = game.Payoff(player, game.JointIndex(profile));
  return {payoff.begin(), payoff.end()};
}

std::vector<double> ExpectedPayoffVector(const Monfg& game,
                                         const StrategyProfile& profile,
                                         int player) {
  game.CheckPlayer(player);
  game.CheckProfile(profile);
  const int n = game.num_players();
  const int d = game.num_objectives();
  std::vector<double> result(d, 0.0);
  std::vector<int> actions(n, 0);
  for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) weight *= profile[j][actions[j]];
    if (weight != 0.0) {
      const auto payoff = game.Payoff(player, joint);
      for (int o = 0; o < d; ++o) result[o] += weight * payoff[o];
    }
    // Odometer increment, last player fastest.
    for (int j = n - 1; j >= 0; --j) {
      if (++actions[j] < game.num_actions(j)) break;
      actions[j] = 0;
    }
  }
  return result;
}

std::vector<std::vector<double>> DeviationPayoffVectors(
    const Monfg& game, const StrategyProfile& profile, int player) {
  game.CheckPlayer(player);
  game.CheckProfile(profile);
  const int n = game.num_players();
  const int d = game.num_objectives();
  std::vector<std::vector<double>> result(game.num_actions(player),
                                          std::vector<double>(d, 0.0));
  std::vector<int> actions(n, 0);
  for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != player) weight *= profile[j][actions[j]];
    }
    if (weight != 0.0) {
      const auto payoff = game.Payoff(player, joint);
      auto& target = result[actions[player]];
      for (int o = 0; o < d; ++o) target[o] += weight * payoff[o];
    }
    for (int j = n - 1; j >= 0; --j) {
      if (++actions[j] < game.num_actions(j)) break;
      actions[j] = 0;
    }
  }
  return result;
}

std::vector<ActionProfile> JointActionProfiles(const Monfg& game) {
  std::vector<ActionProfile> profiles;
  profiles.reserve(game.num_joint_actions());
  for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
    profiles.push_back(game.ProfileAt(joint));
  }
  return profiles;
}

StrategyProfile PureProfile(const ActionProfile& profile,
                            std::span<const int> action_counts) {
  if (static_cast<std::size_t>(profile.size()) != action_counts.size()) {
    throw InvalidInputError(
        "action profile and action counts differ in "
        "length");
  }
  StrategyProfile result;
  result.reserve(action_counts.size());
  for (int i = 0; i < profile.size(); ++i) {
    result.push_back(MixedStrategy::Pure(action_counts[i], profile[i]));
  }
  return result;
}

}  // namespace monfg
