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

#ifndef MONFG_GAME_H_
#define MONFG_GAME_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace monfg {

// Tolerance used when validating that a probability vector sums to one.
inline constexpr double kSimplexSumTolerance = 1e-12;

// One action index per player.
class ActionProfile {
 public:
  ActionProfile() = default;
  explicit ActionProfile(std::vector<int> actions)
      : actions_(std::move(actions)) {}
  ActionProfile(std::initializer_list<int> actions) : actions_(actions) {}

  int operator[](int player) const { return actions_[player]; }
  int size() const { return static_cast<int>(actions_.size()); }
  const std::vector<int>& actions() const { return actions_; }

  // Lexicographic order over the per-player indices.
  auto operator<=>(const ActionProfile&) const = default;

 private:
  std::vector<int> actions_;
};

// A probability distribution over one player's actions. Construction checks
// non-negativity and that the entries sum to one within kSimplexSumTolerance,
// then renormalizes.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy Pure(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  int num_actions() const { return static_cast<int>(probs_.size()); }
  double operator[](int action) const { return probs_[action]; }
  std::span<const double> probs() const { return probs_; }

  // Index of the single action played with probability one, or -1.
  int PureAction() const;

  bool operator==(const MixedStrategy&) const = default;

 private:
  std::vector<double> probs_;
};

using StrategyProfile = std::vector<MixedStrategy>;

// An n-player game whose payoffs are d-dimensional vectors. Payoffs are
// stored densely per player in row-major joint-action order (the last
// player's action varies fastest). A game with one objective is an ordinary
// normal-form game.
class Monfg {
 public:
  // payoffs[i] holds player i's tensor flattened to
  // num_joint_actions * num_objectives values.
  Monfg(std::vector<int> action_counts, int num_objectives,
        std::vector<std::vector<double>> payoffs);

  // Convenience constructor from per-player lists of payoff vectors.
  static Monfg FromVectors(
      std::vector<int> action_counts,
      const std::vector<std::vector<std::vector<double>>>& payoff_vectors);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(int player) const { return action_counts_[player]; }
  const std::vector<int>& action_counts() const { return action_counts_; }
  int num_objectives() const { return num_objectives_; }
  std::int64_t num_joint_actions() const { return num_joint_actions_; }
  bool is_scalar() const { return num_objectives_ == 1; }

  // Payoff vector of `player` at the joint action with flat index `joint`.
  std::span<const double> Payoff(int player, std::int64_t joint) const {
    return std::span<const double>(payoffs_[player])
        .subspan(joint * num_objectives_, num_objectives_);
  }
  // Scalar payoff; only valid when is_scalar().
  double ScalarPayoff(int player, std::int64_t joint) const {
    return payoffs_[player][joint];
  }
  const std::vector<double>& flat_payoffs(int player) const {
    return payoffs_[player];
  }

  std::int64_t JointIndex(const ActionProfile& profile) const;
  ActionProfile ProfileAt(std::int64_t joint) const;

  // Row-major stride of `player`'s action in the flat joint index.
  std::int64_t Stride(int player) const { return strides_[player]; }

  void CheckPlayer(int player) const;
  void CheckProfile(const ActionProfile& profile) const;
  void CheckProfile(const StrategyProfile& profile) const;

  bool operator==(const Monfg&) const = default;

 private:
  std::vector<int> action_counts_;
  int num_objectives_;
  std::vector<std::vector<double>> payoffs_;
  std::vector<std::int64_t> strides_;
  std::int64_t num_joint_actions_;
};

// Normal-form games share the representation with num_objectives == 1.
using Nfg = Monfg;

// p_i(a), copied out of the tensor.
std::vector<double> PurePayoffVector(const Monfg& game,
                                     const ActionProfile& profile, int player);

// Expectation of p_i over the joint distribution induced by `profile`.
std::vector<double> ExpectedPayoffVector(const Monfg& game,
                                         const StrategyProfile& profile,
                                         int player);

// Expected payoff vector of each of `player`'s pure actions against the
// other players' strategies in `profile`; entry `player` of the profile is
// ignored. Returns num_actions(player) vectors of length num_objectives().
std::vector<std::vector<double>> DeviationPayoffVectors(
    const Monfg& game, const StrategyProfile& profile, int player);

// All joint actions in row-major order.
std::vector<ActionProfile> JointActionProfiles(const Monfg& game);

// The degenerate strategy profile that plays `profile` with certainty.
StrategyProfile PureProfile(const ActionProfile& profile,
                            std::span<const int> action_counts);

}  // namespace monfg

#endif  // MONFG_GAME_H_
