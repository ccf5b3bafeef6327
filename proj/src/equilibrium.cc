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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monfg/errors.h"
#include "monfg/simplex.h"

namespace monfg {
namespace {

BestResponseResult EsrBestResponse(const Monfg& game,
                                   std::span<const UtilityExpr> utilities,
                                   int player, const StrategyProfile& profile) {
  const std::vector<double> values =
      EsrDeviationValues(game, utilities, profile, player);
  int best = 0;
  for (int a = 1; a < static_cast<int>(values.size()); ++a) {
    if (values[a] > values[best]) best = a;
  }
  return BestResponseResult{
      .strategy = MixedStrategy::Pure(game.num_actions(player), best),
      .value = values[best],
      .exact = true,
  };
}

BestResponseResult SerBestResponse(
    const Monfg& game, std::span<const UtilityExpr> utilities, int player,
    const StrategyProfile& profile, const SearchConfig& config,
    std::span<const std::vector<double>> extra_starts) {
  if (config.grid < 2) throw InvalidInputError("search grid must be >= 2");
  if (config.restarts < 1) throw InvalidInputError("restarts must be >= 1");
  const int m = game.num_actions(player);
  const int d = game.num_objectives();
  const auto deviation = DeviationPayoffVectors(game, profile, player);
  const UtilityExpr& u = utilities[player];

  std::vector<double> mixed(d);
  const auto evaluate = [&](std::span<const double> x) {
    std::fill(mixed.begin(), mixed.end(), 0.0);
    for (int a = 0; a < m; ++a) {
      if (x[a] == 0.0) continue;
      for (int o = 0; o < d; ++o) mixed[o] += x[a] * deviation[a][o];
    }
    return u.Evaluate(mixed);
  };

  BestResponseResult result{
      .strategy = MixedStrategy::Pure(m, 0),
      .exact = false,
      .grid = config.grid,
  };
  if (m == 1) {
    result.value = evaluate(result.strategy.probs());
    result.exact = true;
    return result;
  }

  const auto grid = SimplexGrid(m, config.grid);
  std::vector<double> grid_values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid_values[k] = evaluate(grid[k]);
  }
  result.evaluations = static_cast<int>(grid.size());

  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t num_starts =
      std::min<std::size_t>(config.restarts, order.size());
  std::partial_sort(order.begin(), order.begin() + num_starts, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (grid_values[a] != grid_values[b]) {
                        return grid_values[a] > grid_values[b];
                      }
                      return a < b;
                    });
  std::vector<std::vector<double>> starts;
  for (std::size_t k = 0; k < num_starts; ++k) starts.push_back(grid[order[k]]);
  for (const auto& extra : extra_starts) starts.push_back(extra);

  const PatternSearchOptions search_options{
      .initial_step = 1.0 / config.grid,
      .min_step = config.min_step,
      .budget = config.refinement_budget,
  };
  const SimplexObjective objective = [&](const SimplexPoint& point) {
    return evaluate(point[0]);
  };
  std::vector<double> best_point = starts.front();
  double best_value = -INFINITY;
  for (const auto& start : starts) {
    PatternSearchResult refined =
        MaximizeOnSimplices(objective, {start}, search_options);
    result.evaluations += refined.evaluations;
    result.refinement_iterations += refined.iterations;
    ++result.restarts;
    if (refined.value > best_value) {
      best_value = refined.value;
      best_point = std::move(refined.point[0]);
    }
  }
  result.strategy = MixedStrategy(best_point);
  result.value = evaluate(result.strategy.probs());
  return result;
}

BestResponseResult BestResponseWithStarts(
    const Monfg& game, std::span<const UtilityExpr> utilities, int player,
    const StrategyProfile& profile, Criterion criterion,
    const SearchConfig& config,
    std::span<const std::vector<double>> extra_starts) {
  CheckUtilities(game, utilities);
  game.CheckPlayer(player);
  game.CheckProfile(profile);
  if (criterion == Criterion::kEsr) {
    return EsrBestResponse(game, utilities, player, profile);
  }
  return SerBestResponse(game, utilities, player, profile, config,
                         extra_starts);
}

}  // namespace

TradeOffGame ReduceMonfg(const Monfg& game,
                         std::span<const UtilityExpr> utilities) {
  CheckUtilities(game, utilities);
  std::vector<std::vector<double>> payoffs(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    payoffs[i].resize(game.num_joint_actions());
    for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
      payoffs[i][joint] = utilities[i].Evaluate(game.Payoff(i, joint));
    }
  }
  return TradeOffGame{
      .nfg = Nfg(game.action_counts(), 1, std::move(payoffs)),
      .source = game,
      .utilities = {utilities.begin(), utilities.end()},
  };
}

PsneSet ComputeAllPsne(const Nfg& nfg, double tol) {
  if (!nfg.is_scalar()) {
    throw InvalidInputError(
        "pure equilibria are enumerated on a "
        "single-objective game; reduce the game first");
  }
  PsneSet result;
  for (std::int64_t joint = 0; joint < nfg.num_joint_actions(); ++joint) {
    const ActionProfile profile = nfg.ProfileAt(joint);
    bool stable = true;
    for (int i = 0; i < nfg.num_players() && stable; ++i) {
      const double current = nfg.ScalarPayoff(i, joint);
      const std::int64_t base = joint - profile[i] * nfg.Stride(i);
      for (int alt = 0; alt < nfg.num_actions(i); ++alt) {
        if (alt == profile[i]) continue;
        if (nfg.ScalarPayoff(i, base + alt * nfg.Stride(i)) > current + tol) {
          stable = false;
          break;
        }
      }
    }
    if (stable) result.profiles.push_back(profile);
  }
  return result;
}

std::optional<ActionProfile> ComputeSamplePsne(const Nfg& nfg, double tol) {
  // Profiles come out in lexicographic order, so the head is the sample.
  PsneSet all = ComputeAllPsne(nfg, tol);
  if (all.profiles.empty()) return std::nullopt;
  return all.profiles.front();
}

BestResponseResult BestResponse(const Monfg& game,
                                std::span<const UtilityExpr> utilities,
                                int player, const StrategyProfile& profile,
                                Criterion criterion,
                                const SearchConfig& config) {
  return BestResponseWithStarts(game, utilities, player, profile, criterion,
                                config, {});
}

double VerificationReport::max_exploitability() const {
  double worst = -INFINITY;
  for (double e : exploitability) worst = std::max(worst, e);
  return worst;
}

VerificationReport VerifyNe(const Monfg& game,
                            std::span<const UtilityExpr> utilities,
                            const StrategyProfile& profile,
                            const BlendedAssignment& assignment, double epsilon,
                            const SearchConfig& config) {
  CheckUtilities(game, utilities);
  game.CheckProfile(profile);
  if (static_cast<int>(assignment.size()) != game.num_players()) {
    throw InvalidInputError("criterion assignment needs one entry per player");
  }
  if (!(epsilon >= 0.0)) throw InvalidInputError("epsilon must be >= 0");
  VerificationReport report;
  report.assignment = assignment;
  report.epsilon = epsilon;
  report.is_epsilon_ne = true;
  for (int i = 0; i < game.num_players(); ++i) {
    const double current = Value(game, utilities, profile, i, assignment[i]);
    // The current strategy seeds the search so the deviation value never
    // falls below the incumbent.
    const std::vector<std::vector<double>> incumbent{
        {profile[i].probs().begin(), profile[i].probs().end()}};
    const BestResponseResult best = BestResponseWithStarts(
        game, utilities, i, profile, assignment[i], config, incumbent);
    report.values.push_back(current);
    report.best_response_values.push_back(best.value);
    report.exploitability.push_back(best.value - current);
    report.lower_bound.push_back(!best.exact);
    if (best.value - current > epsilon) report.is_epsilon_ne = false;
  }
  return report;
}

PsneResult PsneMonfg(const Monfg& game, std::span<const UtilityExpr> utilities,
                     const PsneOptions& options) {
  CheckUtilities(game, utilities);
  PsneResult result;
  result.mode = options.mode;
  result.box = DefaultBox(game);
  for (int i = 0; i < game.num_players(); ++i) {
    auto counterexample = FalsifyShape(utilities[i], Shape::kQuasiconvex,
                                       result.box, options.falsify);
    if (counterexample) {
      result.warnings.push_back(PsneWarning{
          .player = i,
          .message = "utility of player " + std::to_string(i) +
                     " is not quasiconvex on the default box; pure "
                     "equilibria of the trade-off game hold under ESR but "
                     "need not hold under SER",
          .counterexample = std::move(counterexample),
      });
    }
  }

  const TradeOffGame trade_off = ReduceMonfg(game, utilities);
  PsneSet candidates = ComputeAllPsne(trade_off.nfg, options.tol);
  if (options.mode == PsneMode::kTrustedQuasiconvex) {
    result.psne = std::move(candidates);
    if (result.warnings.empty()) {
      result.valid_for = {"ESR", "SER", "blended"};
    } else {
      result.valid_for = {"ESR"};
    }
    return result;
  }

  const BlendedAssignment all_ser(game.num_players(), Criterion::kSer);
  for (const ActionProfile& profile : candidates.profiles) {
    VerificationReport report =
        VerifyNe(game, utilities, PureProfile(profile, game.action_counts()),
                 all_ser, options.epsilon, options.search);
    if (report.is_epsilon_ne) {
      result.psne.profiles.push_back(profile);
    } else {
      result.rejected.push_back({profile, std::move(report)});
    }
  }
  result.valid_for = {"ESR", "SER", "blended"};
  return result;
}

}  // namespace monfg
