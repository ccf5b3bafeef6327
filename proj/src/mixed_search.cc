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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "monfg/errors.h"
#include "monfg/simplex.h"

namespace monfg {
namespace {

// Values of one player at every pair of grid points, indexed
// [own grid index][opponent grid index].
using ValueTable = std::vector<std::vector<double>>;

// Fills own_values[own][opp] for `player` against each opponent grid point.
ValueTable ScanPlayer(const Monfg& game, std::span<const UtilityExpr> utilities,
                      int player, Criterion criterion,
                      const std::vector<std::vector<double>>& own_grid,
                      const std::vector<std::vector<double>>& opponent_grid) {
  const int opponent = 1 - player;
  const int m = game.num_actions(player);
  const int d = game.num_objectives();
  const UtilityExpr& u = utilities[player];
  ValueTable table(own_grid.size(), std::vector<double>(opponent_grid.size()));
  StrategyProfile profile(2, MixedStrategy::Uniform(1));
  profile[player] = MixedStrategy::Uniform(m);
  std::vector<double> mixed(d);
  for (std::size_t k = 0; k < opponent_grid.size(); ++k) {
    profile[opponent] = MixedStrategy(opponent_grid[k]);
    if (criterion == Criterion::kEsr) {
      const auto per_action =
          EsrDeviationValues(game, utilities, profile, player);
      for (std::size_t j = 0; j < own_grid.size(); ++j) {
        double value = 0.0;
        for (int a = 0; a < m; ++a) value += own_grid[j][a] * per_action[a];
        table[j][k] = value;
      }
    } else {
      const auto deviation = DeviationPayoffVectors(game, profile, player);
      for (std::size_t j = 0; j < own_grid.size(); ++j) {
        std::fill(mixed.begin(), mixed.end(), 0.0);
        for (int a = 0; a < m; ++a) {
          for (int o = 0; o < d; ++o) {
            mixed[o] += own_grid[j][a] * deviation[a][o];
          }
        }
        table[j][k] = u.Evaluate(mixed);
      }
    }
  }
  return table;
}

// Indices of grid points one mass transfer of 1/g away.
std::vector<std::vector<int>> GridNeighbours(
    const std::vector<std::vector<double>>& grid, int subdivisions) {
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> counts(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (double p : grid[k]) {
      counts[k].push_back(static_cast<int>(std::lround(p * subdivisions)));
    }
    index.emplace(counts[k], static_cast<int>(k));
  }
  std::vector<std::vector<int>> neighbours(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const int dim = static_cast<int>(counts[k].size());
    for (int from = 0; from < dim; ++from) {
      if (counts[k][from] == 0) continue;
      for (int to = 0; to < dim; ++to) {
        if (to == from) continue;
        std::vector<int> moved = counts[k];
        --moved[from];
        ++moved[to];
        neighbours[k].push_back(index.at(moved));
      }
    }
  }
  return neighbours;
}

StrategyProfile ToProfile(const SimplexPoint& point) {
  StrategyProfile profile;
  for (const auto& block : point) profile.emplace_back(block);
  return profile;
}

SimplexPoint ToPoint(const StrategyProfile& profile) {
  SimplexPoint point;
  for (const auto& strategy : profile) {
    point.emplace_back(strategy.probs().begin(), strategy.probs().end());
  }
  return point;
}

}  // namespace

MixedSearchResult SearchMixedNe2p(const Monfg& game,
                                  std::span<const UtilityExpr> utilities,
                                  const BlendedAssignment& assignment,
                                  const MixedSearchConfig& config) {
  if (game.num_players() != 2) {
    throw UnsupportedInputError(
        "mixed equilibrium search supports exactly "
        "two players, got " +
        std::to_string(game.num_players()));
  }
  for (int i = 0; i < 2; ++i) {
    if (game.num_actions(i) > kMaxMixedSearchActions) {
      throw UnsupportedInputError("mixed equilibrium search supports at most " +
                                  std::to_string(kMaxMixedSearchActions) +
                                  " actions per player");
    }
  }
  CheckUtilities(game, utilities);
  if (static_cast<int>(assignment.size()) != 2) {
    throw InvalidInputError("criterion assignment needs one entry per player");
  }
  if (config.grid < 1) throw InvalidInputError("search grid must be >= 1");
  if (!(config.epsilon >= 0.0)) throw InvalidInputError("epsilon must be >= 0");

  const std::int64_t size0 = SimplexGridSize(game.num_actions(0), config.grid);
  const std::int64_t size1 = SimplexGridSize(game.num_actions(1), config.grid);
  if (size0 * size1 > config.max_grid_points) {
    throw UnsupportedInputError("grid of " + std::to_string(size0 * size1) +
                                " profile points exceeds the limit of " +
                                std::to_string(config.max_grid_points) +
                                "; use a coarser grid");
  }

  MixedSearchResult result;
  result.grid_points = size0 * size1;
  const auto grid0 = SimplexGrid(game.num_actions(0), config.grid);
  const auto grid1 = SimplexGrid(game.num_actions(1), config.grid);
  const ValueTable values0 =
      ScanPlayer(game, utilities, 0, assignment[0], grid0, grid1);
  const ValueTable values1 =
      ScanPlayer(game, utilities, 1, assignment[1], grid1, grid0);

  // Grid maxima are lower bounds on the best-response values, so the
  // exploitability table below is a lower bound as well.
  std::vector<double> best0(grid1.size(), -INFINITY);
  std::vector<double> best1(grid0.size(), -INFINITY);
  for (std::size_t j = 0; j < grid0.size(); ++j) {
    for (std::size_t k = 0; k < grid1.size(); ++k) {
      best0[k] = std::max(best0[k], values0[j][k]);
      best1[j] = std::max(best1[j], values1[k][j]);
    }
  }
  ValueTable exploit(grid0.size(), std::vector<double>(grid1.size()));
  for (std::size_t j = 0; j < grid0.size(); ++j) {
    for (std::size_t k = 0; k < grid1.size(); ++k) {
      exploit[j][k] =
          std::max(best0[k] - values0[j][k], best1[j] - values1[k][j]);
    }
  }

  const auto neighbours0 = GridNeighbours(grid0, config.grid);
  const auto neighbours1 = GridNeighbours(grid1, config.grid);
  struct Candidate {
    double exploitability;
    std::size_t j;
    std::size_t k;
  };
  std::vector<Candidate> minima;
  for (std::size_t j = 0; j < grid0.size(); ++j) {
    for (std::size_t k = 0; k < grid1.size(); ++k) {
      const double e = exploit[j][k];
      if (e > config.scan_threshold) continue;
      bool local_min = true;
      for (int nj : neighbours0[j]) {
        if (exploit[nj][k] < e) {
          local_min = false;
          break;
        }
      }
      for (int nk : neighbours1[k]) {
        if (!local_min) break;
        if (exploit[j][nk] < e) local_min = false;
      }
      if (local_min) minima.push_back({e, j, k});
    }
  }
  std::sort(minima.begin(), minima.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.exploitability != b.exploitability) {
                return a.exploitability < b.exploitability;
              }
              return a.j != b.j ? a.j < b.j : a.k < b.k;
            });

  std::vector<SimplexPoint> starts;
  for (const Candidate& c : minima) {
    if (static_cast<int>(starts.size()) >= config.max_candidates) break;
    SimplexPoint point{grid0[c.j], grid1[c.k]};
    const bool covered =
        std::any_of(starts.begin(), starts.end(), [&](const SimplexPoint& s) {
          return LInfDistance(s, point) <= config.dedup_radius;
        });
    if (!covered) starts.push_back(std::move(point));
  }

  const SimplexObjective negative_exploitability =
      [&](const SimplexPoint& point) {
        const StrategyProfile profile = ToProfile(point);
        const VerificationReport report =
            VerifyNe(game, utilities, profile, assignment, config.epsilon,
                     config.refinement_search);
        return -report.max_exploitability();
      };
  const PatternSearchOptions refine_options{
      .initial_step = 1.0 / config.grid,
      .min_step = 1e-10,
      .budget = config.refinement_budget,
  };

  std::vector<MixedEquilibrium> certified;
  for (SimplexPoint& start : starts) {
    ++result.candidates_refined;
    PatternSearchResult refined = MaximizeOnSimplices(
        negative_exploitability, std::move(start), refine_options);
    StrategyProfile profile = ToProfile(refined.point);
    VerificationReport report =
        VerifyNe(game, utilities, profile, assignment, config.epsilon,
                 config.certification_search);
    if (report.is_epsilon_ne) {
      certified.push_back({std::move(profile), std::move(report)});
    }
  }

  std::stable_sort(certified.begin(), certified.end(),
                   [](const MixedEquilibrium& a, const MixedEquilibrium& b) {
                     return a.report.max_exploitability() <
                            b.report.max_exploitability();
                   });
  for (MixedEquilibrium& candidate : certified) {
    const SimplexPoint point = ToPoint(candidate.profile);
    const bool covered =
        std::any_of(result.equilibria.begin(), result.equilibria.end(),
                    [&](const MixedEquilibrium& kept) {
                      return LInfDistance(ToPoint(kept.profile), point) <=
                             config.dedup_radius;
                    });
    if (!covered) result.equilibria.push_back(std::move(candidate));
  }
  std::sort(result.equilibria.begin(), result.equilibria.end(),
            [](const MixedEquilibrium& a, const MixedEquilibrium& b) {
              return ToPoint(a.profile) < ToPoint(b.profile);
            });
  return result;
}

}  // namespace monfg
