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

#ifndef MONFG_MIXED_SEARCH_H_
#define MONFG_MIXED_SEARCH_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "monfg/equilibrium.h"

namespace monfg {

inline constexpr int kMaxMixedSearchActions = 4;

struct MixedSearchConfig {
  int grid = 50;
  double epsilon = 1e-6;
  // Certified profiles closer than this (L-infinity) are merged.
  double dedup_radius = 0.01;
  // Local minima of the grid exploitability handed to local refinement.
  int max_candidates = 32;
  // Grid points whose exploitability lower bound exceeds this are skipped.
  double scan_threshold = std::numeric_limits<double>::infinity();
  // Exploitability evaluations per refined candidate.
  int refinement_budget = 400;
  // Upper bound on |grid_1| * |grid_2|.
  std::int64_t max_grid_points = 4'000'000;
  // Best-response search used while refining (cheap) and for the final
  // certificate (full).
  SearchConfig refinement_search{
      .grid = 20, .restarts = 2, .refinement_budget = 200};
  SearchConfig certification_search;
};

struct MixedEquilibrium {
  StrategyProfile profile;
  VerificationReport report;
};

struct MixedSearchResult {
  // Certified epsilon-equilibria, sorted lexicographically by profile.
  std::vector<MixedEquilibrium> equilibria;
  std::int64_t grid_points = 0;
  int candidates_refined = 0;
  // Grid search never proves that no further equilibria exist.
  bool exhaustive = false;
};

// Searches a two-player game for (mixed) epsilon-Nash equilibria under the
// given criterion assignment: scans the product of simplex grids, refines
// local minima of the exploitability and certifies survivors with VerifyNe.
// Throws UnsupportedInputError unless the game has two players with at most
// kMaxMixedSearchActions actions each and the scan fits max_grid_points.
MixedSearchResult SearchMixedNe2p(const Monfg& game,
                                  std::span<const UtilityExpr> utilities,
                                  const BlendedAssignment& assignment,
                                  const MixedSearchConfig& config = {});

}  // namespace monfg

#endif  // MONFG_MIXED_SEARCH_H_
