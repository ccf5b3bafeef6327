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

#ifndef MONFG_EQUILIBRIUM_H_
#define MONFG_EQUILIBRIUM_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monfg/criteria.h"
#include "monfg/game.h"
#include "monfg/shape.h"
#include "monfg/utility.h"

namespace monfg {

// The scalar game obtained by composing each player's utility with their
// payoff vectors: payoff(i, a) = u_i(p_i(a)).
struct TradeOffGame {
  Nfg nfg;
  Monfg source;
  std::vector<UtilityExpr> utilities;
};

TradeOffGame ReduceMonfg(const Monfg& game,
                         std::span<const UtilityExpr> utilities);

// Pure-strategy equilibria, sorted lexicographically without duplicates.
// `all` is false when only a sample was requested.
struct PsneSet {
  std::vector<ActionProfile> profiles;
  bool all = true;
};

// Every joint action from which no player gains more than `tol` by a
// unilateral pure deviation. Requires a single-objective game.
PsneSet ComputeAllPsne(const Nfg& nfg, double tol = kDefaultTolerance);

// The lexicographically first pure equilibrium, if any.
std::optional<ActionProfile> ComputeSamplePsne(const Nfg& nfg,
                                               double tol = kDefaultTolerance);

// Settings of the SER best-response search.
struct SearchConfig {
  int grid = 50;                 // simplex subdivisions per dimension
  int restarts = 8;              // best grid points refined locally
  int refinement_budget = 2000;  // objective evaluations per restart
  double min_step = 1e-10;
};

struct BestResponseResult {
  MixedStrategy strategy;
  double value = 0.0;
  // True for ESR (exact argmax); SER values are search lower bounds.
  bool exact = false;
  int grid = 0;
  int restarts = 0;
  int refinement_iterations = 0;
  int evaluations = 0;
};

// Best response of `player` to the other strategies in `profile` (the
// player's own entry is ignored). ESR returns the lowest-index pure argmax.
// SER scans the simplex grid, refines the best `restarts` points with a
// pattern search and returns the best point found.
BestResponseResult BestResponse(const Monfg& game,
                                std::span<const UtilityExpr> utilities,
                                int player, const StrategyProfile& profile,
                                Criterion criterion,
                                const SearchConfig& config = {});

struct VerificationReport {
  BlendedAssignment assignment;
  std::vector<double> values;                // at the profile
  std::vector<double> best_response_values;  // best deviation found
  std::vector<double> exploitability;        // difference of the two
  // Per player: true when the exploitability is only a lower bound (SER).
  std::vector<bool> lower_bound;
  double epsilon = 0.0;
  bool is_epsilon_ne = false;

  double max_exploitability() const;
};

// Checks whether `profile` is an epsilon-Nash equilibrium when player i
// optimises assignment[i]. A negative verdict is sound; a positive verdict
// under SER is only as good as the best-response search.
VerificationReport VerifyNe(const Monfg& game,
                            std::span<const UtilityExpr> utilities,
                            const StrategyProfile& profile,
                            const BlendedAssignment& assignment, double epsilon,
                            const SearchConfig& config = {});

enum class PsneMode {
  // Assume quasiconvex utilities; the trade-off PSNE then hold for every
  // criterion assignment. A found shape counterexample becomes a warning.
  kTrustedQuasiconvex,
  // Additionally keep only candidates that survive an all-SER verification.
  kVerifiedSer,
};

struct PsneWarning {
  int player = 0;
  std::string message;
  std::optional<ShapeCounterexample> counterexample;
};

struct RejectedCandidate {
  ActionProfile profile;
  VerificationReport report;
};

struct PsneOptions {
  PsneMode mode = PsneMode::kTrustedQuasiconvex;
  double epsilon = 1e-6;
  double tol = kDefaultTolerance;
  FalsifyOptions falsify;
  SearchConfig search;
};

struct PsneResult {
  PsneSet psne;
  PsneMode mode = PsneMode::kTrustedQuasiconvex;
  std::vector<PsneWarning> warnings;
  // Criteria under which every listed profile is an equilibrium, as names
  // ("ESR", "SER", "blended").
  std::vector<std::string> valid_for;
  std::vector<RejectedCandidate> rejected;
  BoxDomain box;
};

PsneResult PsneMonfg(const Monfg& game, std::span<const UtilityExpr> utilities,
                     const PsneOptions& options = {});

}  // namespace monfg

#endif  // MONFG_EQUILIBRIUM_H_
