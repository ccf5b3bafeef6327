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

#ifndef MONFG_COMMANDS_H_
#define MONFG_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "monfg/equilibrium.h"
#include "monfg/mixed_search.h"

namespace monfg {

// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitUnsupported = 4;

// Maps an exception raised by a command onto an exit code.
int ExitCodeFor(const std::exception& error);

// kDefaultTolerance unless MONFG_TOLERANCE holds a positive number.
double DefaultToleranceFromEnv();

// "0.55,0.45;1,0": players separated by ';', probabilities by ','. Entries
// may be decimals or fractions such as 11/20. Throws UsageError naming the
// offending token.
std::vector<std::vector<double>> ParseProbabilityList(std::string_view text);
StrategyProfile ParseProfile(std::string_view text, const Monfg& game);

// "SER,ESR"; throws UsageError on unknown names.
BlendedAssignment ParseAssignment(std::string_view text);

// "lo:hi,lo:hi"; throws UsageError.
BoxDomain ParseBox(std::string_view text);

// Hex SHA-256 of `bytes`.
std::string Sha256Hex(std::string_view bytes);

// Every command returns a report document:
//   {"command", "inputs-digest", "results", "warnings", "config"}

nlohmann::json CmdReduce(const std::string& game_path,
                         const std::string& output_path);

struct PsneCommandOptions {
  std::string game_path;
  PsneMode mode = PsneMode::kTrustedQuasiconvex;
  double epsilon = 1e-6;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::int64_t trials = 100000;
  SearchConfig search;
};
nlohmann::json CmdPsne(const PsneCommandOptions& options);

struct VerifyCommandOptions {
  std::string game_path;
  std::string profile;
  // Falls back to the file's "criteria", then to all-SER.
  std::optional<std::string> assignment;
  double epsilon = 1e-6;
  SearchConfig search;
};
nlohmann::json CmdVerify(const VerifyCommandOptions& options);

struct BestResponseCommandOptions {
  std::string game_path;
  int player = 0;
  // Strategies of the other players in player order, e.g. "1,0".
  std::string opponents;
  std::optional<std::string> criterion;
  SearchConfig search;
};
nlohmann::json CmdBestResponse(const BestResponseCommandOptions& options);

struct SearchMixedCommandOptions {
  std::string game_path;
  std::optional<std::string> assignment;
  MixedSearchConfig search;
};
nlohmann::json CmdSearchMixed(const SearchMixedCommandOptions& options);

struct ClassifyCommandOptions {
  std::string utility;
  // All shapes when unset.
  std::optional<std::string> shape;
  std::optional<std::string> box;
  // The default box of this game when no explicit box is given.
  std::optional<std::string> game_path;
  // Check one explicit triple instead of sampling.
  std::optional<std::string> x1;
  std::optional<std::string> x2;
  std::optional<double> lambda;
  FalsifyOptions falsify;
};
nlohmann::json CmdClassifyUtility(const ClassifyCommandOptions& options);

}  // namespace monfg

#endif  // MONFG_COMMANDS_H_
