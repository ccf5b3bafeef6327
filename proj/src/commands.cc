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

#include "monfg/commands.h"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "monfg/errors.h"
#include "monfg/game_file.h"
#include "monfg/shape.h"

namespace monfg {
namespace {

using nlohmann::json;

std::vector<std::string_view> Split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(separator, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::optional<double> ParseDouble(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// A decimal or a fraction "a/b".
std::optional<double> ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ParseDouble(text);
  const auto numerator = ParseDouble(text.substr(0, slash));
  const auto denominator = ParseDouble(text.substr(slash + 1));
  if (!numerator || !denominator || *denominator == 0.0) return std::nullopt;
  return *numerator / *denominator;
}

std::vector<double> ParseVector(std::string_view text, const char* what) {
  std::vector<double> values;
  for (std::string_view token : Split(text, ',')) {
    const auto value = ParseRational(Trim(token));
    if (!value) {
      throw UsageError(std::string("malformed number '") +
                       std::string(Trim(token)) + "' in " + what);
    }
    values.push_back(*value);
  }
  return values;
}

json ReportSkeleton(std::string_view command, std::string_view input_bytes) {
  json report;
  report["command"] = command;
  report["inputs-digest"] = "sha256:" + Sha256Hex(input_bytes);
  report["warnings"] = json::array();
  return report;
}

json SearchConfigJson(const SearchConfig& config) {
  return {{"grid", config.grid},
          {"restarts", config.restarts},
          {"refinement_budget", config.refinement_budget},
          {"min_step", config.min_step}};
}

json CounterexampleJson(const ShapeCounterexample& c) {
  return {{"shape", ShapeName(c.shape)},
          {"x1", c.x1},
          {"x2", c.x2},
          {"lambda", c.lambda},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"violation_margin", c.violation_margin}};
}

json BoxJson(const BoxDomain& box) { return {{"lo", box.lo}, {"hi", box.hi}}; }

json ProfileJson(const StrategyProfile& profile) {
  json out = json::array();
  for (const auto& s : profile) {
    out.push_back(std::vector<double>(s.probs().begin(), s.probs().end()));
  }
  return out;
}

json AssignmentJson(const BlendedAssignment& assignment) {
  json out = json::array();
  for (Criterion c : assignment) out.push_back(CriterionName(c));
  return out;
}

json ActionsJson(const ActionProfile& profile, const GameFile& file) {
  json labels = nullptr;
  if (file.action_labels) {
    labels = json::array();
    for (int i = 0; i < profile.size(); ++i) {
      labels.push_back((*file.action_labels)[i][profile[i]]);
    }
  }
  return {{"actions", profile.actions()}, {"labels", labels}};
}

const std::vector<UtilityExpr>& RequireUtilities(const GameFile& file) {
  if (!file.utilities) {
    throw UsageError(
        "the game file has no \"utilities\"; this command needs "
        "one utility per player");
  }
  return *file.utilities;
}

BlendedAssignment ResolveAssignment(const std::optional<std::string>& text,
                                    const GameFile& file) {
  BlendedAssignment assignment;
  if (text) {
    assignment = ParseAssignment(*text);
  } else if (file.criteria) {
    assignment = *file.criteria;
  } else {
    assignment.assign(file.game.num_players(), Criterion::kSer);
  }
  if (static_cast<int>(assignment.size()) != file.game.num_players()) {
    throw InvalidInputError(
        "assignment has " + std::to_string(assignment.size()) +
        " criteria for a " + std::to_string(file.game.num_players()) +
        "-player game");
  }
  return assignment;
}

json VerificationJson(const VerificationReport& report) {
  return {{"assignment", AssignmentJson(report.assignment)},
          {"values", report.values},
          {"best_response_values", report.best_response_values},
          {"exploitability", report.exploitability},
          {"lower_bound", report.lower_bound},
          {"max_exploitability", report.max_exploitability()},
          {"epsilon", report.epsilon},
          {"is_epsilon_ne", report.is_epsilon_ne}};
}

constexpr std::string_view kLowerBoundNote =
    "SER exploitabilities come from a best-response search and are lower "
    "bounds: a negative verdict is certain, a positive one holds up to "
    "search quality";

}  // namespace

int ExitCodeFor(const std::exception& error) {
  if (dynamic_cast<const UsageError*>(&error) ||
      dynamic_cast<const ParseError*>(&error)) {
    return kExitUsage;
  }
  if (dynamic_cast<const UnsupportedInputError*>(&error)) {
    return kExitUnsupported;
  }
  return kExitValidation;
}

double DefaultToleranceFromEnv() {
  if (const char* env = std::getenv("MONFG_TOLERANCE")) {
    if (const auto value = ParseDouble(env); value && *value > 0.0) {
      return *value;
    }
  }
  return kDefaultTolerance;
}

std::vector<std::vector<double>> ParseProbabilityList(std::string_view text) {
  if (Trim(text).empty()) throw UsageError("empty profile");
  std::vector<std::vector<double>> result;
  for (std::string_view player : Split(text, ';')) {
    result.push_back(ParseVector(player, "profile"));
  }
  return result;
}

StrategyProfile ParseProfile(std::string_view text, const Monfg& game) {
  StrategyProfile profile;
  for (auto& probs : ParseProbabilityList(text)) {
    profile.emplace_back(std::move(probs));
  }
  game.CheckProfile(profile);
  return profile;
}

BlendedAssignment ParseAssignment(std::string_view text) {
  BlendedAssignment assignment;
  for (std::string_view token : Split(text, ',')) {
    const auto criterion = ParseCriterion(Trim(token));
    if (!criterion) {
      throw UsageError("unknown criterion '" + std::string(Trim(token)) +
                       "' (expected ESR or SER)");
    }
    assignment.push_back(*criterion);
  }
  return assignment;
}

BoxDomain ParseBox(std::string_view text) {
  BoxDomain box;
  for (std::string_view token : Split(text, ',')) {
    const std::string_view interval = Trim(token);
    const auto colon = interval.find(':');
    const auto lo = colon == std::string_view::npos
                        ? std::nullopt
                        : ParseDouble(interval.substr(0, colon));
    const auto hi = colon == std::string_view::npos
                        ? std::nullopt
                        : ParseDouble(interval.substr(colon + 1));
    if (!lo || !hi) {
      throw UsageError("malformed box interval '" + std::string(interval) +
                       "' (expected lo:hi)");
    }
    box.lo.push_back(*lo);
    box.hi.push_back(*hi);
  }
  box.Validate();
  return box;
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  std::ostringstream hex;
  for (unsigned int k = 0; k < length; ++k) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[k]);
  }
  return hex.str();
}

json CmdReduce(const std::string& game_path, const std::string& output_path) {
  const std::string bytes = ReadTextFile(game_path);
  const GameFile file = ParseGameFile(bytes);
  const TradeOffGame trade_off = ReduceMonfg(file.game, RequireUtilities(file));

  GameFile out{trade_off.nfg};
  out.utilities = std::vector<UtilityExpr>(file.game.num_players(),
                                           UtilityExpr::Variable(1));
  out.criteria = file.criteria;
  out.action_labels = file.action_labels;
  WriteGameFile(out, output_path);

  json report = ReportSkeleton("reduce", bytes);
  json payoffs = json::array();
  for (int i = 0; i < trade_off.nfg.num_players(); ++i) {
    payoffs.push_back(trade_off.nfg.flat_payoffs(i));
  }
  report["results"] = {{"output", output_path},
                       {"actions", trade_off.nfg.action_counts()},
                       {"payoffs", std::move(payoffs)}};
  report["config"] = json::object();
  return report;
}

json CmdPsne(const PsneCommandOptions& options) {
  const std::string bytes = ReadTextFile(options.game_path);
  const GameFile file = ParseGameFile(bytes);
  PsneOptions psne_options{
      .mode = options.mode,
      .epsilon = options.epsilon,
      .tol = options.tol,
      .falsify = {.trials = options.trials, .seed = options.seed},
      .search = options.search,
  };
  const PsneResult result =
      PsneMonfg(file.game, RequireUtilities(file), psne_options);

  json report = ReportSkeleton("psne", bytes);
  for (const PsneWarning& w : result.warnings) {
    report["warnings"].push_back(
        {{"player", w.player},
         {"message", w.message},
         {"counterexample", w.counterexample
                                ? CounterexampleJson(*w.counterexample)
                                : json(nullptr)}});
  }
  json equilibria = json::array();
  for (const ActionProfile& p : result.psne.profiles) {
    equilibria.push_back(ActionsJson(p, file));
  }
  json rejected = json::array();
  for (const RejectedCandidate& r : result.rejected) {
    json entry = ActionsJson(r.profile, file);
    entry["verification"] = VerificationJson(r.report);
    rejected.push_back(std::move(entry));
  }
  std::string explanation;
  if (result.psne.profiles.empty()) {
    if (!result.rejected.empty()) {
      explanation = std::to_string(result.rejected.size()) +
                    " pure equilibria of the trade-off game were rejected: "
                    "under SER some player gains more than epsilon by "
                    "deviating to a mixed strategy";
    } else {
      explanation = "the trade-off game has no pure-strategy equilibrium";
    }
  }
  const bool trusted = result.mode == PsneMode::kTrustedQuasiconvex;
  report["results"] = {{"mode", trusted ? "trusted" : "verified"},
                       {"equilibria", std::move(equilibria)},
                       {"valid_for", result.valid_for},
                       {"rejected", std::move(rejected)},
                       {"explanation", explanation},
                       {"falsification_box", BoxJson(result.box)}};
  report["config"] = {
      {"tolerance", options.tol},
      {"epsilon", options.epsilon},
      {"seed", options.seed},
      {"trials", options.trials},
      {"falsification_box",
       "payoff bounding box widened by 10% of each side (at least 0.1)"},
      {"search", SearchConfigJson(options.search)}};
  return report;
}

json CmdVerify(const VerifyCommandOptions& options) {
  const std::string bytes = ReadTextFile(options.game_path);
  const GameFile file = ParseGameFile(bytes);
  const auto& utilities = RequireUtilities(file);
  const StrategyProfile profile = ParseProfile(options.profile, file.game);
  const BlendedAssignment assignment =
      ResolveAssignment(options.assignment, file);
  const VerificationReport verification =
      VerifyNe(file.game, utilities, profile, assignment, options.epsilon,
               options.search);

  json report = ReportSkeleton("verify", bytes);
  json results = VerificationJson(verification);
  results["profile"] = ProfileJson(profile);
  results["note"] = kLowerBoundNote;
  report["results"] = std::move(results);
  report["config"] = {{"epsilon", options.epsilon},
                      {"search", SearchConfigJson(options.search)}};
  return report;
}

json CmdBestResponse(const BestResponseCommandOptions& options) {
  const std::string bytes = ReadTextFile(options.game_path);
  const GameFile file = ParseGameFile(bytes);
  const auto& utilities = RequireUtilities(file);
  const Monfg& game = file.game;
  game.CheckPlayer(options.player);

  auto opponents = ParseProbabilityList(options.opponents);
  if (static_cast<int>(opponents.size()) != game.num_players() - 1) {
    throw InvalidInputError(
        "expected strategies for " + std::to_string(game.num_players() - 1) +
        " opponents, got " + std::to_string(opponents.size()));
  }
  StrategyProfile profile;
  for (int i = 0, next = 0; i < game.num_players(); ++i) {
    if (i == options.player) {
      profile.push_back(MixedStrategy::Uniform(game.num_actions(i)));
    } else {
      profile.emplace_back(std::move(opponents[next++]));
    }
  }
  game.CheckProfile(profile);

  Criterion criterion = Criterion::kSer;
  if (options.criterion) {
    const auto parsed = ParseCriterion(*options.criterion);
    if (!parsed) {
      throw UsageError("unknown criterion '" + *options.criterion + "'");
    }
    criterion = *parsed;
  } else if (file.criteria) {
    criterion = (*file.criteria)[options.player];
  }
  const BestResponseResult best = BestResponse(
      game, utilities, options.player, profile, criterion, options.search);

  json report = ReportSkeleton("best-response", bytes);
  report["results"] = {
      {"player", options.player},
      {"criterion", CriterionName(criterion)},
      {"strategy", std::vector<double>(best.strategy.probs().begin(),
                                       best.strategy.probs().end())},
      {"value", best.value},
      {"exact", best.exact},
      {"search",
       {{"grid", best.grid},
        {"restarts", best.restarts},
        {"refinement_iterations", best.refinement_iterations},
        {"evaluations", best.evaluations}}}};
  report["config"] = {{"search", SearchConfigJson(options.search)}};
  return report;
}

json CmdSearchMixed(const SearchMixedCommandOptions& options) {
  const std::string bytes = ReadTextFile(options.game_path);
  const GameFile file = ParseGameFile(bytes);
  const auto& utilities = RequireUtilities(file);
  const BlendedAssignment assignment =
      ResolveAssignment(options.assignment, file);
  const MixedSearchResult found =
      SearchMixedNe2p(file.game, utilities, assignment, options.search);

  json equilibria = json::array();
  for (const MixedEquilibrium& e : found.equilibria) {
    equilibria.push_back(
        {{"profile", ProfileJson(e.profile)},
         {"exploitability", e.report.exploitability},
         {"max_exploitability", e.report.max_exploitability()}});
  }
  const std::string note =
      found.equilibria.empty()
          ? "no epsilon-equilibrium found within the search budget; this "
            "does not show that none exists"
          : "certified equilibria found by grid search; the list need not "
            "be exhaustive";
  json report = ReportSkeleton("search-mixed", bytes);
  report["results"] = {{"assignment", AssignmentJson(assignment)},
                       {"equilibria", std::move(equilibria)},
                       {"count", found.equilibria.size()},
                       {"exhaustive", found.exhaustive},
                       {"grid_points", found.grid_points},
                       {"candidates_refined", found.candidates_refined},
                       {"note", note}};
  const MixedSearchConfig& c = options.search;
  report["config"] = {
      {"grid", c.grid},
      {"epsilon", c.epsilon},
      {"dedup_radius", c.dedup_radius},
      {"max_candidates", c.max_candidates},
      {"refinement_budget", c.refinement_budget},
      {"refinement_search", SearchConfigJson(c.refinement_search)},
      {"certification_search", SearchConfigJson(c.certification_search)}};
  return report;
}

json CmdClassifyUtility(const ClassifyCommandOptions& options) {
  const UtilityExpr u = ParseUtility(options.utility);
  const int dims = std::max(1, u.MaxVariableIndex());

  std::string digest_input = options.utility;
  BoxDomain box;
  std::string box_source;
  if (options.box) {
    box = ParseBox(*options.box);
    box_source = "explicit";
  } else if (options.game_path) {
    const std::string bytes = ReadTextFile(*options.game_path);
    digest_input += '\n' + bytes;
    box = DefaultBox(ParseGameFile(bytes).game);
    box_source = "game default box";
  } else {
    box = BoxDomain{std::vector<double>(dims, -1.0),
                    std::vector<double>(dims, 1.0)};
    box_source = "unit box [-1, 1]^d";
  }
  if (box.dims() < dims) {
    throw InvalidInputError("box has " + std::to_string(box.dims()) +
                            " dimensions but the utility uses p" +
                            std::to_string(dims));
  }

  std::vector<Shape> shapes;
  if (options.shape) {
    const auto shape = ParseShape(*options.shape);
    if (!shape) throw UsageError("unknown shape '" + *options.shape + "'");
    shapes.push_back(*shape);
  } else {
    shapes.assign(std::begin(kAllShapes), std::end(kAllShapes));
  }

  const bool explicit_triple = options.x1 || options.x2;
  std::vector<double> x1;
  std::vector<double> x2;
  double lambda = options.lambda.value_or(0.5);
  if (explicit_triple) {
    if (!options.x1 || !options.x2) {
      throw UsageError("--x1 and --x2 must be given together");
    }
    x1 = ParseVector(*options.x1, "--x1");
    x2 = ParseVector(*options.x2, "--x2");
    if (x1.size() != x2.size() || static_cast<int>(x1.size()) < dims) {
      throw InvalidInputError(
          "--x1 and --x2 must have the same length, at "
          "least " +
          std::to_string(dims));
    }
  }

  json shape_results = json::array();
  for (Shape shape : shapes) {
    const std::optional<ShapeCounterexample> found =
        explicit_triple
            ? CheckShapeTriple(u, shape, x1, x2, lambda, options.falsify.tol)
            : FalsifyShape(u, shape, box, options.falsify);
    shape_results.push_back(
        {{"shape", ShapeName(shape)},
         {"verdict", found ? "violated" : "no counterexample found"},
         {"counterexample",
          found ? CounterexampleJson(*found) : json(nullptr)}});
  }

  json report = ReportSkeleton("classify-utility", digest_input);
  report["results"] = {{"utility", u.ToString()},
                       {"mode", explicit_triple ? "triple" : "sampled"},
                       {"box", BoxJson(box)},
                       {"shapes", std::move(shape_results)}};
  report["config"] = {{"trials", options.falsify.trials},
                      {"seed", options.falsify.seed},
                      {"tolerance", options.falsify.tol},
                      {"strict_delta", options.falsify.strict_delta},
                      {"box_source", box_source}};
  return report;
}

}  // namespace monfg
