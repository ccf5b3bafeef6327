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

// Command-line front end: reads JSON game files and prints JSON reports.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "monfg/commands.h"
#include "monfg/errors.h"

namespace {

void AddSearchFlags(CLI::App* command, monfg::SearchConfig* search) {
  command
      ->add_option("--grid", search->grid,
                   "Simplex subdivisions of the SER best-response scan")
      ->check(CLI::Range(2, 100000));
  command
      ->add_option("--restarts", search->restarts,
                   "Grid points refined by local search")
      ->check(CLI::PositiveNumber);
  command
      ->add_option("--refinement-budget", search->refinement_budget,
                   "Objective evaluations per restart")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium toolkit for multi-objective normal-form games"};
  app.require_subcommand(1);
  std::function<nlohmann::json()> run;

  std::string reduce_game;
  std::string reduce_output;
  auto* reduce =
      app.add_subcommand("reduce", "Write the single-objective trade-off game");
  reduce->add_option("game", reduce_game, "Game file")->required();
  reduce->add_option("-o,--output", reduce_output, "Trade-off game file")
      ->required();
  reduce->callback([&] {
    run = [&] { return monfg::CmdReduce(reduce_game, reduce_output); };
  });

  monfg::PsneCommandOptions psne_options;
  psne_options.tol = monfg::DefaultToleranceFromEnv();
  std::string psne_mode = "trusted";
  auto* psne = app.add_subcommand("psne", "Enumerate pure-strategy equilibria");
  psne->add_option("game", psne_options.game_path, "Game file")->required();
  psne->add_option("--mode", psne_mode, "trusted or verified")
      ->check(CLI::IsMember({"trusted", "verified"}));
  psne->add_option("--epsilon", psne_options.epsilon,
                   "Slack of the SER verification");
  psne->add_option("--tolerance", psne_options.tol, "Tie tolerance");
  psne->add_option("--seed", psne_options.seed, "Shape falsifier seed");
  psne->add_option("--trials", psne_options.trials, "Shape falsifier samples")
      ->check(CLI::PositiveNumber);
  AddSearchFlags(psne, &psne_options.search);
  psne->callback([&] {
    psne_options.mode = psne_mode == "verified"
                            ? monfg::PsneMode::kVerifiedSer
                            : monfg::PsneMode::kTrustedQuasiconvex;
    run = [&] { return monfg::CmdPsne(psne_options); };
  });

  monfg::VerifyCommandOptions verify_options;
  std::string verify_assignment;
  auto* verify = app.add_subcommand(
      "verify", "Check whether a strategy profile is an epsilon-equilibrium");
  verify->add_option("game", verify_options.game_path, "Game file")->required();
  verify
      ->add_option("--profile", verify_options.profile,
                   "Strategies, e.g. \"0.55,0.45;1,0\"")
      ->required();
  auto* verify_assignment_opt = verify->add_option(
      "--assignment", verify_assignment, "Criteria, e.g. \"ESR,SER\"");
  verify->add_option("--epsilon", verify_options.epsilon, "Allowed gain");
  AddSearchFlags(verify, &verify_options.search);
  verify->callback([&] {
    if (*verify_assignment_opt) verify_options.assignment = verify_assignment;
    run = [&] { return monfg::CmdVerify(verify_options); };
  });

  monfg::BestResponseCommandOptions br_options;
  std::string br_criterion;
  auto* br = app.add_subcommand("best-response", "Best response of one player");
  br->add_option("game", br_options.game_path, "Game file")->required();
  br->add_option("--player", br_options.player, "0-based player index")
      ->required();
  br->add_option("--opponents", br_options.opponents,
                 "Strategies of the other players, e.g. \"1,0\"")
      ->required();
  auto* br_criterion_opt =
      br->add_option("--criterion", br_criterion, "ESR or SER");
  AddSearchFlags(br, &br_options.search);
  br->callback([&] {
    if (*br_criterion_opt) br_options.criterion = br_criterion;
    run = [&] { return monfg::CmdBestResponse(br_options); };
  });

  monfg::SearchMixedCommandOptions mixed_options;
  std::string mixed_assignment;
  auto* mixed = app.add_subcommand(
      "search-mixed", "Grid search for mixed equilibria of a 2-player game");
  mixed->add_option("game", mixed_options.game_path, "Game file")->required();
  auto* mixed_assignment_opt = mixed->add_option(
      "--assignment", mixed_assignment, "Criteria, e.g. \"SER,SER\"");
  mixed
      ->add_option("--grid", mixed_options.search.grid,
                   "Simplex subdivisions of the profile scan")
      ->check(CLI::PositiveNumber);
  mixed->add_option("--epsilon", mixed_options.search.epsilon, "Allowed gain");
  mixed->add_option("--dedup-radius", mixed_options.search.dedup_radius,
                    "Merge radius (L-infinity)");
  mixed
      ->add_option("--max-candidates", mixed_options.search.max_candidates,
                   "Local minima refined")
      ->check(CLI::PositiveNumber);
  mixed->callback([&] {
    if (*mixed_assignment_opt) mixed_options.assignment = mixed_assignment;
    run = [&] { return monfg::CmdSearchMixed(mixed_options); };
  });

  monfg::ClassifyCommandOptions classify_options;
  classify_options.falsify.tol = monfg::DefaultToleranceFromEnv();
  std::string classify_shape, classify_box, classify_game, classify_x1,
      classify_x2;
  double classify_lambda = 0.5;
  auto* classify = app.add_subcommand(
      "classify-utility", "Search for convexity-class counterexamples");
  classify
      ->add_option("utility", classify_options.utility,
                   "S-expression, e.g. \"(* p1 p2)\"")
      ->required();
  auto* shape_opt = classify->add_option("--shape", classify_shape,
                                         "Shape to test (default: all)");
  auto* box_opt =
      classify->add_option("--box", classify_box, "Box, e.g. \"-10:1,-10:1\"");
  auto* game_opt = classify->add_option("--game", classify_game,
                                        "Use this game's default box");
  auto* x1_opt = classify->add_option("--x1", classify_x1, "Explicit point");
  auto* x2_opt = classify->add_option("--x2", classify_x2, "Explicit point");
  auto* lambda_opt =
      classify->add_option("--lambda", classify_lambda, "Explicit weight");
  classify->add_option("--trials", classify_options.falsify.trials, "Samples")
      ->check(CLI::PositiveNumber);
  classify->add_option("--seed", classify_options.falsify.seed, "RNG seed");
  classify->add_option("--tolerance", classify_options.falsify.tol,
                       "Violation tolerance");
  classify->callback([&] {
    if (*shape_opt) classify_options.shape = classify_shape;
    if (*box_opt) classify_options.box = classify_box;
    if (*game_opt) classify_options.game_path = classify_game;
    if (*x1_opt) classify_options.x1 = classify_x1;
    if (*x2_opt) classify_options.x2 = classify_x2;
    if (*lambda_opt) classify_options.lambda = classify_lambda;
    run = [&] { return monfg::CmdClassifyUtility(classify_options); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? monfg::kExitOk : monfg::kExitUsage;
  }

  try {
    std::cout << run().dump(2) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return monfg::ExitCodeFor(e);
  }
  return monfg::kExitOk;
}
