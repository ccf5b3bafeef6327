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

#ifndef MONFG_GAME_FILE_H_
#define MONFG_GAME_FILE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "monfg/criteria.h"
#include "monfg/game.h"
#include "monfg/utility.h"

namespace monfg {

// The JSON game format:
//
//   {
//     "players": 2,
//     "actions": [2, 2],
//     "objectives": 2,
//     "payoffs": [[[4, 1], [5, 1], [1, 4], [1, 3]],    // player 0
//                 [[4, 1], [1, 4], [5, 1], [1, 3]]],   // player 1
//     "utilities": ["(+ (pow p1 2) p2)", "(* p1 p2)"], // optional
//     "criteria": ["ESR", "SER"],                      // optional
//     "action_labels": [["Cardio", "Lifting"], ...]    // optional
//   }
//
// Each player's payoff list walks the joint actions in row-major order (the
// last player's action varies fastest). With one objective a bare number
// may stand in for a one-element vector.
struct GameFile {
  Monfg game;
  std::optional<std::vector<UtilityExpr>> utilities = std::nullopt;
  std::optional<BlendedAssignment> criteria = std::nullopt;
  std::optional<std::vector<std::vector<std::string>>> action_labels =
      std::nullopt;
};

// Throws ParseError for malformed JSON or utility expressions and
// InvalidInputError for shape violations.
GameFile ParseGameFile(std::string_view text);
GameFile LoadGameFile(const std::filesystem::path& path);

nlohmann::json GameFileToJson(const GameFile& file);
void WriteGameFile(const GameFile& file, const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace monfg

#endif  // MONFG_GAME_FILE_H_
