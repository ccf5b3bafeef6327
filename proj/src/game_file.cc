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

#include "monfg/game_file.h"

#include <fstream>
#include <sstream>

#include "monfg/errors.h"

namespace monfg {
namespace {

using nlohmann::json;

const json& Require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw InvalidInputError(std::string("game file is missing \"") + key +
                            "\"");
  }
  return *it;
}

int RequireInt(const json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw InvalidInputError(what + " must be an integer");
  }
  return value.get<int>();
}

double RequireNumber(const json& value, const std::string& what) {
  if (!value.is_number()) throw InvalidInputError(what + " must be a number");
  return value.get<double>();
}

const json& RequireArray(const json& value, const std::string& what,
                         std::size_t size) {
  if (!value.is_array()) throw InvalidInputError(what + " must be an array");
  if (value.size() != size) {
    throw InvalidInputError(what + " must have " + std::to_string(size) +
                            " entries, got " + std::to_string(value.size()));
  }
  return value;
}

}  // namespace

GameFile ParseGameFile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw InvalidInputError("game file must be an object");

  const int n = RequireInt(Require(doc, "players"), "\"players\"");
  if (n < 1) throw InvalidInputError("\"players\" must be >= 1");
  const json& actions_json =
      RequireArray(Require(doc, "actions"), "\"actions\"", n);
  std::vector<int> actions;
  for (const json& a : actions_json) {
    actions.push_back(RequireInt(a, "\"actions\" entries"));
    if (actions.back() < 1) {
      throw InvalidInputError("every player needs at least one action");
    }
  }
  const int d = RequireInt(Require(doc, "objectives"), "\"objectives\"");
  if (d < 1) throw InvalidInputError("\"objectives\" must be >= 1");

  std::int64_t joint = 1;
  for (int m : actions) {
    joint *= m;
    if (joint > (std::int64_t{1} << 26)) {
      throw UnsupportedInputError("joint action space too large");
    }
  }
  const json& payoffs_json =
      RequireArray(Require(doc, "payoffs"), "\"payoffs\"", n);
  std::vector<std::vector<double>> payoffs(n);
  for (int i = 0; i < n; ++i) {
    const std::string what = "\"payoffs\"[" + std::to_string(i) + "]";
    const json& tensor = RequireArray(payoffs_json[i], what, joint);
    payoffs[i].reserve(joint * d);
    for (std::int64_t k = 0; k < joint; ++k) {
      const json& entry = tensor[k];
      const std::string entry_what = what + "[" + std::to_string(k) + "]";
      if (d == 1 && entry.is_number()) {
        payoffs[i].push_back(entry.get<double>());
        continue;
      }
      RequireArray(entry, entry_what, d);
      for (const json& v : entry) {
        payoffs[i].push_back(RequireNumber(v, entry_what));
      }
    }
  }
  GameFile file{Monfg(std::move(actions), d, std::move(payoffs))};

  if (const auto it = doc.find("utilities"); it != doc.end()) {
    RequireArray(*it, "\"utilities\"", n);
    std::vector<UtilityExpr> utilities;
    for (int i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) {
        throw InvalidInputError("\"utilities\" entries must be strings");
      }
      const std::string expr = (*it)[i].get<std::string>();
      try {
        utilities.push_back(ParseUtility(expr));
      } catch (const ParseError& e) {
        throw ParseError("utility of player " + std::to_string(i) + " (\"" +
                             expr + "\"): " + e.what(),
                         e.position());
      }
    }
    CheckUtilities(file.game, utilities);
    file.utilities = std::move(utilities);
  }

  if (const auto it = doc.find("criteria"); it != doc.end()) {
    RequireArray(*it, "\"criteria\"", n);
    BlendedAssignment criteria;
    for (const json& c : *it) {
      const auto criterion =
          c.is_string() ? ParseCriterion(c.get<std::string>()) : std::nullopt;
      if (!criterion) {
        throw InvalidInputError(
            "\"criteria\" entries must be \"ESR\" or "
            "\"SER\"");
      }
      criteria.push_back(*criterion);
    }
    file.criteria = std::move(criteria);
  }

  if (const auto it = doc.find("action_labels"); it != doc.end()) {
    RequireArray(*it, "\"action_labels\"", n);
    std::vector<std::vector<std::string>> labels(n);
    for (int i = 0; i < n; ++i) {
      const std::string what = "\"action_labels\"[" + std::to_string(i) + "]";
      RequireArray((*it)[i], what, file.game.num_actions(i));
      for (const json& label : (*it)[i]) {
        if (!label.is_string()) {
          throw InvalidInputError(what + " entries must be strings");
        }
        labels[i].push_back(label.get<std::string>());
      }
    }
    file.action_labels = std::move(labels);
  }
  return file;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

GameFile LoadGameFile(const std::filesystem::path& path) {
  return ParseGameFile(ReadTextFile(path));
}

nlohmann::json GameFileToJson(const GameFile& file) {
  const Monfg& game = file.game;
  json doc;
  doc["players"] = game.num_players();
  doc["actions"] = game.action_counts();
  doc["objectives"] = game.num_objectives();
  json payoffs = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    json tensor = json::array();
    for (std::int64_t k = 0; k < game.num_joint_actions(); ++k) {
      const auto payoff = game.Payoff(i, k);
      tensor.push_back(std::vector<double>(payoff.begin(), payoff.end()));
    }
    payoffs.push_back(std::move(tensor));
  }
  doc["payoffs"] = std::move(payoffs);
  if (file.utilities) {
    json utilities = json::array();
    for (const auto& u : *file.utilities) utilities.push_back(u.ToString());
    doc["utilities"] = std::move(utilities);
  }
  if (file.criteria) {
    json criteria = json::array();
    for (Criterion c : *file.criteria) criteria.push_back(CriterionName(c));
    doc["criteria"] = std::move(criteria);
  }
  if (file.action_labels) doc["action_labels"] = *file.action_labels;
  return doc;
}

void WriteGameFile(const GameFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << GameFileToJson(file).dump(2) << '\n';
}

}  // namespace monfg
