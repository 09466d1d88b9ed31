// Copyright 2026 The Stackguard Authors
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

#include "stackguard/game_io.h"

#include <string>
#include <utility>
#include <vector>

#include "stackguard/errors.h"
#include "stackguard/json_util.h"

namespace stackguard {
namespace {

UtilityPair pair_from_json(const nlohmann::json& j, const std::string& path) {
  as_array(j, path);
  if (j.size() != 2) throw ParseError(path + ": expected [u1, u2]");
  return {as_integer(j[0], path + "[0]"), as_integer(j[1], path + "[1]")};
}

}  // namespace

UtilityTable utilities_from_json(const nlohmann::json& j) {
  if (j.is_null()) return UtilityTable();
  as_object(j, "utilities");
  const UtilityTable defaults;
  auto get = [&](Outcome o) {
    const std::string key(outcome_key(o));
    auto it = j.find(key);
    return it == j.end() ? defaults.at(o)
                         : pair_from_json(*it, "utilities." + key);
  };
  for (const auto& [key, unused] : j.items()) {
    if (!outcome_from_key(key)) {
      throw ParseError("utilities: unknown outcome '" + key + "'");
    }
  }
  return UtilityTable(get(Outcome::kSafeInteraction), get(Outcome::kJailbreak),
                      get(Outcome::kBlocked));
}

nlohmann::json utilities_to_json(const UtilityTable& table) {
  nlohmann::json j = nlohmann::json::object();
  for (Outcome o : kAllOutcomes) {
    j[std::string(outcome_key(o))] = {table.at(o).attacker,
                                      table.at(o).defender};
  }
  return j;
}

GameTree game_from_json(const nlohmann::json& j) {
  as_object(j, "game");
  const long long version = as_integer(require_field(j, "version", "game"),
                                       "game.version");
  if (version != 1) {
    throw ParseError("game.version: unsupported version " +
                     std::to_string(version));
  }
  UtilityTable utilities =
      utilities_from_json(j.contains("utilities") ? j.at("utilities")
                                                  : nlohmann::json());
  std::string root = as_string(require_field(j, "root", "game"), "game.root");

  const nlohmann::json& arr =
      as_array(require_field(j, "nodes", "game"), "game.nodes");
  std::vector<GameNode> nodes;
  nodes.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "game.nodes[" + std::to_string(i) + "]";
    const nlohmann::json& jn = as_object(arr[i], path);
    GameNode node;
    node.id = as_string(require_field(jn, "id", path), path + ".id");
    const std::string owner =
        as_string(require_field(jn, "owner", path), path + ".owner");
    if (owner == "attacker") {
      node.owner = PlayerId::kAttacker;
    } else if (owner == "defender") {
      node.owner = PlayerId::kDefender;
    } else if (owner == "terminal") {
      const std::string key = as_string(require_field(jn, "outcome", path),
                                        path + ".outcome");
      auto o = outcome_from_key(key);
      if (!o) throw ParseError(path + ".outcome: unknown outcome '" + key + "'");
      node.owner = *o;
    } else {
      throw ParseError(path + ".owner: expected attacker|defender|terminal, "
                              "got '" + owner + "'");
    }
    if (owner != "terminal" && jn.contains("outcome")) {
      throw ParseError(path + ".outcome: only terminal nodes carry an outcome");
    }
    if (jn.contains("children")) {
      const nlohmann::json& kids = as_array(jn.at("children"), path + ".children");
      for (std::size_t c = 0; c < kids.size(); ++c) {
        const std::string cp = path + ".children[" + std::to_string(c) + "]";
        as_object(kids[c], cp);
        Edge e;
        e.action.label =
            as_string(require_field(kids[c], "action", cp), cp + ".action");
        e.action.index = static_cast<int>(c);
        e.to = as_string(require_field(kids[c], "to", cp), cp + ".to");
        node.children.push_back(std::move(e));
      }
    }
    nodes.push_back(std::move(node));
  }
  return GameTree(std::move(root), std::move(nodes), utilities);
}

nlohmann::json game_to_json(const GameTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const GameNode& node : tree.nodes()) {
    nlohmann::json jn = {{"id", node.id}};
    if (auto p = node.player()) {
      jn["owner"] = *p == PlayerId::kAttacker ? "attacker" : "defender";
    } else {
      jn["owner"] = "terminal";
      jn["outcome"] = outcome_key(*node.outcome());
    }
    nlohmann::json kids = nlohmann::json::array();
    for (const Edge& e : node.children) {
      kids.push_back({{"action", e.action.label}, {"to", e.to}});
    }
    jn["children"] = std::move(kids);
    nodes.push_back(std::move(jn));
  }
  return {{"version", 1},
          {"utilities", utilities_to_json(tree.utilities())},
          {"root", tree.root_id()},
          {"nodes", std::move(nodes)}};
}

GameTree load_game(const std::filesystem::path& path) {
  return game_from_json(read_json_file(path));
}

}  // namespace stackguard
