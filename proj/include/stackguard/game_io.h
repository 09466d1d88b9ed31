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

// Game-tree file format, version 1:
//
//   { "version": 1,
//     "utilities": {"jailbreak": [1,-1], "safe": [0,0], "blocked": [-1,1]},
//     "root": "x0",
//     "nodes": [ {"id": "x0", "owner": "attacker",
//                 "children": [{"action": "benign", "to": "d1"}, ...]},
//                {"id": "t1", "owner": "terminal", "outcome": "safe"}, ... ] }
//
// Children are listed in tie-break order.

#ifndef STACKGUARD_GAME_IO_H_
#define STACKGUARD_GAME_IO_H_

#include <filesystem>

#include "nlohmann/json.hpp"
#include "stackguard/game_core.h"

namespace stackguard {

// Missing "utilities" means the default table.
UtilityTable utilities_from_json(const nlohmann::json& j);
nlohmann::json utilities_to_json(const UtilityTable& table);

// Parses the structure only; call validate_tree() for invariants.
GameTree game_from_json(const nlohmann::json& j);
nlohmann::json game_to_json(const GameTree& tree);

GameTree load_game(const std::filesystem::path& path);

}  // namespace stackguard

#endif  // STACKGUARD_GAME_IO_H_
