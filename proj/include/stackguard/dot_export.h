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

// Graphviz output. Node order is by id, so output is byte-stable.
//
// Exploration trees: node label = id, tooltip = coordinates, fill by
// verdict (safe green, redirect yellow, jailbreak red). Each defense event
// becomes a note-shaped annotation attached with a dashed edge to the node
// inserted in the same iteration.
//
// Games: attacker nodes are boxes, defender nodes ellipses, terminals are
// filled by outcome (safe green, jailbreak red, blocked grey); edges carry
// the action label.

#ifndef STACKGUARD_DOT_EXPORT_H_
#define STACKGUARD_DOT_EXPORT_H_

#include <filesystem>
#include <span>
#include <string>

#include "stackguard/game_core.h"
#include "stackguard/purple.h"
#include "stackguard/rrt.h"

namespace stackguard {

std::string rrt_to_dot(const RrtTree& tree,
                       std::span<const DefenseEvent> defenses = {});
std::string game_to_dot(const GameTree& game);

void export_dot(const RrtTree& tree, const std::filesystem::path& path,
                std::span<const DefenseEvent> defenses = {});
void export_dot(const GameTree& game, const std::filesystem::path& path);

}  // namespace stackguard

#endif  // STACKGUARD_DOT_EXPORT_H_
