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

#include "stackguard/figure1.h"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace stackguard {
namespace {

GameNode decision(std::string id, PlayerId who,
                  std::initializer_list<std::pair<const char*, const char*>> kids) {
  GameNode n{std::move(id), who, -1, {}};
  int i = 0;
  for (const auto& [label, to] : kids) n.children.push_back({{label, i++}, to});
  return n;
}

GameNode leaf(std::string id, Outcome o) {
  return GameNode{std::move(id), o, -1, {}};
}

}  // namespace

GameTree build_figure1_game() {
  constexpr PlayerId kA = PlayerId::kAttacker;
  constexpr PlayerId kD = PlayerId::kDefender;
  std::vector<GameNode> nodes = {
      decision("x0", kA,
               {{"benign", "benign"},
                {"role_play", "role_play"},
                {"multi_turn", "multi_turn"}}),

      decision("benign", kD,
               {{"Accept", "benign/accept"}, {"Reject", "benign/reject"}}),
      leaf("benign/accept", Outcome::kSafeInteraction),
      leaf("benign/reject", Outcome::kBlocked),

      decision("role_play", kD,
               {{"Accept", "role_play/accept"},
                {"Reject", "role_play/reject"},
                {"Redirect", "role_play/redirect"}}),
      leaf("role_play/accept", Outcome::kJailbreak),
      leaf("role_play/reject", Outcome::kBlocked),
      decision("role_play/redirect", kA,
               {{"escalate", "role_play/redirect/escalate"},
                {"comply", "role_play/redirect/comply"}}),
      decision("role_play/redirect/escalate", kD,
               {{"Accept", "role_play/redirect/escalate/accept"},
                {"Reject", "role_play/redirect/escalate/reject"}}),
      leaf("role_play/redirect/escalate/accept", Outcome::kJailbreak),
      leaf("role_play/redirect/escalate/reject", Outcome::kBlocked),
      leaf("role_play/redirect/comply", Outcome::kSafeInteraction),

      decision("multi_turn", kD,
               {{"Accept", "multi_turn/accept"},
                {"Reject", "multi_turn/reject"},
                {"Redirect", "multi_turn/redirect"}}),
      decision("multi_turn/accept", kA,
               {{"probe", "multi_turn/accept/probe"},
                {"retreat", "multi_turn/accept/retreat"}}),
      decision("multi_turn/accept/probe", kD,
               {{"Accept", "multi_turn/accept/probe/accept"},
                {"Reject", "multi_turn/accept/probe/reject"}}),
      leaf("multi_turn/accept/probe/accept", Outcome::kJailbreak),
      leaf("multi_turn/accept/probe/reject", Outcome::kBlocked),
      leaf("multi_turn/accept/retreat", Outcome::kSafeInteraction),
      leaf("multi_turn/reject", Outcome::kBlocked),
      leaf("multi_turn/redirect", Outcome::kSafeInteraction),
  };
  return GameTree("x0", std::move(nodes));
}

}  // namespace stackguard
