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

// Subgame-perfect Stackelberg equilibrium of a perfect-information game.
//
// The defender leads: at a defender node it picks the child maximizing its
// own continuation value, where every downstream attacker node already
// resolves to the attacker's best response. At an attacker node the attacker
// picks the child maximizing its own continuation value. Both players'
// values are propagated independently; neither is derived from the other.

#ifndef STACKGUARD_SPSE_H_
#define STACKGUARD_SPSE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "nlohmann/json.hpp"
#include "stackguard/game_core.h"

namespace stackguard {

// node id -> (v1, v2).
struct ValueTable {
  std::map<std::string, UtilityPair> values;

  const UtilityPair& at(std::string_view id) const;
  friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

struct SolveResult {
  ValueTable values;
  StrategyProfile profile;
  History equilibrium_history;
  Outcome equilibrium_outcome = Outcome::kSafeInteraction;
};

enum class TieBreak { kLowestIndex, kHighestIndex };

struct SolveOptions {
  TieBreak attacker_ties = TieBreak::kLowestIndex;
  TieBreak defender_ties = TieBreak::kLowestIndex;
};

inline constexpr std::uint64_t kBruteForceStrategyCap = 1'000'000;

// Child of attacker node `node` maximizing v1 among `values`; ties go to the
// lowest sibling index unless `ties` says otherwise.
ActionLabel attacker_best_response(const GameTree& tree, std::size_t node,
                                   const ValueTable& values,
                                   TieBreak ties = TieBreak::kLowestIndex);

// Backward induction. Throws ValidationError on an invalid tree.
SolveResult solve_spse(const GameTree& tree, const SolveOptions& options = {});

// Test oracle: for every decision node n, enumerates every pure defender
// strategy of the subgame at n, lets the attacker reply sequentially
// rationally (lowest-index ties), and keeps the strategy maximizing the
// defender's value at n. Throws SizeLimitError when the defender strategy
// count of the whole tree exceeds `cap`.
SolveResult brute_force_spse(const GameTree& tree,
                             std::uint64_t cap = kBruteForceStrategyCap);

// Number of pure defender strategies of the whole tree, saturating at
// UINT64_MAX.
std::uint64_t defender_strategy_count(const GameTree& tree);

// True iff at every decision node, the play induced by result.profile from
// that node attains the value of a fresh solve of that subgame, and the
// recorded value agrees with both.
bool verify_subgame_perfection(const GameTree& tree, const SolveResult& result);

// { "values": {id: [v1, v2]}, "profile": {id: action}, "path": [...],
//   "outcome": "safe"|"jailbreak"|"blocked" }
nlohmann::json solution_to_json(const SolveResult& result);

}  // namespace stackguard

#endif  // STACKGUARD_SPSE_H_
