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

// Seeded random game trees for solver cross-checks.

#ifndef STACKGUARD_TESTS_SUPPORT_RANDOM_GAME_H_
#define STACKGUARD_TESTS_SUPPORT_RANDOM_GAME_H_

#include <cstdint>
#include <vector>

#include "stackguard/game_core.h"
#include "stackguard/rng.h"

namespace stackguard::testing {

struct RandomGameOptions {
  int max_depth = 4;      // edges from the root to the deepest leaf
  int max_branching = 3;
  // Chance that a non-root node above max_depth is a leaf.
  double leaf_probability = 0.3;
  // Trees whose defender strategy space exceeds this are redrawn.
  std::uint64_t max_defender_strategies = 1 << 14;
};

// Owners are drawn uniformly from {attacker, defender}; leaf outcomes
// uniformly from the three outcomes.
GameTree random_game(Rng& rng, const RandomGameOptions& options = {});

// `count` trees from one seeded stream.
std::vector<GameTree> random_games(std::uint64_t seed, int count,
                                   const RandomGameOptions& options = {});

}  // namespace stackguard::testing

#endif  // STACKGUARD_TESTS_SUPPORT_RANDOM_GAME_H_
