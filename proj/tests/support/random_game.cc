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

#include "support/random_game.h"

#include <string>

#include "stackguard/spse.h"

namespace stackguard::testing {
namespace {

struct Builder {
  Rng& rng;
  const RandomGameOptions& options;
  std::vector<GameNode> nodes;

  std::string grow(const std::string& id, int depth) {
    const std::size_t at = nodes.size();
    nodes.push_back({id, Outcome::kSafeInteraction, -1, {}});
    const bool leaf = depth == options.max_depth ||
                      (depth > 0 && rng.uniform01() < options.leaf_probability);
    if (leaf) {
      nodes[at].owner = kAllOutcomes[rng.uniform_index(kAllOutcomes.size())];
      return id;
    }
    nodes[at].owner = rng.uniform_index(2) == 0 ? PlayerId::kAttacker
                                                : PlayerId::kDefender;
    const auto width = 1 + rng.uniform_index(options.max_branching);
    std::vector<Edge> children;
    for (std::uint64_t c = 0; c < width; ++c) {
      const std::string child = grow(id + "." + std::to_string(c), depth + 1);
      children.push_back({{"a" + std::to_string(c), 0}, child});
    }
    nodes[at].children = std::move(children);
    return id;
  }
};

}  // namespace

GameTree random_game(Rng& rng, const RandomGameOptions& options) {
  while (true) {
    Builder b{rng, options, {}};
    b.grow("r", 0);
    GameTree tree("r", std::move(b.nodes));
    if (defender_strategy_count(tree) <= options.max_defender_strategies) {
      return tree;
    }
  }
}

std::vector<GameTree> random_games(std::uint64_t seed, int count,
                                   const RandomGameOptions& options) {
  Rng rng(seed);
  std::vector<GameTree> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_game(rng, options));
  return out;
}

}  // namespace stackguard::testing
