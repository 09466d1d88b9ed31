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

#include "stackguard/spse.h"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackguard/errors.h"

namespace stackguard {
namespace {

constexpr std::size_t kNone = GameTree::kNoNode;

// Index of the child maximizing `player`'s value. `value_of(c)` returns the
// UtilityPair of the c-th child.
template <typename ValueOf>
std::size_t best_child(std::size_t child_count, PlayerId player, TieBreak ties,
                       ValueOf value_of) {
  std::size_t best = 0;
  Score best_score = value_of(0).of(player);
  for (std::size_t c = 1; c < child_count; ++c) {
    const Score s = value_of(c).of(player);
    if (s > best_score || (s == best_score && ties == TieBreak::kHighestIndex)) {
      best = c;
      best_score = s;
    }
  }
  return best;
}

// Post-order over the subtree rooted at `start` (children before parents).
std::vector<std::size_t> post_order(const GameTree& tree, std::size_t start) {
  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, bool>> stack = {{start, false}};
  while (!stack.empty()) {
    auto [at, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(at);
      continue;
    }
    stack.emplace_back(at, true);
    const auto kids = tree.child_indices(at);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.emplace_back(*it, false);
    }
  }
  return order;
}

struct IndexedSolution {
  std::vector<UtilityPair> values;  // by node index; only subtree filled
  std::vector<std::size_t> choice;  // child position; kNone at terminals
};

IndexedSolution backward_induction(const GameTree& tree, std::size_t start,
                                   const SolveOptions& options) {
  IndexedSolution sol;
  sol.values.resize(tree.size());
  sol.choice.assign(tree.size(), kNone);
  for (std::size_t at : post_order(tree, start)) {
    const GameNode& node = tree.node(at);
    if (auto o = node.outcome()) {
      sol.values[at] = tree.utilities().at(*o);
      continue;
    }
    const PlayerId mover = *node.player();
    const TieBreak ties = mover == PlayerId::kAttacker ? options.attacker_ties
                                                       : options.defender_ties;
    const auto kids = tree.child_indices(at);
    const std::size_t c = best_child(
        kids.size(), mover, ties,
        [&](std::size_t i) -> const UtilityPair& { return sol.values[kids[i]]; });
    sol.choice[at] = c;
    sol.values[at] = sol.values[kids[c]];
  }
  return sol;
}

void fill_path(const GameTree& tree, SolveResult& result) {
  std::size_t at = tree.root_index();
  result.equilibrium_history.clear();
  while (!tree.node(at).is_terminal()) {
    const GameNode& node = tree.node(at);
    const ActionLabel& a = result.profile.choices.at(node.id);
    result.equilibrium_history.push_back(a.label);
    at = tree.child_indices(at)[a.index];
  }
  result.equilibrium_outcome = *tree.node(at).outcome();
}

SolveResult to_result(const GameTree& tree, const IndexedSolution& sol) {
  SolveResult result;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const GameNode& node = tree.node(i);
    result.values.values.emplace(node.id, sol.values[i]);
    if (sol.choice[i] != kNone) {
      result.profile.choices.emplace(node.id,
                                     node.children[sol.choice[i]].action);
    }
  }
  fill_path(tree, result);
  return result;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Values of the subgame at `start` when defender nodes play `assignment`
// (child position per defender node index) and the attacker replies
// sequentially rationally with lowest-index ties. Writes the attacker's
// replies into `reply`.
void evaluate_commitment(const GameTree& tree,
                         const std::vector<std::size_t>& order,
                         const std::vector<std::size_t>& assignment,
                         std::vector<UtilityPair>& values,
                         std::vector<std::size_t>& reply) {
  for (std::size_t at : order) {
    const GameNode& node = tree.node(at);
    const auto kids = tree.child_indices(at);
    if (auto o = node.outcome()) {
      values[at] = tree.utilities().at(*o);
    } else if (node.player() == PlayerId::kDefender) {
      values[at] = values[kids[assignment[at]]];
    } else {
      std::size_t best = 0;
      for (std::size_t c = 1; c < kids.size(); ++c) {
        if (values[kids[c]].attacker > values[kids[best]].attacker) best = c;
      }
      reply[at] = best;
      values[at] = values[kids[best]];
    }
  }
}

}  // namespace

const UtilityPair& ValueTable::at(std::string_view id) const {
  auto it = values.find(std::string(id));
  if (it == values.end()) {
    throw Error("no value recorded for node '" + std::string(id) + "'");
  }
  return it->second;
}

ActionLabel attacker_best_response(const GameTree& tree, std::size_t node,
                                   const ValueTable& values, TieBreak ties) {
  const GameNode& n = tree.node(node);
  const auto kids = tree.child_indices(node);
  const std::size_t c = best_child(
      kids.size(), PlayerId::kAttacker, ties,
      [&](std::size_t i) -> const UtilityPair& {
        return values.at(tree.node(kids[i]).id);
      });
  return n.children[c].action;
}

SolveResult solve_spse(const GameTree& tree, const SolveOptions& options) {
  require_valid(tree);
  return to_result(tree, backward_induction(tree, tree.root_index(), options));
}

std::uint64_t defender_strategy_count(const GameTree& tree) {
  std::uint64_t count = 1;
  for (const GameNode& node : tree.nodes()) {
    if (node.player() == PlayerId::kDefender) {
      count = saturating_mul(count, node.children.size());
    }
  }
  return count;
}

SolveResult brute_force_spse(const GameTree& tree, std::uint64_t cap) {
  require_valid(tree);
  const std::uint64_t total = defender_strategy_count(tree);
  if (total > cap) {
    throw SizeLimitError("defender has " + std::to_string(total) +
                         " pure strategies; brute force is capped at " +
                         std::to_string(cap));
  }

  IndexedSolution sol;
  sol.values.resize(tree.size());
  sol.choice.assign(tree.size(), kNone);
  std::vector<UtilityPair> values(tree.size());
  std::vector<std::size_t> reply(tree.size(), kNone);
  std::vector<std::size_t> assignment(tree.size(), 0);

  for (std::size_t root = 0; root < tree.size(); ++root) {
    const GameNode& top = tree.node(root);
    if (auto o = top.outcome()) {
      sol.values[root] = tree.utilities().at(*o);
      continue;
    }
    const std::vector<std::size_t> order = post_order(tree, root);
    std::vector<std::size_t> defenders;
    for (std::size_t at : order) {
      if (tree.node(at).player() == PlayerId::kDefender) defenders.push_back(at);
      assignment[at] = 0;
    }

    std::optional<UtilityPair> best;
    std::size_t best_choice = kNone;
    // Odometer over all pure defender strategies of this subgame.
    while (true) {
      evaluate_commitment(tree, order, assignment, values, reply);
      if (!best || values[root].defender > best->defender) {
        best = values[root];
        best_choice = top.player() == PlayerId::kDefender ? assignment[root]
                                                          : reply[root];
      }
      std::size_t digit = 0;
      while (digit < defenders.size()) {
        const std::size_t d = defenders[digit];
        if (++assignment[d] < tree.node(d).children.size()) break;
        assignment[d] = 0;
        ++digit;
      }
      if (digit == defenders.size()) break;
    }
    sol.values[root] = *best;
    sol.choice[root] = best_choice;
  }
  return to_result(tree, sol);
}

bool verify_subgame_perfection(const GameTree& tree,
                               const SolveResult& result) {
  if (!validate_tree(tree).empty()) return false;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const GameNode& node = tree.node(i);
    auto recorded = result.values.values.find(node.id);
    if (recorded == result.values.values.end()) return false;
    if (node.is_terminal()) {
      if (!(recorded->second == tree.utilities().at(*node.outcome()))) {
        return false;
      }
      continue;
    }
    const UtilityPair optimal = backward_induction(tree, i, {}).values[i];

    // Play the recorded profile forward from i.
    std::size_t at = i;
    while (!tree.node(at).is_terminal()) {
      auto choice = result.profile.choices.find(tree.node(at).id);
      if (choice == result.profile.choices.end()) return false;
      const auto& kids = tree.node(at).children;
      const int idx = choice->second.index;
      if (idx < 0 || static_cast<std::size_t>(idx) >= kids.size() ||
          kids[idx].action.label != choice->second.label) {
        return false;
      }
      at = tree.child_indices(at)[idx];
    }
    const UtilityPair induced = tree.utilities().at(*tree.node(at).outcome());
    if (!(induced == optimal) || !(recorded->second == optimal)) return false;
  }
  return true;
}

nlohmann::json solution_to_json(const SolveResult& result) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [id, v] : result.values.values) {
    values[id] = {v.attacker, v.defender};
  }
  nlohmann::json profile = nlohmann::json::object();
  for (const auto& [id, a] : result.profile.choices) profile[id] = a.label;
  return {{"values", values},
          {"profile", profile},
          {"path", result.equilibrium_history},
          {"outcome", outcome_key(result.equilibrium_outcome)}};
}

}  // namespace stackguard
