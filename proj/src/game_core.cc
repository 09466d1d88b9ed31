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

#include "stackguard/game_core.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stackguard/errors.h"

namespace stackguard {

std::string_view to_string(PlayerId p) {
  return p == PlayerId::kAttacker ? "Attacker" : "Defender";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kSafeInteraction:
      return "SafeInteraction";
    case Outcome::kJailbreak:
      return "Jailbreak";
    case Outcome::kBlocked:
      return "Blocked";
  }
  return "?";
}

std::string_view outcome_key(Outcome o) {
  switch (o) {
    case Outcome::kSafeInteraction:
      return "safe";
    case Outcome::kJailbreak:
      return "jailbreak";
    case Outcome::kBlocked:
      return "blocked";
  }
  return "?";
}

std::optional<Outcome> outcome_from_key(std::string_view key) {
  for (Outcome o : kAllOutcomes) {
    if (outcome_key(o) == key) return o;
  }
  return std::nullopt;
}

UtilityTable::UtilityTable()
    : UtilityTable({0, 0}, {+1, -1}, {-1, +1}) {}

UtilityTable::UtilityTable(UtilityPair safe, UtilityPair jailbreak,
                           UtilityPair blocked)
    : entries_{safe, jailbreak, blocked} {
  std::vector<std::string> bad;
  for (Outcome o : kAllOutcomes) {
    const UtilityPair& u = at(o);
    if (u.attacker + u.defender != 0) {
      bad.push_back("utilities for " + std::string(outcome_key(o)) +
                    " do not sum to zero: [" + std::to_string(u.attacker) +
                    ", " + std::to_string(u.defender) + "]");
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

Score utility_of(const UtilityTable& table, Outcome o, PlayerId p) {
  return table.at(o).of(p);
}

std::optional<PlayerId> GameNode::player() const {
  if (const auto* p = std::get_if<PlayerId>(&owner)) return *p;
  return std::nullopt;
}

std::optional<Outcome> GameNode::outcome() const {
  if (const auto* o = std::get_if<Outcome>(&owner)) return *o;
  return std::nullopt;
}

GameTree::GameTree(std::string root, std::vector<GameNode> nodes,
                   UtilityTable utilities)
    : root_(std::move(root)),
      nodes_(std::move(nodes)),
      utilities_(utilities) {
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    index_.emplace(nodes_[i].id, i);  // keeps the first on duplicates
    nodes_[i].round = -1;
    for (std::size_t c = 0; c < nodes_[i].children.size(); ++c) {
      nodes_[i].children[c].action.index = static_cast<int>(c);
    }
  }
  child_index_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (const Edge& e : nodes_[i].children) {
      child_index_[i].push_back(index_of(e.to));
    }
  }
  root_index_ = index_of(root_);
  if (root_index_ == kNoNode) return;

  // Breadth-first round derivation; the visited set makes this safe on
  // malformed (cyclic) input.
  std::deque<std::size_t> queue = {root_index_};
  nodes_[root_index_].round = 0;
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const GameNode& parent = nodes_[at];
    for (std::size_t child : child_index_[at]) {
      if (child == kNoNode || nodes_[child].round >= 0) continue;
      const bool boundary = parent.player() == PlayerId::kAttacker &&
                            nodes_[child].player() == PlayerId::kDefender;
      nodes_[child].round = parent.round + (boundary ? 1 : 0);
      queue.push_back(child);
    }
  }
}

std::size_t GameTree::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? kNoNode : it->second;
}

std::vector<Violation> validate_tree(const GameTree& tree) {
  std::vector<Violation> out;
  const std::size_t n = tree.size();
  if (tree.root_index() == GameTree::kNoNode) {
    out.push_back({ViolationKind::kMissingRoot, tree.root_id(),
                   "root '" + tree.root_id() + "' is not a node"});
  }

  std::set<std::string> seen;
  for (const GameNode& node : tree.nodes()) {
    if (!seen.insert(node.id).second) {
      out.push_back({ViolationKind::kDuplicateNodeId, node.id,
                     "duplicate node id '" + node.id + "'"});
    }
  }

  std::vector<int> parents(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const GameNode& node = tree.node(i);
    if (node.is_terminal() && !node.children.empty()) {
      out.push_back({ViolationKind::kTerminalWithChildren, node.id,
                     "terminal node '" + node.id + "' has children"});
    }
    if (!node.is_terminal() && node.children.empty()) {
      out.push_back({ViolationKind::kInternalWithoutChildren, node.id,
                     "internal node without children: '" + node.id + "'"});
    }
    std::set<std::string> labels;
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      const Edge& e = node.children[c];
      if (!labels.insert(e.action.label).second) {
        out.push_back({ViolationKind::kDuplicateSiblingLabel, node.id,
                       "duplicate sibling label '" + e.action.label +
                           "' at node '" + node.id + "'"});
      }
      const std::size_t child = tree.child_indices(i)[c];
      if (child == GameTree::kNoNode) {
        out.push_back({ViolationKind::kDanglingEdge, node.id,
                       "edge '" + e.action.label + "' from '" + node.id +
                           "' points to unknown node '" + e.to + "'"});
      } else {
        ++parents[child];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (parents[i] > 1) {
      out.push_back({ViolationKind::kMultipleParents, tree.node(i).id,
                     "multiple parents: node '" + tree.node(i).id + "' has " +
                         std::to_string(parents[i])});
    }
  }

  if (tree.root_index() == GameTree::kNoNode) return out;

  // Iterative DFS with three colors; a grey target is a back edge.
  enum Color : unsigned char { kWhite, kGrey, kBlack };
  std::vector<Color> color(n, kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(tree.root_index(), 0);
  color[tree.root_index()] = kGrey;
  while (!stack.empty()) {
    auto& [at, next] = stack.back();
    const auto kids = tree.child_indices(at);
    if (next == kids.size()) {
      color[at] = kBlack;
      stack.pop_back();
      continue;
    }
    const std::size_t child = kids[next++];
    if (child == GameTree::kNoNode) continue;
    if (color[child] == kGrey) {
      out.push_back({ViolationKind::kCycle, tree.node(child).id,
                     "cycle through node '" + tree.node(child).id + "'"});
    } else if (color[child] == kWhite) {
      color[child] = kGrey;
      stack.emplace_back(child, 0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (color[i] == kWhite) {
      out.push_back({ViolationKind::kOrphan, tree.node(i).id,
                     "node '" + tree.node(i).id +
                         "' is not reachable from the root"});
    }
  }
  return out;
}

void require_valid(const GameTree& tree) {
  const std::vector<Violation> v = validate_tree(tree);
  if (v.empty()) return;
  std::vector<std::string> messages;
  messages.reserve(v.size());
  for (const Violation& x : v) messages.push_back(x.message);
  throw ValidationError(std::move(messages));
}

std::size_t node_at(const GameTree& tree, const History& h) {
  std::size_t at = tree.root_index();
  if (at == GameTree::kNoNode) {
    throw ValidationError({"root '" + tree.root_id() + "' is not a node"});
  }
  for (std::size_t depth = 0; depth < h.size(); ++depth) {
    const GameNode& node = tree.node(at);
    auto it = std::find_if(
        node.children.begin(), node.children.end(),
        [&](const Edge& e) { return e.action.label == h[depth]; });
    if (it == node.children.end()) throw UnknownActionError(h[depth], depth);
    const std::size_t next =
        tree.child_indices(at)[it - node.children.begin()];
    if (next == GameTree::kNoNode) throw UnknownActionError(h[depth], depth);
    at = next;
  }
  return at;
}

Outcome outcome_of(const GameTree& tree, const History& h) {
  const GameNode& node = tree.node(node_at(tree, h));
  if (auto o = node.outcome()) return *o;
  throw NonTerminalHistoryError("history of length " +
                                std::to_string(h.size()) +
                                " ends at decision node '" + node.id + "'");
}

History history_to(const GameTree& tree, std::size_t index) {
  // Parent lookup by scanning; called rarely (tests, diagnostics).
  std::vector<std::size_t> parent(tree.size(), GameTree::kNoNode);
  std::vector<std::string> via(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto kids = tree.child_indices(i);
    for (std::size_t c = 0; c < kids.size(); ++c) {
      if (kids[c] == GameTree::kNoNode) continue;
      parent[kids[c]] = i;
      via[kids[c]] = tree.node(i).children[c].action.label;
    }
  }
  History h;
  std::size_t at = index;
  while (at != tree.root_index() && at != GameTree::kNoNode &&
         h.size() <= tree.size()) {
    h.push_back(via[at]);
    at = parent[at];
  }
  std::reverse(h.begin(), h.end());
  return h;
}

}  // namespace stackguard
