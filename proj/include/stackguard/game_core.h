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

// Two-player perfect-information extensive-form game between an attacker
// (player 1) and a defender (player 2) with outcome labels at the leaves.

#ifndef STACKGUARD_GAME_CORE_H_
#define STACKGUARD_GAME_CORE_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace stackguard {

enum class PlayerId { kAttacker, kDefender };

enum class Outcome { kSafeInteraction, kJailbreak, kBlocked };

inline constexpr std::array<Outcome, 3> kAllOutcomes = {
    Outcome::kSafeInteraction, Outcome::kJailbreak, Outcome::kBlocked};

std::string_view to_string(PlayerId p);
std::string_view to_string(Outcome o);
// Wire names used in game files: "safe", "jailbreak", "blocked".
std::string_view outcome_key(Outcome o);
std::optional<Outcome> outcome_from_key(std::string_view key);

using Score = long long;

struct UtilityPair {
  Score attacker = 0;
  Score defender = 0;

  Score of(PlayerId p) const {
    return p == PlayerId::kAttacker ? attacker : defender;
  }
  friend bool operator==(const UtilityPair&, const UtilityPair&) = default;
};

// Outcome -> (u1, u2). Construction rejects any pair that does not sum to
// zero.
class UtilityTable {
 public:
  // Jailbreak (+1, -1), SafeInteraction (0, 0), Blocked (-1, +1).
  UtilityTable();
  UtilityTable(UtilityPair safe, UtilityPair jailbreak, UtilityPair blocked);

  const UtilityPair& at(Outcome o) const {
    return entries_[static_cast<std::size_t>(o)];
  }

  friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

 private:
  std::array<UtilityPair, 3> entries_;
};

Score utility_of(const UtilityTable& table, Outcome o, PlayerId p);

struct ActionLabel {
  std::string label;
  int index = 0;  // position among siblings; the tie-break order

  friend bool operator==(const ActionLabel&, const ActionLabel&) = default;
};

struct Edge {
  ActionLabel action;
  std::string to;
};

using NodeOwner = std::variant<PlayerId, Outcome>;

struct GameNode {
  std::string id;
  NodeOwner owner;
  // Derived from ownership transitions on construction: +1 on every edge
  // from an attacker node to a defender node. -1 if unreachable.
  int round = -1;
  std::vector<Edge> children;

  bool is_terminal() const { return std::holds_alternative<Outcome>(owner); }
  std::optional<PlayerId> player() const;
  std::optional<Outcome> outcome() const;
};

// Labels followed from the root.
using History = std::vector<std::string>;

// Immutable after construction. Construction never throws on structural
// problems; use validate_tree() to get a report. Nodes keep input order.
class GameTree {
 public:
  static constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

  // Child action indices are (re)assigned from list position.
  GameTree(std::string root, std::vector<GameNode> nodes,
           UtilityTable utilities = UtilityTable());

  const std::string& root_id() const { return root_; }
  std::size_t root_index() const { return root_index_; }
  const UtilityTable& utilities() const { return utilities_; }
  std::span<const GameNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  const GameNode& node(std::size_t index) const { return nodes_[index]; }
  // kNoNode when the id is unknown. The first node wins on duplicate ids.
  std::size_t index_of(std::string_view id) const;
  // Child node index for each edge of `index`, kNoNode for dangling edges.
  std::span<const std::size_t> child_indices(std::size_t index) const {
    return child_index_[index];
  }

 private:
  std::string root_;
  std::vector<GameNode> nodes_;
  UtilityTable utilities_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> child_index_;
  std::size_t root_index_ = kNoNode;
};

enum class ViolationKind {
  kMissingRoot,
  kDuplicateNodeId,
  kDanglingEdge,
  kMultipleParents,
  kCycle,
  kOrphan,
  kInternalWithoutChildren,
  kTerminalWithChildren,
  kDuplicateSiblingLabel,
};

struct Violation {
  ViolationKind kind;
  std::string node;
  std::string message;
};

// Empty iff every structural invariant holds.
std::vector<Violation> validate_tree(const GameTree& tree);
// Throws ValidationError if validate_tree() is non-empty.
void require_valid(const GameTree& tree);

// Throws UnknownActionError at the first label with no matching child.
std::size_t node_at(const GameTree& tree, const History& h);
// Throws NonTerminalHistoryError if h ends at a decision node.
Outcome outcome_of(const GameTree& tree, const History& h);

// Root-to-node label path. Only meaningful on a valid tree.
History history_to(const GameTree& tree, std::size_t index);

// node id -> chosen action at every decision node.
struct StrategyProfile {
  std::map<std::string, ActionLabel> choices;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

}  // namespace stackguard

#endif  // STACKGUARD_GAME_CORE_H_
