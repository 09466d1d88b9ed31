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

// Rapidly-exploring random tree over the prompt space, and the undefended
// attacker that grows it.

#ifndef STACKGUARD_RRT_H_
#define STACKGUARD_RRT_H_

#include <optional>
#include <span>
#include <vector>

#include "nlohmann/json.hpp"
#include "stackguard/event_log.h"
#include "stackguard/prompt_space.h"
#include "stackguard/rng.h"

namespace stackguard {

struct RrtNode {
  int id = 0;
  Prompt prompt;
  std::optional<int> parent;  // absent only for the root
  Verdict verdict = Verdict::kSafe;
  int iteration = 0;
  int depth = 0;
};

// Append-only; node ids equal insertion positions, so parent ids are always
// smaller than child ids.
class RrtTree {
 public:
  RrtTree() = default;
  RrtTree(Prompt root, Verdict root_verdict);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  std::span<const RrtNode> nodes() const { return nodes_; }
  const RrtNode& node(int id) const { return nodes_.at(id); }

  // Refuse-verdict prompts are rejected with an Error.
  int insert(Prompt p, int parent, Verdict verdict, int iteration);

  std::vector<int> children_of(int id) const;
  int count_verdict(Verdict v) const;

 private:
  std::vector<RrtNode> nodes_;
};

// Exact linear scan; lowest id wins ties. Throws EmptyTreeError.
int nearest(const RrtTree& tree, const Prompt& p);

struct GrowthEvent {
  int iteration = 0;
  Prompt p_rand;
  int near = 0;
  Prompt p_new;
  Verdict verdict = Verdict::kSafe;
};

// One Sample -> nearest -> Extend -> classify step. Leaves the tree alone.
GrowthEvent grow_one(const RrtTree& tree, Oracle& oracle, Rng& rng,
                     double eta, int iteration);

// Classifies p0 (non-simulated, outside the budget) and makes it the root.
// Throws Error unless the root verdict is Safe or Redirect.
RrtTree start_tree(const Prompt& p0, Oracle& oracle, EventLog* log);

// Undefended baseline: `budget` growth steps, inserting every non-Refuse
// p_new. No guards, no rollouts.
RrtTree red_explore(const Prompt& p0, int budget, Oracle& oracle, Rng& rng,
                    double eta, EventLog* log = nullptr);

// Event payload helpers shared by both explorers.
void log_extend(EventLog* log, const GrowthEvent& e);
void log_insert(EventLog* log, const RrtNode& n);
void log_discard(EventLog* log, const GrowthEvent& e);

nlohmann::json tree_to_json(const RrtTree& tree);

}  // namespace stackguard

#endif  // STACKGUARD_RRT_H_
