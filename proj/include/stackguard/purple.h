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

// Anticipatory defender. Grows the same random tree as the attacker, but
// after every accepted step it simulates short attacker continuations from
// the new prompt and fences the prompt off with a guard region as soon as a
// simulated continuation reaches a jailbreak. Realized jailbreaks are
// fenced off as well. A guard deployed next to an existing one grows that
// guard instead of adding a new one.

#ifndef STACKGUARD_PURPLE_H_
#define STACKGUARD_PURPLE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"
#include "stackguard/event_log.h"
#include "stackguard/game_core.h"
#include "stackguard/prompt_space.h"
#include "stackguard/rng.h"
#include "stackguard/rrt.h"

namespace stackguard {

struct PurpleConfig {
  int budget = 300;
  int horizon = 6;
  int rollouts = 3;
  double eta = 0.05;
  double guard_radius = 0.05;  // initial radius of a new guard
  GuardPolicy policy = GuardPolicy::kBlock;
  double gamma = 1.5;          // radius growth on adjacent redeployment
  double rho_max = 0.25;
  double adjacency = 2.0;      // in units of the existing guard's radius
  std::uint64_t seed = 0;

  // Every violated bound, empty when valid.
  std::vector<std::string> violations() const;
  void validate() const;  // throws ValidationError

  friend bool operator==(const PurpleConfig&, const PurpleConfig&) = default;
};

// Sub-stream ids derived from the run seed. The main stream is the seed
// itself, so red and purple runs with the same seed draw the same samples
// until their trees diverge.
inline constexpr std::uint64_t kRolloutStream = 1;

enum class DefenseTrigger { kRealizedJailbreak, kRolloutHit };
std::string_view trigger_key(DefenseTrigger t);

struct DefenseEvent {
  int iteration = 0;
  DefenseTrigger trigger = DefenseTrigger::kRealizedJailbreak;
  GuardRegion guard;  // state right after the deployment
  Prompt prompt;      // p_new that triggered it
  bool created = false;
};

struct RunMetrics {
  int realized_jailbreaks = 0;
  int rollout_detected_jailbreaks = 0;
  int guards_deployed = 0;
  int nodes = 0;
  int discarded = 0;
  int oracle_queries_main = 0;
  int oracle_queries_rollout = 0;

  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

nlohmann::ordered_json metrics_to_json(const RunMetrics& m);
RunMetrics metrics_from_json(const nlohmann::json& j);

struct PurpleRunResult {
  RrtTree tree;
  std::vector<DefenseEvent> defenses;
  RunMetrics metrics;
};

struct SimulatedQuery {
  Prompt prompt;
  Verdict verdict = Verdict::kSafe;
  int rollout = 0;
  int step = 0;
};

// k rollouts of up to `horizon` chained extends toward fresh samples, each
// classified as a simulated query. A rollout ends early at its first
// jailbreak. Rollout-major, step-minor order.
std::vector<SimulatedQuery> simulate_red_expansion(const Prompt& p,
                                                   int horizon, int rollouts,
                                                   Oracle& oracle, Rng& rng,
                                                   double eta);

// Grows the nearest adjacent guard (centre within adjacency * radius of
// `center`) by gamma, capped at rho_max, or appends a new guard. Returns
// the guard's new state; trigger_count == 1 means it was just created.
GuardRegion deploy_defense(Oracle& oracle, const Prompt& center,
                           const PurpleConfig& cfg, int iteration);

PurpleRunResult run_purple(const Prompt& p0, const PurpleConfig& cfg,
                           Oracle& oracle, EventLog* log = nullptr);

// Metrics of an undefended run of `budget` iterations.
RunMetrics red_metrics(const RrtTree& tree, int budget);

// Post-hoc game over an exploration tree. Every tree node with children
// becomes a defender node {allow -> attacker node, block -> Blocked}; the
// attacker node offers one action per child ("n<id>") plus "stop". Leaves
// and "stop" resolve by the node's own verdict (Jailbreak -> Jailbreak,
// otherwise SafeInteraction). Throws EmptyTreeError.
GameTree induce_game(const RrtTree& tree,
                     const UtilityTable& utilities = UtilityTable());

}  // namespace stackguard

#endif  // STACKGUARD_PURPLE_H_
