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

// Runs, comparisons and the on-disk artifacts they produce.
//
// An explore run directory holds:
//   scenario.json  resolved scenario (CLI overrides applied)
//   events.jsonl   one JSON object per event
//   tree.json      exploration tree (+ guards for purple runs)
//   tree.dot       Graphviz rendering of the tree
//   summary.json   counters; must agree with events.jsonl

#ifndef STACKGUARD_HARNESS_H_
#define STACKGUARD_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"
#include "stackguard/event_log.h"
#include "stackguard/game_core.h"
#include "stackguard/purple.h"
#include "stackguard/rrt.h"
#include "stackguard/scenario.h"

namespace stackguard {

enum class Arm { kRed, kPurple };
std::string_view arm_key(Arm a);  // "red" | "purple"

struct ExploreOutput {
  Arm arm = Arm::kRed;
  PurpleConfig config;
  RrtTree tree;
  std::vector<GuardRegion> guards;
  std::vector<DefenseEvent> defenses;
  RunMetrics metrics;
  UtilityPair induced_root;  // root values of solve_spse(induce_game(tree))
  EventLog events;
};

// Runs one arm with `cfg` (seed included) against `oracle`. `context` is
// copied into every event line.
ExploreOutput run_explore(const Scenario& scenario, Arm arm,
                          const PurpleConfig& cfg, Oracle& oracle,
                          nlohmann::ordered_json context = {});
// Same, against the scenario's own synthetic oracle.
ExploreOutput run_explore(const Scenario& scenario, Arm arm,
                          const PurpleConfig& cfg,
                          nlohmann::ordered_json context = {});

nlohmann::ordered_json summary_to_json(const ExploreOutput& out);

// Writes the run directory (created if missing).
void write_explore_artifacts(const Scenario& resolved, const ExploreOutput& out,
                             const std::filesystem::path& dir);

// Counters recomputed from an event stream: insert events (nodes),
// discard, extend (main queries), rollout_query, rollout_hit, deploy +
// guard_adapt (guards deployed), and inserts with verdict jailbreak.
RunMetrics metrics_from_events(std::string_view jsonl);

// Reloads summary.json and events.jsonl from `dir` and throws
// ValidationError if they disagree.
void verify_run_dir(const std::filesystem::path& dir);

struct CompareRow {
  std::uint64_t seed = 0;
  RunMetrics red;
  RunMetrics purple;
  UtilityPair red_root;
  UtilityPair purple_root;
};

struct CompareReport {
  std::string scenario;
  PurpleConfig config;
  std::vector<CompareRow> rows;  // ascending seed
  EventLog events;               // red then purple per seed, ascending seed
};

// Red and purple arms for every seed (sorted, de-duplicated). Seeds run on
// up to `threads` workers (0 = hardware concurrency); output does not
// depend on the thread count. Errors are re-thrown tagged with the seed.
CompareReport run_compare(const Scenario& scenario,
                          std::span<const std::uint64_t> seeds,
                          const PurpleConfig& cfg, unsigned threads = 0);

// Per-seed rows plus totals and means.
nlohmann::ordered_json report_to_json(const CompareReport& report);

// Parses "a..b" (inclusive) or a comma list "1,4,9".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

// FNV-1a 64-bit over the bytes, as 16 lowercase hex digits. Used to pin
// event logs in fixtures.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace stackguard

#endif  // STACKGUARD_HARNESS_H_
