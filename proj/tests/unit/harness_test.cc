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

#include <gtest/gtest.h>

#include <filesystem>

#include "stackguard/errors.h"
#include "stackguard/harness.h"
#include "stackguard/json_util.h"
#include "stackguard/scenario.h"

namespace stackguard {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() /
                     ("stackguard_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a64_hex("foobar"), "85944171f73967e8");
}

TEST(SeedListTest, Forms) {
  EXPECT_EQ(parse_seed_list("1..4"), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(parse_seed_list("7,3,9"), (std::vector<std::uint64_t>{7, 3, 9}));
  EXPECT_EQ(parse_seed_list("5"), (std::vector<std::uint64_t>{5}));
  EXPECT_THROW(parse_seed_list("4..1"), ParseError);
  EXPECT_THROW(parse_seed_list("1,,2"), ParseError);
  EXPECT_THROW(parse_seed_list("x"), ParseError);
  EXPECT_THROW(parse_seed_list(""), ParseError);
}

TEST(EventLogTest, KeyOrderAndContext) {
  EventLog log({{"seed", 3}, {"arm", "red"}});
  log.emit(2, "insert", {{"node", 1}});
  EXPECT_EQ(log.text(), R"({"iter":2,"event":"insert","seed":3,"arm":"red","node":1})" "\n");
  EXPECT_EQ(EventLog().text(), "");
}

TEST(ExploreTest, RedArmAccounting) {
  PurpleConfig cfg = canonical_2d().run;
  cfg.budget = 80;
  cfg.seed = 2;
  const ExploreOutput out = run_explore(canonical_2d(), Arm::kRed, cfg);
  EXPECT_EQ(out.metrics.nodes - 1 + out.metrics.discarded, 80);
  EXPECT_TRUE(out.guards.empty());
  EXPECT_EQ(metrics_from_events(out.events.text()), out.metrics);
}

TEST(ExploreTest, PurpleEventsAgreeWithMetrics) {
  PurpleConfig cfg = canonical_2d().run;
  cfg.seed = 11;
  const ExploreOutput out = run_explore(canonical_2d(), Arm::kPurple, cfg);
  EXPECT_EQ(metrics_from_events(out.events.text()), out.metrics);
  EXPECT_EQ(out.metrics.oracle_queries_main, cfg.budget);
}

TEST(ExploreTest, ArtifactsVerify) {
  const fs::path dir = scratch("explore");
  PurpleConfig cfg = canonical_2d().run;
  cfg.budget = 120;
  cfg.seed = 4;
  const ExploreOutput out = run_explore(canonical_2d(), Arm::kPurple, cfg);
  write_explore_artifacts(canonical_2d(), out, dir);
  for (const char* f : {"scenario.json", "events.jsonl", "tree.json", "tree.dot", "summary.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  EXPECT_NO_THROW(verify_run_dir(dir));
  const nlohmann::json summary = read_json_file(dir / "summary.json");
  EXPECT_EQ(summary.at("rng"), "sg-mt64-v1");
  EXPECT_EQ(summary.at("events_fnv1a64"), fnv1a64_hex(read_text_file(dir / "events.jsonl")));

  // Tamper with the summary: verification must notice.
  nlohmann::json bad = summary;
  bad["metrics"]["nodes"] = summary["metrics"]["nodes"].get<int>() + 1;
  write_text_file(dir / "summary.json", bad.dump(2));
  EXPECT_THROW(verify_run_dir(dir), ValidationError);
  fs::remove_all(dir);
}

TEST(ExploreTest, InvalidConfigAndDimension) {
  PurpleConfig cfg;
  cfg.eta = -1;
  EXPECT_THROW(run_explore(canonical_2d(), Arm::kRed, cfg), ValidationError);
  SyntheticOracle three_d(3, {});
  EXPECT_THROW(run_explore(canonical_2d(), Arm::kRed, PurpleConfig(), three_d),
               DimensionMismatchError);
}

TEST(CompareTest, EmptyRuns) {
  PurpleConfig cfg = canonical_2d().run;
  cfg.budget = 0;
  const std::vector<std::uint64_t> seeds = {3};
  const CompareReport r = run_compare(canonical_2d(), seeds, cfg);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].red.realized_jailbreaks, 0);
  EXPECT_EQ(r.rows[0].purple.realized_jailbreaks, 0);
  EXPECT_EQ(r.rows[0].purple.guards_deployed, 0);
}

TEST(CompareTest, ThreadCountDoesNotChangeOutput) {
  PurpleConfig cfg = canonical_2d().run;
  cfg.budget = 60;
  const std::vector<std::uint64_t> seeds = {5, 1, 3, 1};
  const auto one = report_to_json(run_compare(canonical_2d(), seeds, cfg, 1));
  const auto many = report_to_json(run_compare(canonical_2d(), seeds, cfg, 4));
  EXPECT_EQ(one.dump(), many.dump());
  EXPECT_EQ(one.at("rows").size(), 3u);  // sorted, de-duplicated
  EXPECT_EQ(one.at("rows")[0].at("seed"), 1);
}

TEST(CompareTest, MatchesStandaloneExplore) {
  PurpleConfig cfg = canonical_2d().run;
  cfg.budget = 50;
  const std::vector<std::uint64_t> seeds = {7};
  const CompareReport r = run_compare(canonical_2d(), seeds, cfg, 1);
  cfg.seed = 7;
  EXPECT_EQ(r.rows[0].red, run_explore(canonical_2d(), Arm::kRed, cfg).metrics);
  EXPECT_EQ(r.rows[0].purple, run_explore(canonical_2d(), Arm::kPurple, cfg).metrics);
}

}  // namespace
}  // namespace stackguard
