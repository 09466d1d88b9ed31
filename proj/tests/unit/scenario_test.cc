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

#include "stackguard/errors.h"
#include "stackguard/scenario.h"

namespace stackguard {
namespace {

nlohmann::json minimal() {
  return nlohmann::json::parse(R"({
    "version": 1, "name": "tiny",
    "space": {"dim": 2, "regions": [
      {"center": [0.9, 0.9], "radius": 0.08, "verdict": "jailbreak"}]},
    "p0": [0.1, 0.1]})");
}

TEST(ScenarioTest, BuiltinCanonical) {
  const Scenario s = load_scenario("builtin:canonical-2d");
  EXPECT_EQ(s.dim, 2u);
  ASSERT_EQ(s.regions.size(), 2u);
  EXPECT_EQ(s.regions[0].center, (std::vector<double>{0.9, 0.9}));
  EXPECT_EQ(s.regions[0].radius, 0.08);
  EXPECT_EQ(s.regions[0].verdict, Verdict::kJailbreak);
  EXPECT_EQ(s.regions[1].center, (std::vector<double>{0.5, 0.7}));
  EXPECT_EQ(s.regions[1].radius, 0.1);
  EXPECT_EQ(s.regions[1].verdict, Verdict::kRedirect);
  EXPECT_EQ(s.p0.coords, (std::vector<double>{0.1, 0.1}));
  EXPECT_TRUE(s.violations().empty());
}

TEST(ScenarioTest, CommittedFileMatchesBuiltin) {
  EXPECT_EQ(load_scenario(STACKGUARD_SOURCE_DIR "/scenarios/canonical-2d.json"),
            canonical_2d());
}

TEST(ScenarioTest, DefaultsFilled) {
  const Scenario s = scenario_from_json(minimal());
  EXPECT_EQ(s.run, PurpleConfig());
  EXPECT_EQ(s.utilities, UtilityTable());
  EXPECT_EQ(s.regions[0].priority, 0);
}

TEST(ScenarioTest, RoundTrip) {
  const Scenario s = canonical_2d();
  EXPECT_EQ(scenario_from_json(nlohmann::json::parse(scenario_to_json(s).dump())), s);
}

TEST(ScenarioTest, P0InsideJailbreakBall) {
  auto j = minimal();
  j["p0"] = {0.88, 0.9};
  try {
    scenario_from_json(j);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("p0 lies inside jailbreak region"),
              std::string::npos);
  }
}

TEST(ScenarioTest, ValidationListsEveryBound) {
  auto j = minimal();
  j["p0"] = {1.5, 0.1};
  j["run"] = {{"budget", -3}, {"guard", {{"gamma", 0.2}}}};
  try {
    scenario_from_json(j);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 3u);
  }
}

TEST(ScenarioTest, ZeroDimensionRejected) {
  auto j = minimal();
  j["space"]["dim"] = 0;
  EXPECT_THROW(scenario_from_json(j), ValidationError);
}

TEST(ScenarioTest, ParseErrors) {
  auto j = minimal();
  j["space"]["regions"][0]["verdict"] = "refuse";
  EXPECT_THROW(scenario_from_json(j), ParseError);
  j = minimal();
  j["space"]["regions"][0]["shape"] = "box";
  EXPECT_THROW(scenario_from_json(j), ParseError);
  j = minimal();
  j["run"] = {{"guard", {{"policy", "sanitize"}}}};
  EXPECT_THROW(scenario_from_json(j), ParseError);
  j = minimal();
  j.erase("p0");
  EXPECT_THROW(scenario_from_json(j), ParseError);
  EXPECT_THROW(load_scenario("builtin:nowhere"), ParseError);
}

}  // namespace
}  // namespace stackguard
