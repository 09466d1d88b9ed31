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

#include <cmath>

#include "stackguard/errors.h"
#include "stackguard/rrt.h"
#include "stackguard/scenario.h"

namespace stackguard {
namespace {

Prompt at(double x, double y) { return Prompt{{x, y}, std::nullopt}; }

class ConstantOracle : public Oracle {
 public:
  ConstantOracle(std::size_t d, Verdict v) : Oracle(d), v_(v) {}

 protected:
  Verdict base_verdict(const Prompt&) override { return v_; }

 private:
  Verdict v_;
};

TEST(RrtTreeTest, InsertTracksParentAndDepth) {
  RrtTree t(at(0, 0), Verdict::kSafe);
  const int a = t.insert(at(0.1, 0), 0, Verdict::kSafe, 1);
  const int b = t.insert(at(0.2, 0), a, Verdict::kJailbreak, 2);
  EXPECT_EQ(t.node(b).parent, a);
  EXPECT_EQ(t.node(b).depth, 2);
  EXPECT_EQ(t.children_of(0), std::vector<int>{a});
  EXPECT_EQ(t.count_verdict(Verdict::kJailbreak), 1);
  EXPECT_THROW(t.insert(at(0.3, 0), 0, Verdict::kRefuse, 3), Error);
  EXPECT_THROW(t.insert(at(0.3, 0), 7, Verdict::kSafe, 3), Error);
}

TEST(NearestTest, Examples) {
  RrtTree single(at(0, 0), Verdict::kSafe);
  EXPECT_EQ(nearest(single, at(1, 1)), 0);
  RrtTree two(at(0, 0), Verdict::kSafe);
  two.insert(at(1, 0), 0, Verdict::kSafe, 1);
  EXPECT_EQ(nearest(two, at(0.9, 0.1)), 1);
  EXPECT_EQ(nearest(two, at(0.5, 0.3)), 0);  // equidistant: lower id
}

TEST(NearestTest, EmptyTree) {
  EXPECT_THROW(nearest(RrtTree(), at(0, 0)), EmptyTreeError);
}

TEST(GrowOneTest, ReproducibleAndLeavesTreeAlone) {
  auto o1 = canonical_2d().make_oracle();
  auto o2 = canonical_2d().make_oracle();
  RrtTree t(at(0.1, 0.1), Verdict::kSafe);
  Rng r1(3);
  Rng r2(3);
  const GrowthEvent a = grow_one(t, *o1, r1, 0.05, 1);
  const GrowthEvent b = grow_one(t, *o2, r2, 0.05, 1);
  EXPECT_EQ(a.p_rand.coords, b.p_rand.coords);
  EXPECT_EQ(a.p_new.coords, b.p_new.coords);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(o1->query_count(), 1u);
}

TEST(GrowOneTest, HugeStepReachesSample) {
  auto oracle = canonical_2d().make_oracle();
  RrtTree t(at(0.1, 0.1), Verdict::kSafe);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const GrowthEvent e = grow_one(t, *oracle, rng, 2.0, i);
    EXPECT_EQ(e.p_new.coords, e.p_rand.coords);
  }
}

TEST(RedExploreTest, RefusalsInsertNothing) {
  // Root classification comes first; a refusing oracle rejects the root.
  ConstantOracle refuse(2, Verdict::kRefuse);
  Rng rng(1);
  EXPECT_THROW(red_explore(at(0.1, 0.1), 5, refuse, rng, 0.05), Error);

  auto oracle = canonical_2d().make_oracle();
  RrtTree t = start_tree(at(0.1, 0.1), *oracle, nullptr);
  oracle->mutable_guards().push_back({0, {0.5, 0.5}, 2.0, GuardPolicy::kBlock, 1, 0});
  const GrowthEvent e = grow_one(t, *oracle, rng, 0.05, 1);
  EXPECT_EQ(e.verdict, Verdict::kRefuse);
  EXPECT_EQ(t.size(), 1u);
}

TEST(RedExploreTest, ZeroBudget) {
  auto oracle = canonical_2d().make_oracle();
  Rng rng(1);
  const RrtTree t = red_explore(at(0.1, 0.1), 0, *oracle, rng, 0.05);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_FALSE(t.node(0).parent);
}

TEST(RedExploreTest, CanonicalSeedElevenFindsJailbreak) {
  const Scenario s = canonical_2d();
  auto oracle = s.make_oracle();
  Rng rng(11);
  const RrtTree t = red_explore(s.p0, 300, *oracle, rng, s.run.eta);
  EXPECT_GE(t.count_verdict(Verdict::kJailbreak), 1);
  EXPECT_LE(t.size(), 301u);
  EXPECT_EQ(oracle->query_count(), 301u);  // root plus one per iteration
}

TEST(RedExploreTest, JailbreakRootRejected) {
  auto oracle = canonical_2d().make_oracle();
  Rng rng(1);
  EXPECT_THROW(red_explore(at(0.9, 0.9), 1, *oracle, rng, 0.05), Error);
}

TEST(RedExploreTest, EventLogReplaysTree) {
  const Scenario s = canonical_2d();
  auto oracle = s.make_oracle();
  Rng rng(4);
  EventLog log;
  const RrtTree t = red_explore(s.p0, 60, *oracle, rng, s.run.eta, &log);
  // Replay insert events: each parent must already exist when a node arrives.
  std::size_t inserted = 0;
  for (const std::string& line : log.lines()) {
    const auto j = nlohmann::json::parse(line);
    if (j.at("event") != "insert") continue;
    const int node = j.at("node");
    EXPECT_EQ(node, static_cast<int>(inserted));
    if (!j.at("parent").is_null()) {
      EXPECT_LT(j.at("parent").get<int>(), node);
    }
    EXPECT_EQ(j.at("prompt").get<std::vector<double>>(), t.node(node).prompt.coords);
    ++inserted;
  }
  EXPECT_EQ(inserted, t.size());
}

TEST(TreeJsonTest, Fields) {
  RrtTree t(at(0.1, 0.2), Verdict::kRedirect);
  t.insert(at(0.15, 0.2), 0, Verdict::kSafe, 1);
  const nlohmann::json j = tree_to_json(t);
  EXPECT_TRUE(j.at("nodes")[0].at("parent").is_null());
  EXPECT_EQ(j.at("nodes")[0].at("verdict"), "redirect");
  EXPECT_EQ(j.at("nodes")[1].at("parent"), 0);
  EXPECT_EQ(j.at("nodes")[1].at("depth"), 1);
}

}  // namespace
}  // namespace stackguard
