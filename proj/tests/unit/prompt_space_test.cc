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
#include <random>

#include "stackguard/errors.h"
#include "stackguard/prompt_space.h"
#include "stackguard/rng.h"
#include "stackguard/scenario.h"

namespace stackguard {
namespace {

Prompt at(double x, double y) { return Prompt{{x, y}, std::nullopt}; }

TEST(RngTest, MatchesReferenceEngine) {
  std::mt19937_64 ref(7);
  Rng rng(7);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(rng.uniform01(), static_cast<double>(ref() >> 11) / 9007199254740992.0);
  }
}

TEST(RngTest, UniformIndexInRange) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.uniform_index(3), 3u);
  EXPECT_THROW(rng.uniform_index(0), std::invalid_argument);
}

TEST(RngTest, DerivedStreamsDiffer) {
  EXPECT_NE(Rng::derive_seed(1, 0), Rng::derive_seed(1, 1));
  EXPECT_EQ(Rng::derive_seed(9, 1), Rng::derive_seed(9, 1));
}

TEST(DistanceTest, Examples) {
  EXPECT_EQ(distance(at(0, 0), at(0, 0)), 0.0);
  EXPECT_NEAR(distance(at(0, 0), at(0.6, 0.8)), 1.0, 1e-12);
  EXPECT_NEAR(distance(at(0.1, 0.1), at(0.9, 0.9)), std::sqrt(2 * 0.64), 1e-12);
  EXPECT_NEAR(distance(at(0.1, 0.1), at(0.9, 0.9)), 1.131370849898476, 1e-12);
}

TEST(DistanceTest, DimensionMismatch) {
  EXPECT_THROW(distance(at(0, 0), Prompt{{0.0}, std::nullopt}), DimensionMismatchError);
}

TEST(SampleTest, ReproducibleUnderSeed) {
  Rng a(7);
  Rng b(7);
  const Prompt p = sample(a, 2);
  EXPECT_EQ(p.coords, sample(b, 2).coords);
  std::mt19937_64 ref(7);
  const double x = static_cast<double>(ref() >> 11) / 9007199254740992.0;
  const double y = static_cast<double>(ref() >> 11) / 9007199254740992.0;
  EXPECT_EQ(p.coords, (std::vector<double>{x, y}));
  EXPECT_TRUE(p.in_unit_box());
}

TEST(SampleTest, MeanNearHalf) {
  Rng rng(2026);
  double sx = 0, sy = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const Prompt p = sample(rng, 2);
    sx += p.coords[0];
    sy += p.coords[1];
  }
  EXPECT_NEAR(sx / n, 0.5, 0.02);
  EXPECT_NEAR(sy / n, 0.5, 0.02);
}

TEST(ExtendTest, Examples) {
  const Prompt a = extend(at(0, 0), at(1, 0), 0.2);
  EXPECT_NEAR(a.coords[0], 0.2, 1e-12);
  EXPECT_NEAR(a.coords[1], 0.0, 1e-12);
  EXPECT_EQ(extend(at(0.5, 0.5), at(0.5, 0.55), 0.2).coords,
            (std::vector<double>{0.5, 0.55}));
  const Prompt c = extend(at(0, 0), at(1, 1), 0.2);
  EXPECT_NEAR(c.coords[0], 0.2 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.coords[1], 0.141421356237310, 1e-12);
}

TEST(ExtendTest, StepNeverExceedsEta) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Prompt a = sample(rng, 3);
    const Prompt b = sample(rng, 3);
    const Prompt c = extend(a, b, 0.07);
    EXPECT_LE(distance(a, c), 0.07 + 1e-9);
    EXPECT_TRUE(c.in_unit_box());
  }
}

TEST(ClassifyTest, CanonicalRegions) {
  auto oracle = canonical_2d().make_oracle();
  EXPECT_EQ(classify(*oracle, at(0.9, 0.9), false), Verdict::kJailbreak);
  EXPECT_EQ(classify(*oracle, at(0.1, 0.1), false), Verdict::kSafe);
  EXPECT_EQ(classify(*oracle, at(0.5, 0.7), false), Verdict::kRedirect);
  EXPECT_EQ(oracle->query_count(), 3u);
  EXPECT_EQ(oracle->simulated_query_count(), 0u);
}

TEST(ClassifyTest, BlockGuardOverridesJailbreak) {
  auto oracle = canonical_2d().make_oracle();
  oracle->mutable_guards().push_back({0, {0.85, 0.85}, 0.1, GuardPolicy::kBlock, 1, 0});
  EXPECT_EQ(classify(*oracle, at(0.9, 0.9), true), Verdict::kRefuse);
  EXPECT_EQ(oracle->simulated_query_count(), 1u);
  oracle->mutable_guards()[0].policy = GuardPolicy::kRedirect;
  EXPECT_EQ(classify(*oracle, at(0.9, 0.9), false), Verdict::kRedirect);
  // Outside the guard the regions decide again.
  EXPECT_EQ(classify(*oracle, at(0.1, 0.1), false), Verdict::kSafe);
}

TEST(ClassifyTest, NearestGuardIntercepts) {
  auto oracle = canonical_2d().make_oracle();
  oracle->mutable_guards().push_back({0, {0.5, 0.5}, 0.3, GuardPolicy::kBlock, 1, 0});
  oracle->mutable_guards().push_back({1, {0.6, 0.5}, 0.3, GuardPolicy::kRedirect, 1, 0});
  const std::vector<double> p = {0.62, 0.5};
  ASSERT_NE(oracle->intercepting_guard(p), nullptr);
  EXPECT_EQ(oracle->intercepting_guard(p)->id, 1);
  EXPECT_EQ(oracle->intercepting_guard(std::vector<double>{0.53, 0.5})->id, 0);
  EXPECT_EQ(oracle->intercepting_guard(std::vector<double>{0.1, 0.1}), nullptr);

  auto tie = canonical_2d().make_oracle();
  tie->mutable_guards().push_back({0, {0.25, 0.5}, 0.5, GuardPolicy::kBlock, 1, 0});
  tie->mutable_guards().push_back({1, {0.75, 0.5}, 0.5, GuardPolicy::kRedirect, 1, 0});
  EXPECT_EQ(tie->intercepting_guard(std::vector<double>{0.5, 0.5})->id, 0);
}

TEST(ClassifyTest, PriorityResolvesOverlap) {
  SyntheticOracle o(2, {{{0.5, 0.5}, 0.2, Verdict::kRedirect, 0},
                        {{0.5, 0.5}, 0.1, Verdict::kJailbreak, 1}});
  EXPECT_EQ(o.region_verdict(std::vector<double>{0.5, 0.5}), Verdict::kJailbreak);
  EXPECT_EQ(o.region_verdict(std::vector<double>{0.5, 0.65}), Verdict::kRedirect);
  SyntheticOracle tie(2, {{{0.5, 0.5}, 0.2, Verdict::kRedirect, 0},
                          {{0.5, 0.5}, 0.2, Verdict::kJailbreak, 0}});
  EXPECT_EQ(tie.region_verdict(std::vector<double>{0.5, 0.5}), Verdict::kRedirect);
}

TEST(ClassifyTest, PureFunctionOfInputs) {
  auto a = canonical_2d().make_oracle();
  auto b = canonical_2d().make_oracle();
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const Prompt p = sample(rng, 2);
    EXPECT_EQ(classify(*a, p, false), classify(*b, p, true));
  }
}

TEST(ClassifyTest, WrongDimension) {
  auto oracle = canonical_2d().make_oracle();
  EXPECT_THROW(classify(*oracle, Prompt{{0.1, 0.1, 0.1}, std::nullopt}, false),
               DimensionMismatchError);
}

TEST(VerdictKeyTest, RoundTrip) {
  for (Verdict v : {Verdict::kSafe, Verdict::kRedirect, Verdict::kJailbreak, Verdict::kRefuse}) {
    EXPECT_EQ(verdict_from_key(verdict_key(v)), v);
  }
  EXPECT_FALSE(verdict_from_key("maybe"));
}

}  // namespace
}  // namespace stackguard
