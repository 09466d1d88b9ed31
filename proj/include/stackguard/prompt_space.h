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

// Abstract prompt space: points of the unit box [0,1]^d under the Euclidean
// metric, uniform sampling, fixed-step extension, and an oracle that maps a
// point to a verdict. Deployed guard regions override the oracle's own
// verdict.

#ifndef STACKGUARD_PROMPT_SPACE_H_
#define STACKGUARD_PROMPT_SPACE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stackguard/rng.h"

namespace stackguard {

struct Prompt {
  std::vector<double> coords;
  std::optional<std::string> text_label;  // decorative only

  std::size_t dim() const { return coords.size(); }
  bool in_unit_box() const;
};

enum class Verdict { kSafe, kRedirect, kJailbreak, kRefuse };

std::string_view verdict_key(Verdict v);  // "safe", "redirect", ...
std::optional<Verdict> verdict_from_key(std::string_view key);

double distance(std::span<const double> a, std::span<const double> b);
inline double distance(const Prompt& a, const Prompt& b) {
  return distance(a.coords, b.coords);
}

// Consumes exactly d draws from rng.
Prompt sample(Rng& rng, std::size_t d);

// Step of at most eta from p_near toward p_rand, clamped to the unit box.
// Returns p_rand's coordinates when it is within eta.
Prompt extend(const Prompt& p_near, const Prompt& p_rand, double eta);

struct SemanticRegion {
  std::vector<double> center;  // ball
  double radius = 0.0;
  Verdict verdict = Verdict::kSafe;
  int priority = 0;

  bool contains(std::span<const double> p) const {
    return distance(center, p) <= radius;
  }
  friend bool operator==(const SemanticRegion&,
                         const SemanticRegion&) = default;
};

enum class GuardPolicy { kBlock, kRedirect };

std::string_view policy_key(GuardPolicy p);  // "block" | "redirect"
std::optional<GuardPolicy> policy_from_key(std::string_view key);

struct GuardRegion {
  int id = 0;
  std::vector<double> center;
  double radius = 0.0;
  GuardPolicy policy = GuardPolicy::kBlock;
  int trigger_count = 0;
  int created_at_iteration = 0;

  bool contains(std::span<const double> p) const {
    return distance(center, p) <= radius;
  }
};

// LLM(.) as seen by the exploration loop. classify() checks guards first;
// only prompts outside every guard reach base_verdict().
class Oracle {
 public:
  explicit Oracle(std::size_t dimension) : dimension_(dimension) {}
  virtual ~Oracle() = default;

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  // Counts every call. `simulated` marks rollout queries; it changes only
  // the counters, never the verdict.
  Verdict classify(const Prompt& p, bool simulated);

  std::size_t dimension() const { return dimension_; }
  std::size_t query_count() const { return queries_; }
  std::size_t simulated_query_count() const { return simulated_queries_; }

  const std::vector<GuardRegion>& guards() const { return guards_; }
  std::vector<GuardRegion>& mutable_guards() { return guards_; }

  // The guard that would intercept p: nearest containing center, lowest id
  // on ties.
  const GuardRegion* intercepting_guard(std::span<const double> p) const;

 protected:
  virtual Verdict base_verdict(const Prompt& p) = 0;

 private:
  std::size_t dimension_;
  std::vector<GuardRegion> guards_;
  std::size_t queries_ = 0;
  std::size_t simulated_queries_ = 0;
};

// Ball regions with priorities; Safe outside all of them.
class SyntheticOracle : public Oracle {
 public:
  SyntheticOracle(std::size_t dimension, std::vector<SemanticRegion> regions);

  const std::vector<SemanticRegion>& regions() const { return regions_; }

  // Verdict ignoring guards and counters.
  Verdict region_verdict(std::span<const double> p) const;

 protected:
  Verdict base_verdict(const Prompt& p) override {
    return region_verdict(p.coords);
  }

 private:
  std::vector<SemanticRegion> regions_;
};

inline Verdict classify(Oracle& oracle, const Prompt& p, bool simulated) {
  return oracle.classify(p, simulated);
}

}  // namespace stackguard

#endif  // STACKGUARD_PROMPT_SPACE_H_
