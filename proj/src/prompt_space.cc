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

#include "stackguard/prompt_space.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "stackguard/errors.h"

namespace stackguard {

bool Prompt::in_unit_box() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](double x) { return x >= 0.0 && x <= 1.0; });
}

namespace {
constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdictKeys = {{
    {Verdict::kSafe, "safe"},
    {Verdict::kRedirect, "redirect"},
    {Verdict::kJailbreak, "jailbreak"},
    {Verdict::kRefuse, "refuse"},
}};
}  // namespace

std::string_view verdict_key(Verdict v) {
  for (const auto& [verdict, key] : kVerdictKeys) {
    if (verdict == v) return key;
  }
  return "?";
}

std::optional<Verdict> verdict_from_key(std::string_view key) {
  for (const auto& [verdict, k] : kVerdictKeys) {
    if (k == key) return verdict;
  }
  return std::nullopt;
}

std::string_view policy_key(GuardPolicy p) {
  return p == GuardPolicy::kBlock ? "block" : "redirect";
}

std::optional<GuardPolicy> policy_from_key(std::string_view key) {
  if (key == "block") return GuardPolicy::kBlock;
  if (key == "redirect") return GuardPolicy::kRedirect;
  return std::nullopt;
}

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatchError(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Prompt sample(Rng& rng, std::size_t d) {
  Prompt p;
  p.coords.resize(d);
  for (double& x : p.coords) x = rng.uniform01();
  return p;
}

Prompt extend(const Prompt& p_near, const Prompt& p_rand, double eta) {
  const double dist = distance(p_near, p_rand);
  Prompt out;
  if (dist <= eta) {
    out.coords = p_rand.coords;
    return out;
  }
  const double t = eta / dist;
  out.coords.resize(p_near.dim());
  for (std::size_t i = 0; i < p_near.dim(); ++i) {
    const double x = p_near.coords[i] + t * (p_rand.coords[i] - p_near.coords[i]);
    out.coords[i] = std::clamp(x, 0.0, 1.0);
  }
  return out;
}

const GuardRegion* Oracle::intercepting_guard(std::span<const double> p) const {
  const GuardRegion* best = nullptr;
  double best_dist = 0.0;
  for (const GuardRegion& g : guards_) {
    const double d = distance(g.center, p);
    if (d > g.radius) continue;
    if (best == nullptr || d < best_dist ||
        (d == best_dist && g.id < best->id)) {
      best = &g;
      best_dist = d;
    }
  }
  return best;
}

Verdict Oracle::classify(const Prompt& p, bool simulated) {
  if (p.dim() != dimension_) throw DimensionMismatchError(p.dim(), dimension_);
  ++queries_;
  if (simulated) ++simulated_queries_;
  if (const GuardRegion* g = intercepting_guard(p.coords)) {
    return g->policy == GuardPolicy::kBlock ? Verdict::kRefuse
                                            : Verdict::kRedirect;
  }
  return base_verdict(p);
}

SyntheticOracle::SyntheticOracle(std::size_t dimension,
                                 std::vector<SemanticRegion> regions)
    : Oracle(dimension), regions_(std::move(regions)) {
  for (const SemanticRegion& r : regions_) {
    if (r.center.size() != dimension) {
      throw DimensionMismatchError(r.center.size(), dimension);
    }
  }
}

Verdict SyntheticOracle::region_verdict(std::span<const double> p) const {
  const SemanticRegion* best = nullptr;
  for (const SemanticRegion& r : regions_) {
    // Strict comparison keeps the earliest region on equal priority.
    if (r.contains(p) && (best == nullptr || r.priority > best->priority)) {
      best = &r;
    }
  }
  return best == nullptr ? Verdict::kSafe : best->verdict;
}

}  // namespace stackguard
