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

#ifndef STACKGUARD_SCENARIO_H_
#define STACKGUARD_SCENARIO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"
#include "stackguard/game_core.h"
#include "stackguard/prompt_space.h"
#include "stackguard/purple.h"

namespace stackguard {

// A prompt space with its semantic regions, the root prompt, run defaults
// and the utility table used for post-hoc game analysis.
//
// Scenario file, version 1:
//
//   { "version": 1, "name": "...",
//     "space": {"dim": 2, "regions": [{"shape": "ball", "center": [..],
//               "radius": r, "verdict": "safe"|"redirect"|"jailbreak",
//               "priority": 0}]},
//     "p0": [..],
//     "run": {"budget": 300, "eta": 0.05, "horizon": 6, "rollouts": 3,
//             "guard": {"radius": 0.05, "policy": "block", "gamma": 1.5,
//                       "rho_max": 0.25, "adjacency": 2.0},
//             "seed": 0},
//     "utilities": {"jailbreak": [1,-1], "safe": [0,0], "blocked": [-1,1]} }
//
// "run", each of its fields, "priority", "shape" and "utilities" are
// optional; omitted values take the PurpleConfig / UtilityTable defaults.
struct Scenario {
  std::string name;
  std::size_t dim = 2;
  std::vector<SemanticRegion> regions;
  Prompt p0;
  PurpleConfig run;
  UtilityTable utilities;

  std::vector<std::string> violations() const;
  std::unique_ptr<SyntheticOracle> make_oracle() const;
};

bool operator==(const Scenario& a, const Scenario& b);

inline constexpr std::string_view kBuiltinPrefix = "builtin:";

// d=2; jailbreak ball (0.9,0.9) r=0.08; redirect ball (0.5,0.7) r=0.1;
// p0=(0.1,0.1); module run defaults except a calibrated initial guard
// radius of 0.08.
Scenario canonical_2d();

// Parses, fills defaults and validates. Throws ParseError or
// ValidationError (listing every violated bound).
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::ordered_json scenario_to_json(const Scenario& s);

// Accepts a file path or "builtin:canonical-2d".
Scenario load_scenario(const std::string& path_or_builtin);

}  // namespace stackguard

#endif  // STACKGUARD_SCENARIO_H_
