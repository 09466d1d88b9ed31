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

#include "stackguard/scenario.h"

#include <cmath>
#include <string>
#include <utility>

#include "stackguard/errors.h"
#include "stackguard/game_io.h"
#include "stackguard/json_util.h"

namespace stackguard {
namespace {

bool in_unit_box(const std::vector<double>& v) {
  for (double x : v) {
    if (!(x >= 0.0 && x <= 1.0)) return false;
  }
  return true;
}

std::vector<double> coords_from_json(const nlohmann::json& j,
                                     const std::string& path) {
  as_array(j, path);
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <typename T, typename Get>
void optional_field(const nlohmann::json& obj, std::string_view key,
                    const std::string& path, T& out, Get get) {
  auto it = obj.find(std::string(key));
  if (it != obj.end()) out = get(*it, path + "." + std::string(key));
}

}  // namespace

std::vector<std::string> Scenario::violations() const {
  std::vector<std::string> out;
  if (name.empty()) out.push_back("name must be non-empty");
  if (dim < 1) out.push_back("space.dim must be >= 1");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const SemanticRegion& r = regions[i];
    const std::string at = "space.regions[" + std::to_string(i) + "]";
    if (r.center.size() != dim) {
      out.push_back(at + ".center has dimension " +
                    std::to_string(r.center.size()) + ", expected " +
                    std::to_string(dim));
    } else if (!in_unit_box(r.center)) {
      out.push_back(at + ".center lies outside [0,1]^d");
    }
    if (!(std::isfinite(r.radius) && r.radius > 0)) {
      out.push_back(at + ".radius must be > 0");
    }
    if (r.verdict == Verdict::kRefuse) {
      out.push_back(at + ".verdict must be safe, redirect or jailbreak");
    }
  }
  if (p0.dim() != dim) {
    out.push_back("p0 has dimension " + std::to_string(p0.dim()) +
                  ", expected " + std::to_string(dim));
  } else {
    if (!in_unit_box(p0.coords)) out.push_back("p0 lies outside [0,1]^d");
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const SemanticRegion& r = regions[i];
      if (r.verdict == Verdict::kJailbreak && r.center.size() == dim &&
          r.contains(p0.coords)) {
        out.push_back("p0 lies inside jailbreak region space.regions[" +
                      std::to_string(i) + "]");
      }
    }
  }
  for (const std::string& v : run.violations()) out.push_back("run: " + v);
  return out;
}

std::unique_ptr<SyntheticOracle> Scenario::make_oracle() const {
  return std::make_unique<SyntheticOracle>(dim, regions);
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.name == b.name && a.dim == b.dim && a.regions == b.regions &&
         a.p0.coords == b.p0.coords && a.run == b.run &&
         a.utilities == b.utilities;
}

Scenario canonical_2d() {
  Scenario s;
  s.name = "canonical-2d";
  s.dim = 2;
  s.regions = {
      {{0.9, 0.9}, 0.08, Verdict::kJailbreak, 1},
      {{0.5, 0.7}, 0.1, Verdict::kRedirect, 0},
  };
  s.p0.coords = {0.1, 0.1};
  // Calibrated: with 0.05 the guard footprint is too small to stop the
  // tree from re-entering the jailbreak ball on several seeds.
  s.run.guard_radius = 0.08;
  return s;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  as_object(j, "scenario");
  const long long version =
      as_integer(require_field(j, "version", "scenario"), "scenario.version");
  if (version != 1) {
    throw ParseError("scenario.version: unsupported version " +
                     std::to_string(version));
  }
  Scenario s;
  s.name = as_string(require_field(j, "name", "scenario"), "name");

  const nlohmann::json& space =
      as_object(require_field(j, "space", "scenario"), "space");
  const long long dim = as_integer(require_field(space, "dim", "space"),
                                   "space.dim");
  if (dim < 1) throw ValidationError({"space.dim must be >= 1"});
  s.dim = static_cast<std::size_t>(dim);
  if (space.contains("regions")) {
    const nlohmann::json& regions =
        as_array(space.at("regions"), "space.regions");
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const std::string path = "space.regions[" + std::to_string(i) + "]";
      const nlohmann::json& jr = as_object(regions[i], path);
      std::string shape = "ball";
      optional_field(jr, "shape", path, shape, as_string);
      if (shape != "ball") {
        throw ParseError(path + ".shape: unsupported shape '" + shape + "'");
      }
      SemanticRegion r;
      r.center = coords_from_json(require_field(jr, "center", path),
                                  path + ".center");
      r.radius = as_number(require_field(jr, "radius", path), path + ".radius");
      const std::string verdict =
          as_string(require_field(jr, "verdict", path), path + ".verdict");
      auto v = verdict_from_key(verdict);
      if (!v || *v == Verdict::kRefuse) {
        throw ParseError(path + ".verdict: expected safe|redirect|jailbreak, "
                                "got '" + verdict + "'");
      }
      r.verdict = *v;
      long long priority = 0;
      optional_field(jr, "priority", path, priority, as_integer);
      r.priority = static_cast<int>(priority);
      s.regions.push_back(std::move(r));
    }
  }
  s.p0.coords = coords_from_json(require_field(j, "p0", "scenario"), "p0");

  if (j.contains("run")) {
    const nlohmann::json& run = as_object(j.at("run"), "run");
    PurpleConfig& c = s.run;
    auto as_int = [](const nlohmann::json& v, const std::string& p) {
      return static_cast<int>(as_integer(v, p));
    };
    optional_field(run, "budget", "run", c.budget, as_int);
    optional_field(run, "eta", "run", c.eta, as_number);
    optional_field(run, "horizon", "run", c.horizon, as_int);
    optional_field(run, "rollouts", "run", c.rollouts, as_int);
    long long seed = 0;
    optional_field(run, "seed", "run", seed, as_integer);
    if (seed < 0) throw ValidationError({"run.seed must be >= 0"});
    c.seed = static_cast<std::uint64_t>(seed);
    if (run.contains("guard")) {
      const nlohmann::json& g = as_object(run.at("guard"), "run.guard");
      optional_field(g, "radius", "run.guard", c.guard_radius, as_number);
      optional_field(g, "gamma", "run.guard", c.gamma, as_number);
      optional_field(g, "rho_max", "run.guard", c.rho_max, as_number);
      optional_field(g, "adjacency", "run.guard", c.adjacency, as_number);
      if (g.contains("policy")) {
        const std::string p = as_string(g.at("policy"), "run.guard.policy");
        auto policy = policy_from_key(p);
        if (!policy) {
          throw ParseError("run.guard.policy: expected block|redirect, got '" +
                           p + "'");
        }
        c.policy = *policy;
      }
    }
  }
  s.utilities = utilities_from_json(
      j.contains("utilities") ? j.at("utilities") : nlohmann::json());

  auto bad = s.violations();
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return s;
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json regions = nlohmann::ordered_json::array();
  for (const SemanticRegion& r : s.regions) {
    regions.push_back({{"shape", "ball"},
                       {"center", r.center},
                       {"radius", r.radius},
                       {"verdict", verdict_key(r.verdict)},
                       {"priority", r.priority}});
  }
  nlohmann::ordered_json utilities;
  for (Outcome o : {Outcome::kJailbreak, Outcome::kSafeInteraction,
                    Outcome::kBlocked}) {
    utilities[std::string(outcome_key(o))] = {s.utilities.at(o).attacker,
                                              s.utilities.at(o).defender};
  }
  const PurpleConfig& c = s.run;
  return {{"version", 1},
          {"name", s.name},
          {"space", {{"dim", s.dim}, {"regions", regions}}},
          {"p0", s.p0.coords},
          {"run",
           {{"budget", c.budget},
            {"eta", c.eta},
            {"horizon", c.horizon},
            {"rollouts", c.rollouts},
            {"guard",
             {{"radius", c.guard_radius},
              {"policy", policy_key(c.policy)},
              {"gamma", c.gamma},
              {"rho_max", c.rho_max},
              {"adjacency", c.adjacency}}},
            {"seed", c.seed}}},
          {"utilities", utilities}};
}

Scenario load_scenario(const std::string& path_or_builtin) {
  if (path_or_builtin.rfind(kBuiltinPrefix, 0) == 0) {
    const std::string name = path_or_builtin.substr(kBuiltinPrefix.size());
    if (name == "canonical-2d") return canonical_2d();
    throw ParseError("unknown built-in scenario '" + name + "'");
  }
  return scenario_from_json(read_json_file(path_or_builtin));
}

}  // namespace stackguard
