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

#include "stackguard/purple.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "stackguard/errors.h"

namespace stackguard {

std::vector<std::string> PurpleConfig::violations() const {
  std::vector<std::string> out;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  check(budget >= 0, "budget must be >= 0");
  check(horizon >= 0, "horizon must be >= 0");
  check(rollouts >= 0, "rollouts must be >= 0");
  check(std::isfinite(eta) && eta > 0, "eta must be > 0");
  check(std::isfinite(guard_radius) && guard_radius > 0,
        "guard radius must be > 0");
  check(std::isfinite(gamma) && gamma >= 1, "gamma must be >= 1");
  check(std::isfinite(rho_max) && rho_max >= guard_radius,
        "rho_max must be >= guard radius");
  check(std::isfinite(adjacency) && adjacency >= 0,
        "adjacency must be >= 0");
  return out;
}

void PurpleConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ValidationError(std::move(v));
}

std::string_view trigger_key(DefenseTrigger t) {
  return t == DefenseTrigger::kRealizedJailbreak ? "realized_jailbreak"
                                                 : "rollout_hit";
}

nlohmann::ordered_json metrics_to_json(const RunMetrics& m) {
  return {{"realized_jailbreaks", m.realized_jailbreaks},
          {"rollout_detected_jailbreaks", m.rollout_detected_jailbreaks},
          {"guards_deployed", m.guards_deployed},
          {"nodes", m.nodes},
          {"discarded", m.discarded},
          {"oracle_queries_main", m.oracle_queries_main},
          {"oracle_queries_rollout", m.oracle_queries_rollout}};
}

RunMetrics metrics_from_json(const nlohmann::json& j) {
  RunMetrics m;
  m.realized_jailbreaks = j.at("realized_jailbreaks").get<int>();
  m.rollout_detected_jailbreaks = j.at("rollout_detected_jailbreaks").get<int>();
  m.guards_deployed = j.at("guards_deployed").get<int>();
  m.nodes = j.at("nodes").get<int>();
  m.discarded = j.at("discarded").get<int>();
  m.oracle_queries_main = j.at("oracle_queries_main").get<int>();
  m.oracle_queries_rollout = j.at("oracle_queries_rollout").get<int>();
  return m;
}

std::vector<SimulatedQuery> simulate_red_expansion(const Prompt& p,
                                                   int horizon, int rollouts,
                                                   Oracle& oracle, Rng& rng,
                                                   double eta) {
  std::vector<SimulatedQuery> out;
  for (int r = 0; r < rollouts; ++r) {
    Prompt current{p.coords, std::nullopt};
    for (int s = 0; s < horizon; ++s) {
      const Prompt target = sample(rng, oracle.dimension());
      current = extend(current, target, eta);
      const Verdict v = oracle.classify(current, /*simulated=*/true);
      out.push_back({current, v, r, s});
      if (v == Verdict::kJailbreak) break;
    }
  }
  return out;
}

GuardRegion deploy_defense(Oracle& oracle, const Prompt& center,
                           const PurpleConfig& cfg, int iteration) {
  std::vector<GuardRegion>& guards = oracle.mutable_guards();
  GuardRegion* adjacent = nullptr;
  double adjacent_dist = 0.0;
  for (GuardRegion& g : guards) {
    const double d = distance(g.center, center.coords);
    if (d > cfg.adjacency * g.radius) continue;
    if (adjacent == nullptr || d < adjacent_dist) {
      adjacent = &g;
      adjacent_dist = d;
    }
  }
  if (adjacent != nullptr) {
    adjacent->radius = std::min(cfg.rho_max, cfg.gamma * adjacent->radius);
    ++adjacent->trigger_count;
    return *adjacent;
  }
  GuardRegion g;
  g.id = static_cast<int>(guards.size());
  g.center = center.coords;
  g.radius = cfg.guard_radius;
  g.policy = cfg.policy;
  g.trigger_count = 1;
  g.created_at_iteration = iteration;
  guards.push_back(g);
  return g;
}

namespace {

DefenseEvent defend(Oracle& oracle, const Prompt& at, const PurpleConfig& cfg,
                    int iteration, DefenseTrigger trigger, EventLog* log) {
  DefenseEvent ev;
  ev.iteration = iteration;
  ev.trigger = trigger;
  ev.guard = deploy_defense(oracle, at, cfg, iteration);
  ev.prompt = at;
  ev.created = ev.guard.trigger_count == 1;
  emit_if(log, iteration, ev.created ? "deploy" : "guard_adapt",
          {{"guard_id", ev.guard.id},
           {"trigger", trigger_key(trigger)},
           {"prompt", at.coords},
           {"center", ev.guard.center},
           {"radius", ev.guard.radius},
           {"policy", policy_key(ev.guard.policy)},
           {"trigger_count", ev.guard.trigger_count}});
  return ev;
}

}  // namespace

PurpleRunResult run_purple(const Prompt& p0, const PurpleConfig& cfg,
                           Oracle& oracle, EventLog* log) {
  cfg.validate();
  Rng main_rng(cfg.seed);
  Rng rollout_rng(Rng::derive_seed(cfg.seed, kRolloutStream));

  PurpleRunResult result;
  result.tree = start_tree(p0, oracle, log);
  RunMetrics& m = result.metrics;

  for (int i = 1; i <= cfg.budget; ++i) {
    GrowthEvent e = grow_one(result.tree, oracle, main_rng, cfg.eta, i);
    ++m.oracle_queries_main;
    log_extend(log, e);

    if (e.verdict == Verdict::kRefuse) {
      ++m.discarded;
      log_discard(log, e);
      continue;
    }
    const Prompt p_new = e.p_new;
    const int id = result.tree.insert(std::move(e.p_new), e.near, e.verdict, i);
    log_insert(log, result.tree.node(id));

    if (e.verdict == Verdict::kJailbreak) {
      ++m.realized_jailbreaks;
      result.defenses.push_back(defend(oracle, p_new, cfg, i,
                                       DefenseTrigger::kRealizedJailbreak, log));
      continue;
    }

    const std::vector<SimulatedQuery> sims = simulate_red_expansion(
        p_new, cfg.horizon, cfg.rollouts, oracle, rollout_rng, cfg.eta);
    m.oracle_queries_rollout += static_cast<int>(sims.size());
    for (const SimulatedQuery& q : sims) {
      emit_if(log, i, "rollout_query",
              {{"rollout", q.rollout},
               {"step", q.step},
               {"prompt", q.prompt.coords},
               {"verdict", verdict_key(q.verdict)},
               {"simulated", true}});
    }
    for (const SimulatedQuery& q : sims) {
      if (q.verdict != Verdict::kJailbreak) continue;
      ++m.rollout_detected_jailbreaks;
      emit_if(log, i, "rollout_hit",
              {{"rollout", q.rollout},
               {"step", q.step},
               {"prompt", q.prompt.coords},
               {"simulated", true}});
      result.defenses.push_back(
          defend(oracle, p_new, cfg, i, DefenseTrigger::kRolloutHit, log));
      break;
    }
  }
  m.nodes = static_cast<int>(result.tree.size());
  m.guards_deployed = static_cast<int>(result.defenses.size());
  return result;
}

RunMetrics red_metrics(const RrtTree& tree, int budget) {
  RunMetrics m;
  m.nodes = static_cast<int>(tree.size());
  m.realized_jailbreaks = tree.count_verdict(Verdict::kJailbreak);
  m.discarded = budget - (m.nodes - 1);
  m.oracle_queries_main = budget;
  return m;
}

GameTree induce_game(const RrtTree& tree, const UtilityTable& utilities) {
  if (tree.empty()) throw EmptyTreeError("induce_game: tree is empty");
  std::vector<std::vector<int>> children(tree.size());
  for (const RrtNode& n : tree.nodes()) {
    if (n.parent) children[*n.parent].push_back(n.id);
  }
  auto own_outcome = [&](int id) {
    return tree.node(id).verdict == Verdict::kJailbreak
               ? Outcome::kJailbreak
               : Outcome::kSafeInteraction;
  };
  auto entry_id = [&](int id) {
    return (children[id].empty() ? "t" : "d") + std::to_string(id);
  };

  std::vector<GameNode> nodes;
  for (const RrtNode& n : tree.nodes()) {
    const std::string suffix = std::to_string(n.id);
    if (children[n.id].empty()) {
      nodes.push_back({"t" + suffix, own_outcome(n.id), -1, {}});
      continue;
    }
    GameNode defender{"d" + suffix, PlayerId::kDefender, -1, {}};
    defender.children.push_back({{"allow", 0}, "a" + suffix});
    defender.children.push_back({{"block", 1}, "b" + suffix});
    GameNode attacker{"a" + suffix, PlayerId::kAttacker, -1, {}};
    for (int c : children[n.id]) {
      attacker.children.push_back(
          {{"n" + std::to_string(c), static_cast<int>(attacker.children.size())},
           entry_id(c)});
    }
    attacker.children.push_back(
        {{"stop", static_cast<int>(attacker.children.size())}, "s" + suffix});
    nodes.push_back(std::move(defender));
    nodes.push_back(std::move(attacker));
    nodes.push_back({"b" + suffix, Outcome::kBlocked, -1, {}});
    nodes.push_back({"s" + suffix, own_outcome(n.id), -1, {}});
  }
  return GameTree(entry_id(0), std::move(nodes), utilities);
}

}  // namespace stackguard
