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

#include "stackguard/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>
#include <utility>

#include "stackguard/dot_export.h"
#include "stackguard/errors.h"
#include "stackguard/json_util.h"
#include "stackguard/rng.h"
#include "stackguard/spse.h"

namespace stackguard {

std::string_view arm_key(Arm a) { return a == Arm::kRed ? "red" : "purple"; }

ExploreOutput run_explore(const Scenario& scenario, Arm arm,
                          const PurpleConfig& cfg, Oracle& oracle,
                          nlohmann::ordered_json context) {
  cfg.validate();
  if (oracle.dimension() != scenario.dim) {
    throw DimensionMismatchError(oracle.dimension(), scenario.dim);
  }
  if (context.is_null()) context = nlohmann::ordered_json::object();
  ExploreOutput out;
  out.arm = arm;
  out.config = cfg;
  out.events = EventLog(std::move(context));
  if (arm == Arm::kRed) {
    Rng rng(cfg.seed);
    out.tree = red_explore(scenario.p0, cfg.budget, oracle, rng, cfg.eta,
                           &out.events);
    out.metrics = red_metrics(out.tree, cfg.budget);
  } else {
    PurpleRunResult r = run_purple(scenario.p0, cfg, oracle, &out.events);
    out.tree = std::move(r.tree);
    out.defenses = std::move(r.defenses);
    out.metrics = r.metrics;
  }
  out.guards = oracle.guards();
  const GameTree game = induce_game(out.tree, scenario.utilities);
  out.induced_root = solve_spse(game).values.at(game.root_id());
  return out;
}

ExploreOutput run_explore(const Scenario& scenario, Arm arm,
                          const PurpleConfig& cfg,
                          nlohmann::ordered_json context) {
  auto oracle = scenario.make_oracle();
  return run_explore(scenario, arm, cfg, *oracle, std::move(context));
}

nlohmann::ordered_json summary_to_json(const ExploreOutput& out) {
  return {{"mode", arm_key(out.arm)},
          {"seed", out.config.seed},
          {"rng", Rng::kAlgorithm},
          {"budget", out.config.budget},
          {"horizon", out.config.horizon},
          {"rollouts", out.config.rollouts},
          {"metrics", metrics_to_json(out.metrics)},
          {"guards", out.guards.size()},
          {"induced_root", {out.induced_root.attacker, out.induced_root.defender}},
          {"events_fnv1a64", fnv1a64_hex(out.events.text())}};
}

void write_explore_artifacts(const Scenario& resolved, const ExploreOutput& out,
                             const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error("cannot create '" + dir.string() + "': " + ec.message());
  }
  write_text_file(dir / "scenario.json", scenario_to_json(resolved).dump(2) + "\n");
  write_text_file(dir / "events.jsonl", out.events.text());

  nlohmann::json tree = tree_to_json(out.tree);
  nlohmann::json guards = nlohmann::json::array();
  for (const GuardRegion& g : out.guards) {
    guards.push_back({{"id", g.id},
                      {"center", g.center},
                      {"radius", g.radius},
                      {"policy", policy_key(g.policy)},
                      {"trigger_count", g.trigger_count},
                      {"created_at_iteration", g.created_at_iteration}});
  }
  tree["dim"] = resolved.dim;
  tree["guards"] = std::move(guards);
  write_text_file(dir / "tree.json", tree.dump(2) + "\n");
  export_dot(out.tree, dir / "tree.dot", out.defenses);
  write_text_file(dir / "summary.json", summary_to_json(out).dump(2) + "\n");
}

RunMetrics metrics_from_events(std::string_view jsonl) {
  RunMetrics m;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    const std::string_view line = jsonl.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const nlohmann::json ev =
        parse_json_text(line, "events.jsonl line " + std::to_string(line_no));
    const std::string kind = ev.value("event", "");
    if (kind == "insert") {
      ++m.nodes;
      if (ev.value("verdict", "") == "jailbreak") ++m.realized_jailbreaks;
    } else if (kind == "discard") {
      ++m.discarded;
    } else if (kind == "extend") {
      ++m.oracle_queries_main;
    } else if (kind == "rollout_query") {
      ++m.oracle_queries_rollout;
    } else if (kind == "rollout_hit") {
      ++m.rollout_detected_jailbreaks;
    } else if (kind == "deploy" || kind == "guard_adapt") {
      ++m.guards_deployed;
    }
  }
  return m;
}

void verify_run_dir(const std::filesystem::path& dir) {
  const nlohmann::json summary = read_json_file(dir / "summary.json");
  const RunMetrics recorded = metrics_from_json(summary.at("metrics"));
  const RunMetrics recomputed =
      metrics_from_events(read_text_file(dir / "events.jsonl"));
  const nlohmann::ordered_json a = metrics_to_json(recorded);
  const nlohmann::ordered_json b = metrics_to_json(recomputed);
  std::vector<std::string> bad;
  for (const auto& [key, value] : a.items()) {
    if (value != b.at(key)) {
      bad.push_back("summary." + key + " = " + value.dump() +
                    " but events.jsonl gives " + b.at(key).dump());
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

namespace {

struct SeedRun {
  CompareRow row;
  EventLog red_events;
  EventLog purple_events;
};

SeedRun run_seed(const Scenario& scenario, const PurpleConfig& base,
                 std::uint64_t seed) {
  PurpleConfig cfg = base;
  cfg.seed = seed;
  ExploreOutput red = run_explore(scenario, Arm::kRed, cfg,
                                  {{"seed", seed}, {"arm", "red"}});
  ExploreOutput purple = run_explore(scenario, Arm::kPurple, cfg,
                                     {{"seed", seed}, {"arm", "purple"}});
  SeedRun r;
  r.row = {seed, red.metrics, purple.metrics, red.induced_root,
           purple.induced_root};
  r.red_events = std::move(red.events);
  r.purple_events = std::move(purple.events);
  return r;
}

[[noreturn]] void rethrow_tagged(std::exception_ptr error, std::uint64_t seed) {
  const std::string tag = "seed " + std::to_string(seed) + ": ";
  try {
    std::rethrow_exception(error);
  } catch (const ValidationError& e) {
    std::vector<std::string> v;
    for (const std::string& s : e.violations()) v.push_back(tag + s);
    throw ValidationError(std::move(v));
  } catch (const std::exception& e) {
    throw Error(tag + e.what());
  }
}

nlohmann::ordered_json arm_json(const RunMetrics& m, const UtilityPair& root) {
  nlohmann::ordered_json j = metrics_to_json(m);
  j["induced_root"] = {root.attacker, root.defender};
  return j;
}

}  // namespace

CompareReport run_compare(const Scenario& scenario,
                          std::span<const std::uint64_t> seeds,
                          const PurpleConfig& cfg, unsigned threads) {
  if (seeds.empty()) throw ValidationError({"compare needs at least one seed"});
  cfg.validate();
  std::vector<std::uint64_t> order(seeds.begin(), seeds.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  std::vector<SeedRun> runs(order.size());
  std::vector<std::exception_ptr> errors(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      try {
        runs[i] = run_seed(scenario, cfg, order[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(order.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  CompareReport report;
  report.scenario = scenario.name;
  report.config = cfg;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (errors[i]) rethrow_tagged(errors[i], order[i]);
    report.rows.push_back(runs[i].row);
    report.events.append(runs[i].red_events);
    report.events.append(runs[i].purple_events);
  }
  return report;
}

nlohmann::ordered_json report_to_json(const CompareReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<std::uint64_t> seeds;
  long long red_jb = 0, purple_jb = 0, guards = 0, red_nodes = 0,
            purple_nodes = 0;
  bool purple_v2_ge = true;
  for (const CompareRow& r : report.rows) {
    seeds.push_back(r.seed);
    rows.push_back({{"seed", r.seed},
                    {"red", arm_json(r.red, r.red_root)},
                    {"purple", arm_json(r.purple, r.purple_root)}});
    red_jb += r.red.realized_jailbreaks;
    purple_jb += r.purple.realized_jailbreaks;
    guards += r.purple.guards_deployed;
    red_nodes += r.red.nodes;
    purple_nodes += r.purple.nodes;
    purple_v2_ge = purple_v2_ge && r.purple_root.defender >= r.red_root.defender;
  }
  const double n = static_cast<double>(report.rows.size());
  const PurpleConfig& c = report.config;
  return {{"scenario", report.scenario},
          {"rng", Rng::kAlgorithm},
          {"budget", c.budget},
          {"horizon", c.horizon},
          {"rollouts", c.rollouts},
          {"eta", c.eta},
          {"seeds", seeds},
          {"rows", rows},
          {"aggregate",
           {{"red_jailbreak_nodes_total", red_jb},
            {"red_jailbreak_nodes_mean", red_jb / n},
            {"purple_realized_jailbreaks_total", purple_jb},
            {"purple_realized_jailbreaks_mean", purple_jb / n},
            {"purple_guards_deployed_total", guards},
            {"purple_guards_deployed_mean", guards / n},
            {"red_nodes_mean", red_nodes / n},
            {"purple_nodes_mean", purple_nodes / n},
            {"purple_root_v2_ge_red_every_seed", purple_v2_ge}}},
          {"events_fnv1a64", fnv1a64_hex(report.events.text())}};
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad seed '" + std::string(s) + "' in '" +
                       std::string(text) + "'");
    }
    return v;
  };
  std::vector<std::uint64_t> out;
  if (const std::size_t dots = text.find(".."); dots != std::string_view::npos) {
    const std::uint64_t a = number(text.substr(0, dots));
    const std::uint64_t b = number(text.substr(dots + 2));
    if (b < a) throw ParseError("empty seed range '" + std::string(text) + "'");
    if (b - a >= 1'000'000) throw ParseError("seed range too large");
    for (std::uint64_t s = a; s <= b; ++s) out.push_back(s);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(number(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace stackguard
