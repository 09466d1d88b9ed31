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

// stackguard: solve games, run red/purple explorations and comparisons.
//
// Exit codes: 0 success, 1 validation error (bad input), 2 runtime error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stackguard/dot_export.h"
#include "stackguard/errors.h"
#include "stackguard/figure1.h"
#include "stackguard/game_io.h"
#include "stackguard/harness.h"
#include "stackguard/json_util.h"
#include "stackguard/oracle_adapter.h"
#include "stackguard/scenario.h"
#include "stackguard/spse.h"

namespace fs = std::filesystem;
using namespace stackguard;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create '" + dir.string() + "': " + ec.message());
}

void write_solution(const GameTree& game, const SolveResult& result,
                    const fs::path& dir, bool dot) {
  ensure_dir(dir);
  write_text_file(dir / "game.json", game_to_json(game).dump(2) + "\n");
  write_text_file(dir / "solution.json", solution_to_json(result).dump(2) + "\n");
  if (dot) export_dot(game, dir / "game.dot");
}

std::vector<std::string> split_command(const std::string& cmd) {
  std::istringstream in(cmd);
  std::vector<std::string> argv;
  for (std::string part; in >> part;) argv.push_back(part);
  return argv;
}

struct RunOverrides {
  std::optional<int> budget;
  std::optional<int> horizon;
  std::optional<int> rollouts;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Main-loop iterations B");
    cmd->add_option("--horizon", horizon, "Rollout horizon H");
    cmd->add_option("--rollouts", rollouts, "Rollouts per step k");
  }
  void apply(PurpleConfig& cfg) const {
    if (budget) cfg.budget = *budget;
    if (horizon) cfg.horizon = *horizon;
    if (rollouts) cfg.rollouts = *rollouts;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stackelberg jailbreak games and anticipatory RRT defense"};
  app.require_subcommand(1);

  // solve
  std::string game_path;
  std::string out_dir;
  bool with_dot = false;
  auto* solve = app.add_subcommand("solve", "Solve a game file for its SPSE");
  solve->add_option("--game", game_path, "Game JSON file")->required();
  solve->add_option("--out", out_dir, "Write game.json and solution.json here");
  solve->add_flag("--dot", with_dot, "Also write game.dot");

  // explore
  std::string scenario_path;
  std::string mode = "purple";
  std::uint64_t seed = 0;
  std::string oracle_cmd;
  int oracle_timeout_ms = static_cast<int>(kDefaultAdapterTimeout.count());
  RunOverrides explore_overrides;
  auto* explore = app.add_subcommand("explore", "Run one red or purple exploration");
  explore->add_option("--scenario", scenario_path,
                      "Scenario file or builtin:canonical-2d")->required();
  explore->add_option("--mode", mode, "red | purple")
      ->check(CLI::IsMember({"red", "purple"}));
  explore->add_option("--seed", seed, "Run seed")->required();
  explore_overrides.add_to(explore);
  explore->add_option("--oracle-cmd", oracle_cmd,
                      "External oracle command (newline-delimited JSON on stdio)");
  explore->add_option("--oracle-timeout-ms", oracle_timeout_ms,
                      "Per-query timeout for --oracle-cmd");
  explore->add_option("--out", out_dir, "Run directory")->required();

  // compare
  std::string seeds_text;
  unsigned threads = 0;
  RunOverrides compare_overrides;
  auto* compare = app.add_subcommand("compare", "Paired red vs purple runs over seeds");
  compare->add_option("--scenario", scenario_path,
                      "Scenario file or builtin:canonical-2d")->required();
  compare->add_option("--seeds", seeds_text, "a..b or a,b,c")->required();
  compare_overrides.add_to(compare);
  compare->add_option("--threads", threads, "Worker threads (0 = all cores)");
  compare->add_option("--out", out_dir, "Output directory")->required();

  // figure1
  auto* figure1 = app.add_subcommand("figure1", "Emit and solve the built-in three-prompt game");
  figure1->add_option("--out", out_dir, "Output directory")->required();

  // validate
  std::string validate_scenario, validate_game, validate_run;
  auto* validate = app.add_subcommand("validate", "Check a scenario, game or run directory");
  auto* vs = validate->add_option("--scenario", validate_scenario);
  auto* vg = validate->add_option("--game", validate_game);
  auto* vr = validate->add_option("--run", validate_run, "Run directory (summary vs events)");
  vs->excludes(vg)->excludes(vr);
  vg->excludes(vr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*solve) {
      const GameTree game = load_game(game_path);
      const SolveResult result = solve_spse(game);
      std::cout << solution_to_json(result).dump(2) << "\n";
      if (!out_dir.empty()) write_solution(game, result, out_dir, with_dot);
    } else if (*explore) {
      Scenario scenario = load_scenario(scenario_path);
      PurpleConfig cfg = scenario.run;
      cfg.seed = seed;
      explore_overrides.apply(cfg);
      scenario.run = cfg;
      if (auto bad = scenario.violations(); !bad.empty()) {
        throw ValidationError(std::move(bad));
      }
      const Arm arm = mode == "red" ? Arm::kRed : Arm::kPurple;
      ExploreOutput out;
      if (oracle_cmd.empty()) {
        out = run_explore(scenario, arm, cfg);
      } else {
        AdapterOracle oracle(scenario.dim, split_command(oracle_cmd),
                             std::chrono::milliseconds(oracle_timeout_ms));
        out = run_explore(scenario, arm, cfg, oracle);
      }
      write_explore_artifacts(scenario, out, out_dir);
      std::cout << summary_to_json(out).dump(2) << "\n";
    } else if (*compare) {
      Scenario scenario = load_scenario(scenario_path);
      PurpleConfig cfg = scenario.run;
      compare_overrides.apply(cfg);
      scenario.run = cfg;
      if (auto bad = scenario.violations(); !bad.empty()) {
        throw ValidationError(std::move(bad));
      }
      const std::vector<std::uint64_t> seeds = parse_seed_list(seeds_text);
      const CompareReport report = run_compare(scenario, seeds, cfg, threads);
      const nlohmann::ordered_json j = report_to_json(report);
      ensure_dir(out_dir);
      const fs::path dir(out_dir);
      write_text_file(dir / "scenario.json", scenario_to_json(scenario).dump(2) + "\n");
      write_text_file(dir / "events.jsonl", report.events.text());
      write_text_file(dir / "report.json", j.dump(2) + "\n");
      write_text_file(dir / "summary.json", j.at("aggregate").dump(2) + "\n");
      std::cout << j.at("aggregate").dump(2) << "\n";
    } else if (*figure1) {
      const GameTree game = build_figure1_game();
      const SolveResult result = solve_spse(game);
      write_solution(game, result, out_dir, /*dot=*/true);
      std::cout << solution_to_json(result).dump(2) << "\n";
    } else if (*validate) {
      if (!validate_game.empty()) {
        const GameTree game = load_game(validate_game);
        const auto violations = validate_tree(game);
        for (const Violation& v : violations) std::cout << v.message << "\n";
        if (!violations.empty()) return kExitValidation;
      } else if (!validate_scenario.empty()) {
        load_scenario(validate_scenario);
      } else if (!validate_run.empty()) {
        verify_run_dir(validate_run);
      } else {
        std::cerr << "validate: one of --scenario, --game, --run is required\n";
        return kExitValidation;
      }
      std::cout << "ok\n";
    }
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
