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

#include <filesystem>

#include "stackguard/dot_export.h"
#include "stackguard/figure1.h"
#include "stackguard/json_util.h"
#include "stackguard/purple.h"
#include "stackguard/scenario.h"

namespace stackguard {
namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

TEST(DotTest, SingleNodeTree) {
  const std::string dot = rrt_to_dot(RrtTree(Prompt{{0.1, 0.1}, std::nullopt}, Verdict::kSafe));
  EXPECT_EQ(count(dot, "n0 ["), 1u);
  EXPECT_EQ(count(dot, "->"), 0u);
}

TEST(DotTest, FigureOneRootEdges) {
  const std::string dot = game_to_dot(build_figure1_game());
  EXPECT_NE(dot.find("label=\"benign\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"role_play\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"multi_turn\""), std::string::npos);
  EXPECT_EQ(count(dot, "\"x0\" ->"), 3u);
  EXPECT_EQ(dot.find("\\\\n"), std::string::npos);
}

TEST(DotTest, ByteStableFiles) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("stackguard_dot_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  export_dot(build_figure1_game(), dir / "a.dot");
  export_dot(build_figure1_game(), dir / "b.dot");
  EXPECT_EQ(read_text_file(dir / "a.dot"), read_text_file(dir / "b.dot"));

  const Scenario s = canonical_2d();
  auto o1 = s.make_oracle();
  auto o2 = s.make_oracle();
  PurpleConfig cfg = s.run;
  cfg.budget = 100;
  const PurpleRunResult r1 = run_purple(s.p0, cfg, *o1);
  const PurpleRunResult r2 = run_purple(s.p0, cfg, *o2);
  EXPECT_EQ(rrt_to_dot(r1.tree, r1.defenses), rrt_to_dot(r2.tree, r2.defenses));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace stackguard
