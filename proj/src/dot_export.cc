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

#include "stackguard/dot_export.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "stackguard/json_util.h"

namespace stackguard {
namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string quote(std::string_view s) { return "\"" + escape(s) + "\""; }

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string coords_text(const std::vector<double>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ", ";
    out += fixed6(c[i]);
  }
  return out + ")";
}

const char* verdict_color(Verdict v) {
  switch (v) {
    case Verdict::kSafe:
      return "green";
    case Verdict::kRedirect:
      return "yellow";
    case Verdict::kJailbreak:
      return "red";
    case Verdict::kRefuse:
      return "grey";
  }
  return "white";
}

const char* outcome_color(Outcome o) {
  switch (o) {
    case Outcome::kSafeInteraction:
      return "green";
    case Outcome::kJailbreak:
      return "red";
    case Outcome::kBlocked:
      return "grey";
  }
  return "white";
}

}  // namespace

std::string rrt_to_dot(const RrtTree& tree,
                       std::span<const DefenseEvent> defenses) {
  std::ostringstream out;
  out << "digraph rrt {\n";
  out << "  node [style=filled];\n";
  for (const RrtNode& n : tree.nodes()) {
    out << "  n" << n.id << " [label=\"" << n.id
        << "\", tooltip=" << quote(coords_text(n.prompt.coords))
        << ", fillcolor=" << verdict_color(n.verdict) << "];\n";
  }
  for (const RrtNode& n : tree.nodes()) {
    if (n.parent) out << "  n" << *n.parent << " -> n" << n.id << ";\n";
  }
  std::map<int, int> node_at_iteration;
  for (const RrtNode& n : tree.nodes()) node_at_iteration[n.iteration] = n.id;
  for (std::size_t i = 0; i < defenses.size(); ++i) {
    const DefenseEvent& d = defenses[i];
    std::string label = std::string(d.created ? "deploy" : "adapt") +
                        " guard " + std::to_string(d.guard.id) + "\\n" +
                        std::string(trigger_key(d.trigger)) + " @" +
                        std::to_string(d.iteration) + "\\nr=" +
                        fixed6(d.guard.radius);
    out << "  g" << i << " [shape=note, style=\"\", label=\"" << label
        << "\", tooltip=" << quote(coords_text(d.guard.center)) << "];\n";
    auto it = node_at_iteration.find(d.iteration);
    if (it != node_at_iteration.end()) {
      out << "  g" << i << " -> n" << it->second
          << " [style=dashed, arrowhead=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string game_to_dot(const GameTree& game) {
  std::vector<std::size_t> order(game.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return game.node(a).id < game.node(b).id;
  });

  std::ostringstream out;
  out << "digraph game {\n";
  for (std::size_t i : order) {
    const GameNode& n = game.node(i);
    out << "  " << quote(n.id) << " [";
    if (auto o = n.outcome()) {
      out << "label=" << quote(std::string(to_string(*o)))
          << ", shape=plaintext, style=filled, fillcolor=" << outcome_color(*o);
    } else {
      const bool attacker = n.player() == PlayerId::kAttacker;
      out << "label=\"" << escape(n.id) << "\\n" << to_string(*n.player()) << "\""
          << ", shape=" << (attacker ? "box" : "ellipse");
    }
    out << "];\n";
  }
  for (std::size_t i : order) {
    const GameNode& n = game.node(i);
    for (const Edge& e : n.children) {
      out << "  " << quote(n.id) << " -> " << quote(e.to)
          << " [label=" << quote(e.action.label) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

void export_dot(const RrtTree& tree, const std::filesystem::path& path,
                std::span<const DefenseEvent> defenses) {
  write_text_file(path, rrt_to_dot(tree, defenses));
}

void export_dot(const GameTree& game, const std::filesystem::path& path) {
  write_text_file(path, game_to_dot(game));
}

}  // namespace stackguard
