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

#include "stackguard/rrt.h"

#include <string>
#include <utility>

#include "stackguard/errors.h"

namespace stackguard {

RrtTree::RrtTree(Prompt root, Verdict root_verdict) {
  nodes_.push_back({0, std::move(root), std::nullopt, root_verdict, 0, 0});
}

int RrtTree::insert(Prompt p, int parent, Verdict verdict, int iteration) {
  if (verdict == Verdict::kRefuse) {
    throw Error("refused prompts are never inserted");
  }
  if (parent < 0 || static_cast<std::size_t>(parent) >= nodes_.size()) {
    throw Error("insert: unknown parent " + std::to_string(parent));
  }
  const int id = static_cast<int>(nodes_.size());
  const int depth = nodes_[parent].depth + 1;
  nodes_.push_back({id, std::move(p), parent, verdict, iteration, depth});
  return id;
}

std::vector<int> RrtTree::children_of(int id) const {
  std::vector<int> out;
  for (const RrtNode& n : nodes_) {
    if (n.parent == id) out.push_back(n.id);
  }
  return out;
}

int RrtTree::count_verdict(Verdict v) const {
  int count = 0;
  for (const RrtNode& n : nodes_) count += n.verdict == v ? 1 : 0;
  return count;
}

int nearest(const RrtTree& tree, const Prompt& p) {
  if (tree.empty()) throw EmptyTreeError("nearest: tree is empty");
  int best = 0;
  double best_dist = distance(tree.node(0).prompt, p);
  for (const RrtNode& n : tree.nodes()) {
    const double d = distance(n.prompt, p);
    if (d < best_dist) {
      best = n.id;
      best_dist = d;
    }
  }
  return best;
}

GrowthEvent grow_one(const RrtTree& tree, Oracle& oracle, Rng& rng,
                     double eta, int iteration) {
  GrowthEvent e;
  e.iteration = iteration;
  e.p_rand = sample(rng, oracle.dimension());
  e.near = nearest(tree, e.p_rand);
  e.p_new = extend(tree.node(e.near).prompt, e.p_rand, eta);
  e.verdict = oracle.classify(e.p_new, /*simulated=*/false);
  return e;
}

void log_extend(EventLog* log, const GrowthEvent& e) {
  emit_if(log, e.iteration, "extend",
          {{"p_rand", e.p_rand.coords},
           {"parent", e.near},
           {"prompt", e.p_new.coords},
           {"verdict", verdict_key(e.verdict)},
           {"simulated", false}});
}

void log_insert(EventLog* log, const RrtNode& n) {
  emit_if(log, n.iteration, "insert",
          {{"node", n.id},
           {"parent", n.parent ? nlohmann::ordered_json(*n.parent)
                               : nlohmann::ordered_json(nullptr)},
           {"prompt", n.prompt.coords},
           {"verdict", verdict_key(n.verdict)}});
}

void log_discard(EventLog* log, const GrowthEvent& e) {
  emit_if(log, e.iteration, "discard",
          {{"parent", e.near},
           {"prompt", e.p_new.coords},
           {"verdict", verdict_key(e.verdict)}});
}

RrtTree start_tree(const Prompt& p0, Oracle& oracle, EventLog* log) {
  const Verdict v = oracle.classify(p0, /*simulated=*/false);
  if (v == Verdict::kRefuse || v == Verdict::kJailbreak) {
    throw Error("root prompt classified '" + std::string(verdict_key(v)) +
                "'; it must be safe or redirect");
  }
  RrtTree tree(p0, v);
  log_insert(log, tree.node(0));
  return tree;
}

RrtTree red_explore(const Prompt& p0, int budget, Oracle& oracle, Rng& rng,
                    double eta, EventLog* log) {
  RrtTree tree = start_tree(p0, oracle, log);
  for (int i = 1; i <= budget; ++i) {
    GrowthEvent e = grow_one(tree, oracle, rng, eta, i);
    log_extend(log, e);
    if (e.verdict == Verdict::kRefuse) {
      log_discard(log, e);
      continue;
    }
    const int id = tree.insert(std::move(e.p_new), e.near, e.verdict, i);
    log_insert(log, tree.node(id));
  }
  return tree;
}

nlohmann::json tree_to_json(const RrtTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const RrtNode& n : tree.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"parent", n.parent ? nlohmann::json(*n.parent)
                                         : nlohmann::json(nullptr)},
                     {"prompt", n.prompt.coords},
                     {"verdict", verdict_key(n.verdict)},
                     {"iteration", n.iteration},
                     {"depth", n.depth}});
  }
  return {{"nodes", std::move(nodes)}};
}

}  // namespace stackguard
