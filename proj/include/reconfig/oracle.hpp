// Copyright 2026 The reconfig Authors
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

#pragma once

#include <chrono>
#include <deque>
#include <queue>
#include <unordered_map>

#include "reconfig/astar.hpp"

// Ground-truth planner: uniform-cost search, written as its own Dijkstra
// loop rather than as a parameterization of the A* module. Step costs are
// strictly positive, so the first goal expansion is provably optimal and no
// reopening is needed. Intended for small instances (around 5x5 worlds, a
// handful of blocks); the contract here is correctness, not scale.

namespace reconfig {

/// Provably cost-optimal plan, or NoPlan / ResourceExhausted.
inline PlanResult ucs_plan(const Scenario& scenario,
                           const SearchOptions& options = {}) {
  detail::check_plannable(scenario);
  WorldOptions world = scenario.options;
  if (options.max_parallel) world.max_parallel = *options.max_parallel;

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_s = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };

  struct Node {
    GridState state;
    int g = 0;
    std::int64_t parent = -1;
    JointAction incoming;
  };
  struct Entry {
    int g = 0;
    std::uint64_t seq = 0;
    std::int64_t node = -1;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.g != b.g) return a.g > b.g;
      return a.seq > b.seq;
    }
  };

  std::deque<Node> nodes;
  std::priority_queue<Entry, std::vector<Entry>, Worse> open;
  std::unordered_map<std::string, int> best_g;
  SearchStats stats;
  std::uint64_t seq = 0;

  nodes.push_back({scenario.start, 0, -1, {}});
  best_g.emplace(canonical_key(scenario.start), 0);
  open.push({0, seq++, 0});
  stats.generated = 1;

  auto finish = [&](PlanStatus status,
                    std::optional<Plan> found = std::nullopt) {
    stats.duration_s = elapsed_s();
    PlanResult result;
    result.status = status;
    result.stats = stats;
    if (found) {
      found->stats = stats;
      result.plan = std::move(found);
    }
    return result;
  };

  while (!open.empty()) {
    stats.peak_open = std::max(stats.peak_open,
                               static_cast<std::uint64_t>(open.size()));
    const Entry entry = open.top();
    open.pop();
    const Node& node = nodes[entry.node];
    if (entry.g > best_g.at(canonical_key(node.state))) continue;  // stale

    ++stats.expanded;
    if (stats.expanded > options.max_expanded) {
      return finish(PlanStatus::ResourceExhausted);
    }
    if ((stats.expanded & 0x1FF) == 0 && elapsed_s() > options.time_limit_s) {
      return finish(PlanStatus::ResourceExhausted);
    }

    if (is_goal(node.state, scenario.goal)) {
      Plan found;
      found.steps = detail::walk_parents(nodes, entry.node);
      found.total_cost = node.g;
      stats.duration_s = elapsed_s();
      found.stats = stats;
      const ValidationReport report = validate_plan(scenario, found);
      if (!report.ok) {
        throw std::logic_error("oracle produced an invalid plan: " +
                               report.reason);
      }
      return finish(PlanStatus::Found, std::move(found));
    }

    for (const JointAction& action :
         enumerate_joint_actions(node.state, world)) {
      GridState child = apply_joint(node.state, action, world);
      const int child_g = node.g + step_cost(action);
      ++stats.generated;
      const std::string child_key = canonical_key(child);
      auto [it, inserted] = best_g.emplace(child_key, child_g);
      if (!inserted) {
        if (child_g >= it->second) continue;
        it->second = child_g;
      }
      nodes.push_back({std::move(child), child_g,
                       static_cast<std::int64_t>(entry.node), action});
      open.push({child_g, seq++, static_cast<std::int64_t>(nodes.size()) - 1});
    }
  }
  return finish(PlanStatus::NoPlan);
}

/// Heuristic audit on an oracle-sized instance: compares the start-state
/// heuristic against the provably optimal cost, and the A* (Paper heuristic)
/// cost against the optimum.
struct AuditReport {
  PlanStatus status = PlanStatus::NoPlan;  // of the oracle run
  int optimal_cost = -1;
  int astar_cost = -1;
  int h_at_start = 0;
  bool admissible_here = false;
  bool astar_optimal = false;
};

inline AuditReport audit_heuristic(const Scenario& scenario,
                                   const SearchOptions& options = {}) {
  AuditReport report;
  report.h_at_start = heuristic_paper(scenario.start, scenario.goal);

  SearchOptions oracle_options = options;
  oracle_options.heuristic = HeuristicKind::Zero;
  const PlanResult optimal = ucs_plan(scenario, oracle_options);
  report.status = optimal.status;
  if (optimal.status != PlanStatus::Found) return report;
  report.optimal_cost = optimal.plan->total_cost;
  report.admissible_here = report.h_at_start <= report.optimal_cost;

  SearchOptions astar_options = options;
  astar_options.heuristic = HeuristicKind::Paper;
  const PlanResult informed = plan(scenario, astar_options);
  if (informed.status == PlanStatus::Found) {
    report.astar_cost = informed.plan->total_cost;
    report.astar_optimal = report.astar_cost == report.optimal_cost;
  }
  return report;
}

}  // namespace reconfig
