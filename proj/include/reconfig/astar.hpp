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

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <unordered_map>

#include "reconfig/validator.hpp"

// Best-first search on f = g + h over grid states with joint-action
// successors. Ties on f break toward larger g, then insertion order, so
// plans are deterministic. The closed set is keyed on canonical state keys;
// because the heuristic's admissibility is unproven, a closed state reached
// with strictly lower g is reopened by default.

namespace reconfig {

namespace detail {

struct SearchNode {
  GridState state;
  int g = 0;
  std::int64_t parent = -1;
  JointAction incoming;
};

struct OpenEntry {
  int f = 0;
  int g = 0;
  std::uint64_t seq = 0;
  std::int64_t node = -1;
};

struct OpenEntryWorse {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;  // prefer deeper nodes
    return a.seq > b.seq;
  }
};

struct KeyInfo {
  int best_g = 0;
  bool closed = false;
};

template <typename NodeSeq>
std::vector<JointAction> walk_parents(const NodeSeq& nodes,
                                      std::int64_t goal_index) {
  std::vector<JointAction> steps;
  for (std::int64_t i = goal_index; nodes[i].parent >= 0;
       i = nodes[i].parent) {
    steps.push_back(nodes[i].incoming);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

inline void check_plannable(const Scenario& scenario) {
  validate_scenario(scenario);
  if (!is_goal(scenario.start, scenario.goal) &&
      scenario.start.robot_count() == 0) {
    throw ScenarioError("no robots in start state");
  }
}

}  // namespace detail

/// A* search. Returns a validated Plan, NoPlan when the reachable space is
/// exhausted, or ResourceExhausted when a cap is hit.
inline PlanResult plan(const Scenario& scenario,
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

  std::deque<detail::SearchNode> nodes;
  std::priority_queue<detail::OpenEntry, std::vector<detail::OpenEntry>,
                      detail::OpenEntryWorse>
      open;
  std::unordered_map<std::string, detail::KeyInfo> seen;
  SearchStats stats;
  std::uint64_t seq = 0;

  auto heuristic_of = [&](const GridState& s) {
    return heuristic(s, scenario.goal, options.heuristic);
  };

  nodes.push_back({scenario.start, 0, -1, {}});
  seen.emplace(canonical_key(scenario.start), detail::KeyInfo{0, false});
  open.push({heuristic_of(scenario.start), 0, seq++, 0});
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
    const detail::OpenEntry entry = open.top();
    open.pop();
    detail::SearchNode& node = nodes[entry.node];
    const std::string key = canonical_key(node.state);
    auto& info = seen.at(key);
    if (entry.g > info.best_g || info.closed) continue;  // stale entry
    info.closed = true;

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
        throw std::logic_error("search produced an invalid plan at step " +
                               std::to_string(report.failing_step) + ": " +
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
      auto [it, inserted] = seen.emplace(child_key,
                                         detail::KeyInfo{child_g, false});
      if (!inserted) {
        if (child_g >= it->second.best_g) continue;
        if (it->second.closed) {
          if (!options.reopen_closed) continue;
          it->second.closed = false;
          ++stats.reopened;
        }
        it->second.best_g = child_g;
      }
      nodes.push_back({std::move(child), child_g,
                       static_cast<std::int64_t>(entry.node), action});
      open.push({child_g + heuristic_of(nodes.back().state), child_g, seq++,
                 static_cast<std::int64_t>(nodes.size()) - 1});
    }
  }
  return finish(PlanStatus::NoPlan);
}

}  // namespace reconfig
