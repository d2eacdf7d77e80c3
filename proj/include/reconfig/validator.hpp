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

#include <string>

#include "reconfig/scenario_io.hpp"

// Plan replay with full precondition, conflict, conservation, and cost
// checking. The replayed cost is derived from the geometric displacement of
// the moved entities, not from the planner's cost tables, so a cost bug in
// the planner cannot certify itself.

namespace reconfig {

struct ValidationReport {
  bool ok = false;
  int failing_step = -1;
  std::string reason;
  int replayed_cost = 0;
};

namespace detail {

// Manhattan displacement of the entity a primitive moves, derived from the
// primitive's geometry. CoopLiftUp moves the block one cell up and the
// acting robot one cell sideways.
inline int replayed_primitive_cost(const MotionPrimitive& prim) {
  switch (prim.kind) {
    case PrimitiveKind::MoveRobot: {
      const Coord from = prim.actor;
      const Coord to{prim.actor.x + dx(prim.dir), prim.actor.y + dy(prim.dir)};
      return manhattan(from, to);
    }
    case PrimitiveKind::LiftBlock: {
      const int s = side_sign(prim.dir);
      return manhattan(prim.actor, {prim.actor.x + s, prim.actor.y + 1});
    }
    case PrimitiveKind::PutDownBlock: {
      const int s = side_sign(prim.dir);
      return manhattan(prim.actor, {prim.actor.x + s, prim.actor.y - 1});
    }
    case PrimitiveKind::ShiftBlock: {
      const int s = side_sign(prim.dir);
      return manhattan(prim.actor, {prim.actor.x + s, prim.actor.y});
    }
    case PrimitiveKind::CoopLiftUp: {
      const int s = side_sign(prim.dir);
      const int block_travel =
          manhattan(prim.actor, {prim.actor.x, prim.actor.y + 1});
      const int robot_travel =
          manhattan(prim.actor, {prim.actor.x + s, prim.actor.y});
      return block_travel + robot_travel;
    }
  }
  return 0;
}

}  // namespace detail

/// Replays `plan` against `scenario` step by step. Fails on the first
/// precondition violation, footprint conflict, conservation breach, cost
/// mismatch, or non-goal terminal state. Failures are report values, not
/// exceptions.
inline ValidationReport validate_plan(const Scenario& scenario,
                                      const Plan& plan) {
  ValidationReport report;
  GridState state = scenario.start;
  const int blocks = state.block_count();
  const int robots = state.robot_count();
  int cost = 0;

  auto fail = [&](int step, std::string reason) {
    report.ok = false;
    report.failing_step = step;
    report.reason = std::move(reason);
    return report;
  };

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const int step = static_cast<int>(i);
    const JointAction& action = plan.steps[i];
    if (action.primitives.empty()) return fail(step, "empty joint action");
    for (std::size_t a = 0; a < action.primitives.size(); ++a) {
      for (std::size_t b = a + 1; b < action.primitives.size(); ++b) {
        if (!footprints_disjoint(action.primitives[a], action.primitives[b])) {
          return fail(step, "overlapping footprints");
        }
      }
    }
    for (const MotionPrimitive& prim : action.primitives) {
      if (!state.in_bounds(prim.actor) || !has_robot(state.at(prim.actor))) {
        return fail(step, "actor " + to_string(prim.actor) +
                              " is not a robot cell");
      }
      if (auto violation = precondition(state, prim, scenario.options)) {
        return fail(step, *violation);
      }
    }
    for (const MotionPrimitive& prim : action.primitives) {
      state = apply(state, prim, scenario.options);
      cost += detail::replayed_primitive_cost(prim);
    }
    cost += 1;  // per-step surcharge
    if (state.block_count() != blocks || state.robot_count() != robots) {
      return fail(step, "conservation violated");
    }
  }

  if (!is_goal(state, scenario.goal)) {
    return fail(static_cast<int>(plan.steps.size()),
                "terminal state does not satisfy goal");
  }
  if (cost != plan.total_cost) {
    return fail(static_cast<int>(plan.steps.size()),
                "cost mismatch: replayed " + std::to_string(cost) +
                    ", plan says " + std::to_string(plan.total_cost));
  }
  report.ok = true;
  report.replayed_cost = cost;
  return report;
}

}  // namespace reconfig
