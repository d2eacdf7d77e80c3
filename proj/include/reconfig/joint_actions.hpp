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
#include <cassert>
#include <vector>

#include "reconfig/primitives.hpp"

// Parallel execution: several robots fire one primitive each in a single
// planning step. Two primitives may share a step only when their footprints
// (every cell their precondition reads or their effect writes) are disjoint,
// which makes the application order irrelevant. A CoopLiftUp consumes two
// robots; its footprint contains the catcher cell, so the catcher cannot act
// elsewhere in the same step.

namespace reconfig {

struct JointAction {
  std::vector<MotionPrimitive> primitives;

  friend bool operator==(const JointAction&, const JointAction&) = default;
};

/// Every cell the primitive's precondition reads or its effect writes.
inline std::vector<Coord> footprint(const MotionPrimitive& prim) {
  const int x = prim.actor.x;
  const int y = prim.actor.y;
  switch (prim.kind) {
    case PrimitiveKind::MoveRobot:
      return {prim.actor, {x + dx(prim.dir), y + dy(prim.dir)}};
    case PrimitiveKind::LiftBlock: {
      const int s = detail::side_sign(prim.dir);
      return {prim.actor, {x + s, y}, {x + s, y + 1}, {x, y + 1}};
    }
    case PrimitiveKind::PutDownBlock: {
      const int s = detail::side_sign(prim.dir);
      return {prim.actor, {x, y - 1}, {x + s, y - 1}, {x + s, y}};
    }
    case PrimitiveKind::ShiftBlock: {
      const int s = detail::side_sign(prim.dir);
      std::vector<Coord> cells{prim.actor, {x + s, y}};
      if (y > 0) cells.push_back({x + s, y - 1});
      return cells;
    }
    case PrimitiveKind::CoopLiftUp: {
      const int s = detail::side_sign(prim.dir);
      return {prim.actor, {x + s, y}, {x + s, y + 1}, {x, y + 1}};
    }
  }
  return {prim.actor};
}

inline bool footprints_disjoint(const MotionPrimitive& a,
                                const MotionPrimitive& b) {
  const auto fa = footprint(a);
  const auto fb = footprint(b);
  for (Coord ca : fa) {
    for (Coord cb : fb) {
      if (ca == cb) return false;
    }
  }
  return true;
}

/// Applies a joint action. Every member precondition must hold in `state`
/// and footprints must be pairwise disjoint; violating either is a contract
/// violation. Disjointness makes the member order irrelevant (checked in
/// debug builds).
inline GridState apply_joint(const GridState& state, const JointAction& action,
                             const WorldOptions& options) {
  if (action.primitives.empty()) {
    throw std::logic_error("apply_joint: empty joint action");
  }
  for (std::size_t i = 0; i < action.primitives.size(); ++i) {
    for (std::size_t j = i + 1; j < action.primitives.size(); ++j) {
      if (!footprints_disjoint(action.primitives[i], action.primitives[j])) {
        throw std::logic_error("apply_joint: overlapping footprints");
      }
    }
    if (auto violation = precondition(state, action.primitives[i], options)) {
      throw std::logic_error("apply_joint: member precondition failed: " +
                             *violation);
    }
  }
  GridState next = state;
  for (const MotionPrimitive& prim : action.primitives) {
    next = apply(next, prim, options);
  }
#ifndef NDEBUG
  // Order independence: applying members in reverse must agree.
  {
    GridState check = state;
    for (auto it = action.primitives.rbegin(); it != action.primitives.rend();
         ++it) {
      check = apply(check, *it, options);
    }
    assert(canonical_key(check) == canonical_key(next));
  }
#endif
  return next;
}

/// All conflict-free nonempty subsets of per-robot applicable primitives,
/// capped at options.max_parallel members (0 = number of robots).
/// Deterministic preorder: robots row-major, each robot's primitives in
/// applicable_primitives order, smaller sets before their extensions.
inline std::vector<JointAction> enumerate_joint_actions(
    const GridState& state, const WorldOptions& options) {
  const std::vector<Coord> robots = state.robot_cells();
  std::vector<std::vector<MotionPrimitive>> per_robot;
  per_robot.reserve(robots.size());
  for (Coord r : robots) {
    per_robot.push_back(applicable_primitives(state, r, options));
  }

  const int cap = options.max_parallel > 0
                      ? options.max_parallel
                      : static_cast<int>(robots.size());

  std::vector<JointAction> out;
  std::vector<std::uint8_t> occupied(state.cells().size(), 0);
  JointAction current;

  auto cell_index = [&](Coord c) {
    return static_cast<std::size_t>(c.y) * state.width() + c.x;
  };

  auto conflicts = [&](const MotionPrimitive& prim) {
    for (Coord c : footprint(prim)) {
      if (occupied[cell_index(c)]) return true;
    }
    return false;
  };

  auto stamp = [&](const MotionPrimitive& prim, std::uint8_t value) {
    for (Coord c : footprint(prim)) occupied[cell_index(c)] = value;
  };

  auto recurse = [&](auto&& self, std::size_t robot_idx) -> void {
    if (robot_idx >= per_robot.size()) return;
    // Option 1: this robot contributes a primitive.
    if (static_cast<int>(current.primitives.size()) < cap) {
      for (const MotionPrimitive& prim : per_robot[robot_idx]) {
        if (conflicts(prim)) continue;
        stamp(prim, 1);
        current.primitives.push_back(prim);
        out.push_back(current);
        self(self, robot_idx + 1);
        current.primitives.pop_back();
        stamp(prim, 0);
      }
    }
    // Option 2: this robot sits out.
    self(self, robot_idx + 1);
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace reconfig
