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

#include <optional>
#include <string>
#include <vector>

#include "reconfig/grid_world.hpp"

// The five atomic lattice actions a robot can take. A robot lives inside a
// block; manipulations move the robot's own block, bracing against a
// robot-free neighbor (the anchor). Cell-level preconditions and effects:
//
//   MoveRobot(dir):    target = actor+dir must be a robot-free block; the
//                      robot crawls over.
//   LiftBlock(s):      anchor (x+s,y) robot-free block; destination
//                      (x+s,y+1) and clearance (x,y+1) empty. The actor's
//                      block (robot inside) ends on top of the anchor.
//   PutDownBlock(s):   inverse of LiftBlock. Support (x,y-1) robot-free
//                      block; destination (x+s,y-1) and swing cell (x+s,y)
//                      empty. Block+robot descend diagonally.
//   ShiftBlock(s):     target (x+s,y) empty with a robot-free block under
//                      it (or y=0 with the ground_shift option). Block+robot
//                      slide sideways.
//   CoopLiftUp(s):     straight-up lift assisted by a catcher robot sitting
//                      at (x+s,y+1) on top of the anchor (x+s,y). The block
//                      rises to (x,y+1) without its robot; the acting robot
//                      retracts into the anchor.

namespace reconfig {

enum class Direction : std::uint8_t { Left, Right, Up, Down };

inline int dx(Direction d) {
  switch (d) {
    case Direction::Left:
      return -1;
    case Direction::Right:
      return 1;
    default:
      return 0;
  }
}

inline int dy(Direction d) {
  switch (d) {
    case Direction::Up:
      return 1;
    case Direction::Down:
      return -1;
    default:
      return 0;
  }
}

inline char direction_to_char(Direction d) {
  switch (d) {
    case Direction::Left:
      return 'L';
    case Direction::Right:
      return 'R';
    case Direction::Up:
      return 'U';
    case Direction::Down:
      return 'D';
  }
  return '?';
}

inline std::optional<Direction> direction_from_char(char ch) {
  switch (ch) {
    case 'L':
      return Direction::Left;
    case 'R':
      return Direction::Right;
    case 'U':
      return Direction::Up;
    case 'D':
      return Direction::Down;
    default:
      return std::nullopt;
  }
}

enum class PrimitiveKind : std::uint8_t {
  MoveRobot,
  LiftBlock,
  PutDownBlock,
  ShiftBlock,
  CoopLiftUp,
};

struct MotionPrimitive {
  PrimitiveKind kind = PrimitiveKind::MoveRobot;
  Coord actor;
  Direction dir = Direction::Left;
  Coord catcher;  // meaningful for CoopLiftUp only

  friend bool operator==(const MotionPrimitive&, const MotionPrimitive&) =
      default;
};

/// Per-scenario world options that change primitive semantics.
struct WorldOptions {
  bool ground_shift = false;  // allow ShiftBlock along the ground row
  int max_parallel = 0;       // cap on joint-action size; 0 = robot count

  friend bool operator==(const WorldOptions&, const WorldOptions&) = default;
};

namespace detail {

// Horizontal sign of a block manipulation. Vertical directions are never
// valid here; callers catch that through precondition checks.
inline int side_sign(Direction d) { return d == Direction::Left ? -1 : 1; }

inline bool free_block_at(const GridState& s, Coord c) {
  return s.in_bounds(c) && s.at(c) == Cell::Block;
}

inline bool empty_at(const GridState& s, Coord c) {
  return s.in_bounds(c) && s.at(c) == Cell::Empty;
}

}  // namespace detail

/// Checks the cell-level precondition of `prim` in `state`. Returns
/// std::nullopt when the primitive is applicable, otherwise the first
/// violated condition. A primitive whose actor cell does not hold a robot is
/// malformed and throws std::logic_error instead.
inline std::optional<std::string> precondition(const GridState& state,
                                               const MotionPrimitive& prim,
                                               const WorldOptions& options) {
  if (!state.in_bounds(prim.actor) || !has_robot(state.at(prim.actor))) {
    throw std::logic_error("malformed primitive: actor " +
                           to_string(prim.actor) + " is not a robot cell");
  }
  const int x = prim.actor.x;
  const int y = prim.actor.y;

  switch (prim.kind) {
    case PrimitiveKind::MoveRobot: {
      const Coord target{x + dx(prim.dir), y + dy(prim.dir)};
      if (!state.in_bounds(target)) return "target out of bounds";
      if (state.at(target) != Cell::Block)
        return "target not a robot-free block";
      return std::nullopt;
    }
    case PrimitiveKind::LiftBlock: {
      if (prim.dir != Direction::Left && prim.dir != Direction::Right)
        return "lift direction must be horizontal";
      const int s = detail::side_sign(prim.dir);
      const Coord anchor{x + s, y};
      const Coord dest{x + s, y + 1};
      const Coord clearance{x, y + 1};
      if (!state.in_bounds(anchor)) return "anchor out of bounds";
      if (state.at(anchor) != Cell::Block)
        return "anchor not a robot-free block";
      if (!state.in_bounds(dest)) return "destination out of bounds";
      if (state.at(dest) != Cell::Empty) return "destination occupied";
      if (state.at(clearance) != Cell::Empty) return "clearance occupied";
      return std::nullopt;
    }
    case PrimitiveKind::PutDownBlock: {
      if (prim.dir != Direction::Left && prim.dir != Direction::Right)
        return "put-down direction must be horizontal";
      const int s = detail::side_sign(prim.dir);
      const Coord support{x, y - 1};
      const Coord dest{x + s, y - 1};
      const Coord swing{x + s, y};
      if (!state.in_bounds(support)) return "support out of bounds";
      if (state.at(support) != Cell::Block)
        return "support not a robot-free block";
      if (!state.in_bounds(dest)) return "destination out of bounds";
      if (state.at(dest) != Cell::Empty) return "destination occupied";
      if (state.at(swing) != Cell::Empty) return "swing cell occupied";
      return std::nullopt;
    }
    case PrimitiveKind::ShiftBlock: {
      if (prim.dir != Direction::Left && prim.dir != Direction::Right)
        return "shift direction must be horizontal";
      const int s = detail::side_sign(prim.dir);
      const Coord target{x + s, y};
      if (!state.in_bounds(target)) return "target out of bounds";
      if (state.at(target) != Cell::Empty) return "target occupied";
      if (y == 0) {
        if (!options.ground_shift) return "no support under target";
      } else if (state.at({x + s, y - 1}) != Cell::Block) {
        return "no support under target";
      }
      return std::nullopt;
    }
    case PrimitiveKind::CoopLiftUp: {
      if (prim.dir != Direction::Left && prim.dir != Direction::Right)
        return "coop-lift direction must be horizontal";
      const int s = detail::side_sign(prim.dir);
      const Coord anchor{x + s, y};
      const Coord catcher{x + s, y + 1};
      const Coord dest{x, y + 1};
      if (!state.in_bounds(anchor)) return "anchor out of bounds";
      if (state.at(anchor) != Cell::Block)
        return "anchor not a robot-free block";
      if (prim.catcher != catcher) return "catcher not above anchor";
      if (!state.in_bounds(catcher)) return "catcher out of bounds";
      if (!has_robot(state.at(catcher))) return "catcher not a robot";
      if (!state.in_bounds(dest)) return "destination out of bounds";
      if (state.at(dest) != Cell::Empty) return "destination occupied";
      return std::nullopt;
    }
  }
  return "unknown primitive kind";
}

/// Applies `prim` and returns the successor state. Calling this with a
/// failed precondition is a contract violation (std::logic_error), not a
/// planning outcome.
inline GridState apply(const GridState& state, const MotionPrimitive& prim,
                       const WorldOptions& options) {
  if (auto violation = precondition(state, prim, options)) {
    throw std::logic_error("apply called with failed precondition: " +
                           *violation);
  }
  GridState next = state;
  const int x = prim.actor.x;
  const int y = prim.actor.y;
  switch (prim.kind) {
    case PrimitiveKind::MoveRobot: {
      const Coord target{x + dx(prim.dir), y + dy(prim.dir)};
      next.set(prim.actor, Cell::Block);
      next.set(target, Cell::BlockWithRobot);
      break;
    }
    case PrimitiveKind::LiftBlock: {
      const int s = detail::side_sign(prim.dir);
      next.set(prim.actor, Cell::Empty);
      next.set({x + s, y + 1}, Cell::BlockWithRobot);
      break;
    }
    case PrimitiveKind::PutDownBlock: {
      const int s = detail::side_sign(prim.dir);
      next.set(prim.actor, Cell::Empty);
      next.set({x + s, y - 1}, Cell::BlockWithRobot);
      break;
    }
    case PrimitiveKind::ShiftBlock: {
      const int s = detail::side_sign(prim.dir);
      next.set(prim.actor, Cell::Empty);
      next.set({x + s, y}, Cell::BlockWithRobot);
      break;
    }
    case PrimitiveKind::CoopLiftUp: {
      const int s = detail::side_sign(prim.dir);
      next.set(prim.actor, Cell::Empty);
      next.set({x, y + 1}, Cell::Block);       // block rises without its robot
      next.set({x + s, y}, Cell::BlockWithRobot);  // actor retracts into anchor
      break;
    }
  }
  return next;
}

/// Fixed per-kind distance: the Manhattan displacement of the moved entity.
/// CoopLiftUp sums the block's displacement (1) and the acting robot's (1).
inline int primitive_cost(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::MoveRobot:
      return 1;
    case PrimitiveKind::LiftBlock:
      return 2;
    case PrimitiveKind::PutDownBlock:
      return 2;
    case PrimitiveKind::ShiftBlock:
      return 1;
    case PrimitiveKind::CoopLiftUp:
      return 2;
  }
  return 0;
}

inline int primitive_cost(const MotionPrimitive& prim) {
  return primitive_cost(prim.kind);
}

/// All primitives with actor = robot_cell whose preconditions hold.
/// Deterministic order: kinds as declared, Left before Right, Down before Up.
inline std::vector<MotionPrimitive> applicable_primitives(
    const GridState& state, Coord robot_cell, const WorldOptions& options) {
  if (!state.in_bounds(robot_cell) || !has_robot(state.at(robot_cell))) {
    throw std::logic_error("applicable_primitives: " + to_string(robot_cell) +
                           " is not a robot cell");
  }
  static constexpr Direction kMoveDirs[] = {Direction::Left, Direction::Right,
                                            Direction::Down, Direction::Up};
  static constexpr Direction kSideDirs[] = {Direction::Left, Direction::Right};

  std::vector<MotionPrimitive> out;
  auto try_add = [&](MotionPrimitive prim) {
    if (!precondition(state, prim, options)) out.push_back(prim);
  };

  for (Direction d : kMoveDirs) {
    try_add({PrimitiveKind::MoveRobot, robot_cell, d});
  }
  for (Direction d : kSideDirs) {
    try_add({PrimitiveKind::LiftBlock, robot_cell, d});
  }
  for (Direction d : kSideDirs) {
    try_add({PrimitiveKind::PutDownBlock, robot_cell, d});
  }
  for (Direction d : kSideDirs) {
    try_add({PrimitiveKind::ShiftBlock, robot_cell, d});
  }
  for (Direction d : kSideDirs) {
    const Coord catcher{robot_cell.x + detail::side_sign(d), robot_cell.y + 1};
    try_add({PrimitiveKind::CoopLiftUp, robot_cell, d, catcher});
  }
  return out;
}

}  // namespace reconfig
