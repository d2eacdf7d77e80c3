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
#include <cstdlib>
#include <limits>
#include <numeric>
#include <vector>

#include "reconfig/joint_actions.hpp"

// Step cost and cost-to-go estimate.
//
// A step costs the summed per-primitive distances plus a flat surcharge of 1.
// The surcharge applies to every step, single- and multi-robot alike, which
// makes one parallel step strictly cheaper than the same primitives spread
// over several steps.
//
// The estimate pairs misplaced blocks with unfilled goal cells by a
// minimum-cost bijection under Manhattan distance, then adds an approach
// term: each robot-free misplaced block beyond the robot count needs at
// least one robot move before it can travel.

namespace reconfig {

struct CostModel {
  int move_robot = 1;
  int lift_block = 2;
  int put_down_block = 2;
  int shift_block = 1;
  int coop_lift_up = 2;  // block displacement 1 + acting robot displacement 1
  int step_surcharge = 1;

  int cost(PrimitiveKind kind) const {
    switch (kind) {
      case PrimitiveKind::MoveRobot:
        return move_robot;
      case PrimitiveKind::LiftBlock:
        return lift_block;
      case PrimitiveKind::PutDownBlock:
        return put_down_block;
      case PrimitiveKind::ShiftBlock:
        return shift_block;
      case PrimitiveKind::CoopLiftUp:
        return coop_lift_up;
    }
    return 0;
  }

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

enum class HeuristicKind : std::uint8_t { Paper, Zero };

inline int step_cost(const JointAction& action, const CostModel& model = {}) {
  int d = 0;
  for (const MotionPrimitive& prim : action.primitives) {
    d += model.cost(prim.kind);
  }
  return d + model.step_surcharge;
}

inline int manhattan(Coord a, Coord b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

namespace detail {

inline int assignment_bruteforce(const std::vector<Coord>& from,
                                 const std::vector<Coord>& to) {
  const std::size_t n = from.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += manhattan(from[i], to[perm[i]]);
    }
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// O(n^3) Hungarian algorithm with row/column potentials (1-indexed,
// column 0 is the virtual unmatched column).
inline int assignment_hungarian(const std::vector<Coord>& from,
                                const std::vector<Coord>& to) {
  const int n = static_cast<int>(from.size());
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> u(n + 1, 0), v(n + 1, 0), match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<int> minv(n + 1, kInf);
    std::vector<char> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      int delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const int cur = manhattan(from[i0 - 1], to[j - 1]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  int total = 0;
  for (int j = 1; j <= n; ++j) {
    total += manhattan(from[match[j] - 1], to[j - 1]);
  }
  return total;
}

}  // namespace detail

/// Minimum over bijections of summed Manhattan distances. Brute force for up
/// to 6 pairs, Hungarian algorithm above that.
inline int assignment_cost(const std::vector<Coord>& misplaced,
                           const std::vector<Coord>& open_goals) {
  if (misplaced.size() != open_goals.size()) {
    throw ScenarioError("assignment length mismatch " +
                        std::to_string(misplaced.size()) + " vs " +
                        std::to_string(open_goals.size()));
  }
  if (misplaced.empty()) return 0;
  if (misplaced.size() <= 6) {
    return detail::assignment_bruteforce(misplaced, open_goals);
  }
  return detail::assignment_hungarian(misplaced, open_goals);
}

/// Cost-to-go estimate: optimal block-to-goal assignment distance plus
/// max(0, W - R), where W counts robot-free misplaced blocks and R the
/// robots. Zero exactly on goal states.
inline int heuristic_paper(const GridState& state, const GoalSpec& goal) {
  check_same_dims(state, goal);
  if (state.block_count() != goal.block_count()) {
    throw ScenarioError("block count mismatch " +
                        std::to_string(state.block_count()) + " vs " +
                        std::to_string(goal.block_count()));
  }
  std::vector<Coord> misplaced;
  std::vector<Coord> open_goals;
  int wrong_without_robot = 0;
  for (int y = 0; y < state.height(); ++y) {
    for (int x = 0; x < state.width(); ++x) {
      const Coord c{x, y};
      const Cell cell = state.at(c);
      if (has_block(cell) && !goal.block_at(c)) {
        misplaced.push_back(c);
        if (!has_robot(cell)) ++wrong_without_robot;
      } else if (!has_block(cell) && goal.block_at(c)) {
        open_goals.push_back(c);
      }
    }
  }
  const int travel = assignment_cost(misplaced, open_goals);
  const int approach = std::max(0, wrong_without_robot - state.robot_count());
  return travel + approach;
}

inline int heuristic(const GridState& state, const GoalSpec& goal,
                     HeuristicKind kind) {
  return kind == HeuristicKind::Zero ? 0 : heuristic_paper(state, goal);
}

}  // namespace reconfig
