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

#include <catch2/catch_amalgamated.hpp>

#include "reconfig/costs.hpp"
#include "reconfig/grid_world.hpp"
#include "test_support.hpp"

namespace reconfig {
namespace {

using testing::grid;

TEST_CASE("cell access on constructed grids", "[grid_world]") {
  GridState empty(2, 2);
  CHECK(empty.at({0, 0}) == Cell::Empty);

  GridState with_block = grid(
      "..\n"
      ".#\n");  // block at (1,0)
  CHECK(with_block.at({1, 0}) == Cell::Block);

  GridState with_robot = grid(
      "R.\n"
      "..\n");  // robot-bearing block at (0,1)
  CHECK(with_robot.at({0, 1}) == Cell::BlockWithRobot);

  CHECK_THROWS_AS(empty.at({2, 0}), std::out_of_range);
  CHECK_THROWS_AS(empty.at({0, -1}), std::out_of_range);
}

TEST_CASE("canonical keys identify cell grids", "[grid_world]") {
  const GridState s = grid(
      "R..\n"
      "##R\n");
  const GridState copy = s;
  CHECK(canonical_key(s) == canonical_key(copy));

  // Moving a robot to a different block changes the key.
  GridState moved = s;
  moved.set({0, 1}, Cell::Block);
  moved.set({0, 0}, Cell::BlockWithRobot);
  CHECK(canonical_key(moved) != canonical_key(s));

  // Swapping two anonymous robots between the same blocks does not.
  GridState swapped = s;
  swapped.set({0, 1}, Cell::BlockWithRobot);
  swapped.set({2, 0}, Cell::BlockWithRobot);
  CHECK(canonical_key(swapped) == canonical_key(s));

  // Same cells, different dimensions: distinct keys.
  CHECK(canonical_key(GridState(2, 3)) != canonical_key(GridState(3, 2)));
}

TEST_CASE("goal test ignores robot placement", "[grid_world]") {
  const GridState s = grid(
      "..\n"
      "R#\n");
  const GoalSpec goal = goal_from_state(grid(
      "..\n"
      "##\n"));
  CHECK(is_goal(s, goal));
  CHECK(heuristic_paper(s, goal) == 0);

  const GridState wrong = grid(
      "..\n"
      "#.\n");
  const GoalSpec other = goal_from_state(grid(
      "..\n"
      ".#\n"));
  CHECK_FALSE(is_goal(wrong, other));

  const GoalSpec mismatched{3, 3, std::vector<std::uint8_t>(9, 0)};
  CHECK_THROWS_AS(is_goal(s, mismatched), ScenarioError);
}

TEST_CASE("misplaced blocks are listed row-major with robot flags",
          "[grid_world]") {
  const GridState satisfied = grid(
      "..\n"
      "R#\n");
  const GoalSpec goal = goal_from_state(grid(
      "..\n"
      "##\n"));
  CHECK(misplaced_blocks(satisfied, goal).empty());

  // Blocks at (0,0) and (0,1); goal wants (0,0) and (1,0).
  const GridState column = grid(
      "#.\n"
      "#.\n");
  const auto misplaced = misplaced_blocks(column, goal);
  REQUIRE(misplaced.size() == 1);
  CHECK(misplaced[0].first == Coord{0, 1});
  CHECK_FALSE(misplaced[0].second);

  const GridState three_wrong = grid(
      "#R#\n"
      "...\n");
  const GoalSpec floor_goal = goal_from_state(grid(
      "...\n"
      "###\n"));
  const auto flagged = misplaced_blocks(three_wrong, floor_goal);
  REQUIRE(flagged.size() == 3);
  int robot_flags = 0;
  for (const auto& [coord, has_robot] : flagged) robot_flags += has_robot;
  CHECK(robot_flags == 1);
}

TEST_CASE("is_goal implies no misplaced blocks", "[grid_world]") {
  testing::Rng rng(testing::test_seed());
  for (int i = 0; i < 100; ++i) {
    const GridState s = testing::random_connected_state(
        rng, testing::rand_int(rng, 2, 5), testing::rand_int(rng, 2, 5),
        testing::rand_int(rng, 1, 5), testing::rand_int(rng, 0, 2));
    const GoalSpec goal = goal_from_state(s);
    CHECK(is_goal(s, goal));
    CHECK(misplaced_blocks(s, goal).empty());
  }
}

TEST_CASE("render and parse round-trip", "[grid_world]") {
  const GridState empty(2, 2);
  CHECK(render_ascii(empty) == "..\n..\n");

  const GridState s = grid(
      "..\n"
      "#R\n");
  CHECK(render_ascii(s) == "..\n#R\n");

  testing::Rng rng(testing::test_seed());
  for (int i = 0; i < 100; ++i) {
    const GridState random = testing::random_connected_state(
        rng, testing::rand_int(rng, 1, 6), testing::rand_int(rng, 1, 6),
        testing::rand_int(rng, 1, 6), testing::rand_int(rng, 0, 3));
    const std::string text = render_ascii(random);
    CHECK(render_ascii(parse_ascii(text)) == text);
    CHECK(parse_ascii(text) == random);
  }
}

}  // namespace
}  // namespace reconfig
