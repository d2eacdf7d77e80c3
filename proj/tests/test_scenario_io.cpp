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

#include "reconfig/scenario_io.hpp"
#include "test_support.hpp"

namespace reconfig {
namespace {

TEST_CASE("minimal scenario parses", "[scenario_io]") {
  const Scenario s = parse_scenario(
      "[start]\n"
      "R\n"
      "[goal]\n"
      "#\n");
  CHECK(s.width == 1);
  CHECK(s.height == 1);
  CHECK(s.start.block_count() == 1);
  CHECK(s.start.robot_count() == 1);
  CHECK(s.goal.block_count() == 1);
  CHECK(s.name.empty());
  CHECK_FALSE(s.options.ground_shift);
}

TEST_CASE("parser reports robots in the goal", "[scenario_io]") {
  try {
    parse_scenario(
        "[start]\n"
        "R#\n"
        "[goal]\n"
        "#R\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 2);
    CHECK(std::string(e.what()).find("robot in goal") != std::string::npos);
  }
}

TEST_CASE("parser reports block count mismatches", "[scenario_io]") {
  try {
    parse_scenario(
        "[start]\n"
        "##.\n"
        "[goal]\n"
        "###\n");
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).find("block count mismatch 2 vs 3") !=
          std::string::npos);
  }
}

TEST_CASE("parser rejects syntax problems with positions", "[scenario_io]") {
  try {
    parse_scenario(
        "[start]\n"
        "#x\n"
        "[goal]\n"
        "##\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }

  CHECK_THROWS_AS(parse_scenario("[start]\n##\n#\n[goal]\n##\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("[goal]\n#\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("R\n[start]\nR\n[goal]\n#\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario(
                      "[start]\nR\n[goal]\n#\n[options]\nbogus = 1\n"),
                  ParseError);
}

TEST_CASE("options are parsed and serialized", "[scenario_io]") {
  const Scenario s = parse_scenario(
      "[start]\n"
      "R#.\n"
      "[goal]\n"
      ".##\n"
      "[options]\n"
      "name = slide_two\n"
      "ground_shift = true\n"
      "max_parallel = 2\n");
  CHECK(s.name == "slide_two");
  CHECK(s.options.ground_shift);
  CHECK(s.options.max_parallel == 2);

  const std::string text = serialize_scenario(s);
  CHECK(parse_scenario(text) == s);
}

TEST_CASE("scenario round-trip on random instances", "[scenario_io]") {
  testing::Rng rng(testing::test_seed() ^ 0x10);
  for (int i = 0; i < 200; ++i) {
    Scenario s = testing::random_solvable_scenario(rng);
    s.name = "case_" + std::to_string(i);
    s.options.ground_shift = (i % 3 == 0);
    s.options.max_parallel = i % 4;
    REQUIRE(parse_scenario(serialize_scenario(s)) == s);
  }
}

TEST_CASE("plan text round-trips", "[scenario_io]") {
  Scenario scenario;
  scenario.name = "writeback";
  scenario.width = 3;
  scenario.height = 2;
  scenario.start = parse_ascii("R..\n###\n");
  scenario.goal = goal_from_state(parse_ascii("...\n###\n"));

  Plan plan;
  plan.total_cost = 7;
  plan.stats.expanded = 11;
  plan.stats.generated = 29;
  JointAction a;
  a.primitives = {{PrimitiveKind::ShiftBlock, {0, 1}, Direction::Right},
                  {PrimitiveKind::MoveRobot, {2, 0}, Direction::Left}};
  JointAction b;
  b.primitives = {{PrimitiveKind::CoopLiftUp, {0, 0}, Direction::Right,
                   {1, 1}}};
  plan.steps = {a, b};

  const std::string text = write_plan(plan, scenario);
  CHECK(text.find("scenario: writeback\n") == 0);
  CHECK(text.find("SHIFT R @(0,1); MOVE L @(2,0)\n") != std::string::npos);
  CHECK(text.find("COOP R @(0,0) catcher @(1,1)\n") != std::string::npos);

  const Plan parsed = parse_plan(text);
  CHECK(parsed.steps == plan.steps);
  CHECK(parsed.total_cost == plan.total_cost);
  CHECK(parsed.stats.expanded == plan.stats.expanded);
  CHECK(parsed.stats.generated == plan.stats.generated);
}

TEST_CASE("task suite shape", "[scenario_io]") {
  const std::vector<Scenario> suite = generate_task_suite();
  REQUIRE(suite.size() == 21);

  int index = 0;
  for (int task = 1; task <= 6; ++task) {
    for (int robots = 1; robots <= task; ++robots) {
      const Scenario& s = suite[index++];
      CHECK(s.name == "task" + std::to_string(task) + "_r" +
                          std::to_string(robots));
      CHECK(s.start.block_count() == task + 1);
      CHECK(s.start.robot_count() == robots);
      CHECK(s.goal.block_count() == task + 1);
      // Start and goal differ, so every cell has real work to do.
      CHECK_FALSE(is_goal(s.start, s.goal));
      // Self-check: serialize, parse back, compare.
      CHECK(parse_scenario(serialize_scenario(s)) == s);
    }
  }
}

}  // namespace
}  // namespace reconfig
