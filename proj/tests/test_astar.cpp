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

#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "reconfig/astar.hpp"
#include "reconfig/oracle.hpp"
#include "test_support.hpp"

namespace reconfig {
namespace {

using testing::grid;

Scenario shift_scenario() {
  Scenario s;
  s.name = "shift_one";
  s.width = 2;
  s.height = 2;
  s.start = grid(
      "R.\n"
      "##\n");
  s.goal = goal_from_state(grid(
      ".#\n"
      "##\n"));
  return s;
}

Scenario isolated_scenario() {
  Scenario s;
  s.name = "isolated";
  s.width = 2;
  s.height = 1;
  s.start = grid("R.\n");
  s.goal = goal_from_state(grid(".#\n"));
  return s;
}

TEST_CASE("satisfied scenario yields an empty plan", "[astar]") {
  Scenario s = shift_scenario();
  s.goal = goal_from_state(s.start);
  const PlanResult result = plan(s);
  REQUIRE(result.found());
  CHECK(result.plan->steps.empty());
  CHECK(result.plan->total_cost == 0);
}

TEST_CASE("one-step shift instance costs 2", "[astar]") {
  const PlanResult result = plan(shift_scenario());
  REQUIRE(result.found());
  REQUIRE(result.plan->steps.size() == 1);
  REQUIRE(result.plan->steps[0].primitives.size() == 1);
  const MotionPrimitive& prim = result.plan->steps[0].primitives[0];
  CHECK(prim.kind == PrimitiveKind::ShiftBlock);
  CHECK(prim.dir == Direction::Right);
  CHECK(prim.actor == Coord{0, 1});
  CHECK(result.plan->total_cost == 2);

  SearchOptions zero;
  zero.heuristic = HeuristicKind::Zero;
  const PlanResult uninformed = plan(shift_scenario(), zero);
  REQUIRE(uninformed.found());
  CHECK(uninformed.plan->total_cost == 2);
}

TEST_CASE("isolated block admits no plan", "[astar]") {
  const PlanResult result = plan(isolated_scenario());
  CHECK(result.status == PlanStatus::NoPlan);
  CHECK_FALSE(result.plan.has_value());
}

TEST_CASE("expansion cap reports resource exhaustion", "[astar]") {
  SearchOptions tight;
  tight.max_expanded = 1;
  const auto suite = generate_task_suite();
  const PlanResult result = plan(suite.front(), tight);
  CHECK(result.status == PlanStatus::ResourceExhausted);
}

TEST_CASE("invalid scenarios fail before the search starts", "[astar]") {
  Scenario s = shift_scenario();
  s.start.set({0, 1}, Cell::Block);  // no robots, goal unsatisfied
  CHECK_THROWS_AS(plan(s), ScenarioError);

  Scenario mismatch = shift_scenario();
  mismatch.goal.mask[0] = 0;
  CHECK_THROWS_AS(plan(mismatch), ScenarioError);
}

TEST_CASE("zero-heuristic search matches the oracle cost", "[astar]") {
  testing::Rng rng(testing::test_seed() ^ 0xccc);
  SearchOptions zero;
  zero.heuristic = HeuristicKind::Zero;
  for (int i = 0; i < 15; ++i) {
    const Scenario scenario = testing::random_solvable_scenario(rng);
    const PlanResult astar_result = plan(scenario, zero);
    const PlanResult oracle_result = ucs_plan(scenario);
    REQUIRE(astar_result.found());
    REQUIRE(oracle_result.found());
    CHECK(astar_result.plan->total_cost == oracle_result.plan->total_cost);
  }
}

TEST_CASE("informed cost never undercuts the uninformed cost", "[astar]") {
  testing::Rng rng(testing::test_seed() ^ 0xddd);
  SearchOptions zero;
  zero.heuristic = HeuristicKind::Zero;
  for (int i = 0; i < 15; ++i) {
    const Scenario scenario = testing::random_solvable_scenario(rng);
    const PlanResult informed = plan(scenario);
    const PlanResult uninformed = plan(scenario, zero);
    REQUIRE(informed.found());
    REQUIRE(uninformed.found());
    CHECK(informed.plan->total_cost >= uninformed.plan->total_cost);
  }
}

TEST_CASE("planner output is deterministic", "[astar]") {
  testing::Rng rng(testing::test_seed() ^ 0xeee);
  for (int i = 0; i < 10; ++i) {
    const Scenario scenario = testing::random_solvable_scenario(rng);
    const PlanResult first = plan(scenario);
    const PlanResult second = plan(scenario);
    REQUIRE(first.found());
    REQUIRE(second.found());
    CHECK(write_plan(*first.plan, scenario) ==
          write_plan(*second.plan, scenario));
  }
}

TEST_CASE("returned plans replay against the validator", "[astar]") {
  testing::Rng rng(testing::test_seed() ^ 0xfff);
  for (int i = 0; i < 25; ++i) {
    const Scenario scenario = testing::random_solvable_scenario(rng);
    const PlanResult result = plan(scenario);
    REQUIRE(result.found());
    const ValidationReport report = validate_plan(scenario, *result.plan);
    CHECK(report.ok);
    CHECK(report.replayed_cost == result.plan->total_cost);
    CHECK(result.stats.expanded <= result.stats.generated);
  }
}

TEST_CASE("replayed intermediate states are pairwise distinct", "[astar]") {
  testing::Rng rng(testing::test_seed() ^ 0xabc);
  for (int i = 0; i < 10; ++i) {
    const Scenario scenario = testing::random_solvable_scenario(rng);
    const PlanResult result = plan(scenario);
    REQUIRE(result.found());
    std::set<std::string> keys;
    GridState state = scenario.start;
    keys.insert(canonical_key(state));
    for (const JointAction& action : result.plan->steps) {
      state = apply_joint(state, action, scenario.options);
      CHECK(keys.insert(canonical_key(state)).second);
    }
    CHECK(is_goal(state, scenario.goal));
  }
}

}  // namespace
}  // namespace reconfig
