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

#include <cstdint>
#include <optional>

#include "reconfig/costs.hpp"

namespace reconfig {

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  std::uint64_t reopened = 0;
  std::uint64_t peak_open = 0;
  double duration_s = 0.0;
};

/// Ordered joint actions taking the start state to a goal state.
struct Plan {
  std::vector<JointAction> steps;
  int total_cost = 0;
  SearchStats stats;
};

enum class PlanStatus : std::uint8_t { Found, NoPlan, ResourceExhausted };

struct PlanResult {
  PlanStatus status = PlanStatus::NoPlan;
  std::optional<Plan> plan;
  SearchStats stats;

  bool found() const { return status == PlanStatus::Found; }
};

struct SearchOptions {
  HeuristicKind heuristic = HeuristicKind::Paper;
  std::uint64_t max_expanded = 5'000'000;
  double time_limit_s = 120.0;
  bool reopen_closed = true;  // reopen closed states reached with lower g
  std::optional<int> max_parallel;  // overrides the scenario option when set
};

}  // namespace reconfig
