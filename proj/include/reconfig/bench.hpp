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
#include <cstdio>
#include <string>
#include <vector>

#include "reconfig/oracle.hpp"
#include "reconfig/scenario_io.hpp"

// Planning-time benchmark over the graded task suite: one row per
// (task, robot count) cell. Costs and node counts are deterministic; only
// time_ms varies, reported as the median of the requested repeats.

namespace reconfig {

struct BenchRow {
  std::string task;
  int robots = 0;
  double time_ms = 0.0;
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  int cost = -1;   // -1 when unsolved within caps
  int steps = -1;
};

namespace detail {

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace detail

/// Runs the task suite `repeat` times per cell and reports the median time.
inline std::vector<BenchRow> run_benchmark(int repeat = 1,
                                           const SearchOptions& options = {}) {
  if (repeat < 1) repeat = 1;
  std::vector<BenchRow> rows;
  for (const Scenario& scenario : generate_task_suite()) {
    BenchRow row;
    const auto underscore = scenario.name.find('_');
    row.task = scenario.name.substr(0, underscore);
    row.robots = scenario.start.robot_count();

    std::vector<double> times;
    times.reserve(repeat);
    for (int k = 0; k < repeat; ++k) {
      const PlanResult result = plan(scenario, options);
      times.push_back(result.stats.duration_s * 1000.0);
      if (k == 0 && result.found()) {
        row.expanded = result.stats.expanded;
        row.generated = result.stats.generated;
        row.cost = result.plan->total_cost;
        row.steps = static_cast<int>(result.plan->steps.size());
      }
    }
    row.time_ms = detail::median(std::move(times));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// CSV with the fixed header `task,robots,time_ms,expanded,generated,cost,steps`.
inline std::string benchmark_csv(const std::vector<BenchRow>& rows) {
  std::string out = "task,robots,time_ms,expanded,generated,cost,steps\n";
  char buf[64];
  for (const BenchRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.3f", row.time_ms);
    out += row.task + "," + std::to_string(row.robots) + "," + buf + "," +
           std::to_string(row.expanded) + "," +
           std::to_string(row.generated) + "," + std::to_string(row.cost) +
           "," + std::to_string(row.steps) + "\n";
  }
  return out;
}

}  // namespace reconfig
