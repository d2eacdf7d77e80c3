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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reconfig/astar.hpp"
#include "reconfig/bench.hpp"
#include "reconfig/oracle.hpp"
#include "reconfig/scenario_io.hpp"
#include "reconfig/validator.hpp"

// Command-line front end. Exit codes: 0 success / plan found, 1 usage or
// input error, 2 no plan exists, 3 resource limit hit. Timings go to the
// bench CSV only, so plan/validate/render output stays byte-stable.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoPlan = 2;
constexpr int kExitResourceExhausted = 3;

struct PlanArgs {
  std::string scenario_path;
  std::string heuristic = "paper";
  std::string out_path;
  int max_parallel = -1;
  double time_limit_s = -1.0;
  std::uint64_t max_expanded = 0;
  bool no_reopen = false;
};

reconfig::SearchOptions search_options(const PlanArgs& args) {
  reconfig::SearchOptions options;
  options.heuristic = args.heuristic == "zero"
                          ? reconfig::HeuristicKind::Zero
                          : reconfig::HeuristicKind::Paper;
  if (args.max_parallel >= 0) options.max_parallel = args.max_parallel;
  if (args.time_limit_s > 0) options.time_limit_s = args.time_limit_s;
  if (args.max_expanded > 0) options.max_expanded = args.max_expanded;
  options.reopen_closed = !args.no_reopen;
  return options;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitError;
  }
  out << text;
  return kExitOk;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw reconfig::ScenarioError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_plan(const PlanArgs& args) {
  const reconfig::Scenario scenario =
      reconfig::load_scenario_file(args.scenario_path);
  const reconfig::PlanResult result =
      reconfig::plan(scenario, search_options(args));
  switch (result.status) {
    case reconfig::PlanStatus::Found:
      return write_text(args.out_path,
                        reconfig::write_plan(*result.plan, scenario));
    case reconfig::PlanStatus::NoPlan:
      std::cerr << "no plan\n";
      return kExitNoPlan;
    case reconfig::PlanStatus::ResourceExhausted:
      std::cerr << "resource limit exceeded\n";
      return kExitResourceExhausted;
  }
  return kExitError;
}

int cmd_validate(const std::string& scenario_path,
                 const std::string& plan_path) {
  const reconfig::Scenario scenario =
      reconfig::load_scenario_file(scenario_path);
  const reconfig::Plan plan = reconfig::parse_plan(read_text(plan_path));
  const reconfig::ValidationReport report =
      reconfig::validate_plan(scenario, plan);
  if (report.ok) {
    std::cout << "ok cost=" << report.replayed_cost << "\n";
    return kExitOk;
  }
  std::cout << "invalid at step " << report.failing_step << ": "
            << report.reason << "\n";
  return kExitError;
}

int cmd_render(const std::string& scenario_path, const std::string& plan_path) {
  const reconfig::Scenario scenario =
      reconfig::load_scenario_file(scenario_path);
  reconfig::GridState state = scenario.start;
  std::cout << reconfig::render_ascii(state);
  if (plan_path.empty()) return kExitOk;
  const reconfig::Plan plan = reconfig::parse_plan(read_text(plan_path));
  for (const reconfig::JointAction& action : plan.steps) {
    state = reconfig::apply_joint(state, action, scenario.options);
    std::cout << "\n" << reconfig::render_ascii(state);
  }
  return kExitOk;
}

int cmd_bench(const std::string& csv_path, int repeat, const PlanArgs& args) {
  const std::vector<reconfig::BenchRow> rows =
      reconfig::run_benchmark(repeat, search_options(args));
  const std::string csv = reconfig::benchmark_csv(rows);
  bool all_solved = true;
  for (const reconfig::BenchRow& row : rows) all_solved &= row.cost >= 0;
  const int status = write_text(csv_path, csv);
  if (status != kExitOk) return status;
  if (!csv_path.empty()) {
    std::cerr << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  }
  return all_solved ? kExitOk : kExitResourceExhausted;
}

int cmd_audit(const std::string& scenario_path, const PlanArgs& args) {
  const reconfig::Scenario scenario =
      reconfig::load_scenario_file(scenario_path);
  const reconfig::AuditReport report =
      reconfig::audit_heuristic(scenario, search_options(args));
  std::cout << "h_start: " << report.h_at_start << "\n";
  if (report.status != reconfig::PlanStatus::Found) {
    std::cout << (report.status == reconfig::PlanStatus::NoPlan
                      ? "optimal: none (no plan exists)\n"
                      : "optimal: unknown (oracle resource limit)\n");
    return report.status == reconfig::PlanStatus::NoPlan
               ? kExitNoPlan
               : kExitResourceExhausted;
  }
  std::cout << "optimal: " << report.optimal_cost << "\n";
  std::cout << "astar: " << report.astar_cost << "\n";
  std::cout << "admissible: " << (report.admissible_here ? "yes" : "no")
            << "\n";
  std::cout << "astar_optimal: " << (report.astar_optimal ? "yes" : "no")
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-robot block reconfiguration planner"};
  app.require_subcommand(1);

  PlanArgs args;
  std::string plan_path;
  std::string csv_path;
  std::string suite = "default";
  int repeat = 1;

  CLI::App* plan_cmd = app.add_subcommand("plan", "search for a plan");
  plan_cmd->add_option("--scenario", args.scenario_path, "scenario file")
      ->required();
  plan_cmd->add_option("--heuristic", args.heuristic, "paper|zero")
      ->check(CLI::IsMember({"paper", "zero"}));
  plan_cmd->add_option("--max-parallel", args.max_parallel,
                       "cap on primitives per step");
  plan_cmd->add_option("--time-limit", args.time_limit_s, "seconds");
  plan_cmd->add_option("--max-expanded", args.max_expanded,
                       "expansion cap");
  plan_cmd->add_flag("--no-reopen", args.no_reopen,
                     "never reopen closed states");
  plan_cmd->add_option("--out", args.out_path, "plan output file");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "replay a plan against a scenario");
  validate_cmd->add_option("--scenario", args.scenario_path, "scenario file")
      ->required();
  validate_cmd->add_option("--plan", plan_path, "plan file")->required();

  CLI::App* render_cmd =
      app.add_subcommand("render", "print state frames");
  render_cmd->add_option("--scenario", args.scenario_path, "scenario file")
      ->required();
  render_cmd->add_option("--plan", plan_path, "plan file");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run the graded task suite");
  bench_cmd->add_option("--suite", suite, "suite name (default)")
      ->check(CLI::IsMember({"default"}));
  bench_cmd->add_option("--csv", csv_path, "CSV output file");
  bench_cmd->add_option("--repeat", repeat, "repeats per cell (median)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--time-limit", args.time_limit_s, "seconds");
  bench_cmd->add_option("--max-expanded", args.max_expanded, "expansion cap");

  CLI::App* audit_cmd =
      app.add_subcommand("audit", "compare heuristic against the oracle");
  audit_cmd->add_option("--scenario", args.scenario_path, "scenario file")
      ->required();
  audit_cmd->add_option("--time-limit", args.time_limit_s, "seconds");
  audit_cmd->add_option("--max-expanded", args.max_expanded, "expansion cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (plan_cmd->parsed()) return cmd_plan(args);
    if (validate_cmd->parsed()) return cmd_validate(args.scenario_path,
                                                    plan_path);
    if (render_cmd->parsed()) return cmd_render(args.scenario_path, plan_path);
    if (bench_cmd->parsed()) return cmd_bench(csv_path, repeat, args);
    if (audit_cmd->parsed()) return cmd_audit(args.scenario_path, args);
  } catch (const reconfig::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const reconfig::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
