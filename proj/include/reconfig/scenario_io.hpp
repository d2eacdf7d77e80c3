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

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "reconfig/plan.hpp"

// Scenario text format:
//
//   [start]
//   ..R#.
//   .####
//   [goal]
//   ...##
//   .####
//   [options]
//   name = example
//   ground_shift = false
//   max_parallel = 2
//
// Grids list the top row first and use the frame alphabet ('.', '#', 'R');
// goal grids may not contain robots. All rows of a grid must have equal
// length. The [options] section is optional, as is each key.
//
// Plan text format: a fixed header (scenario name, cost, steps, search
// counters) followed by one line per step, primitives joined by "; ", each
// rendered as KIND DIR @(x,y) with an optional "catcher @(x,y)" suffix.

namespace reconfig {

/// Syntax error with 1-based line and column (column 0 = whole line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) +
                           (column > 0 ? ", column " + std::to_string(column)
                                       : "") +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Scenario {
  std::string name;
  int width = 0;
  int height = 0;
  GridState start;
  GoalSpec goal;
  WorldOptions options;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr int kMaxWorldSide = 64;

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += ch;
    }
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace detail

/// Validates the cross-section invariants of a parsed scenario.
inline void validate_scenario(const Scenario& s) {
  if (s.width <= 0 || s.height <= 0) {
    throw ScenarioError("zero dimensions");
  }
  if (s.width > kMaxWorldSide || s.height > kMaxWorldSide) {
    throw ScenarioError("world exceeds " + std::to_string(kMaxWorldSide) +
                        "x" + std::to_string(kMaxWorldSide));
  }
  if (s.start.width() != s.goal.width || s.start.height() != s.goal.height) {
    throw ScenarioError("start and goal dimensions differ");
  }
  const int start_blocks = s.start.block_count();
  const int goal_blocks = s.goal.block_count();
  if (start_blocks != goal_blocks) {
    throw ScenarioError("block count mismatch " +
                        std::to_string(start_blocks) + " vs " +
                        std::to_string(goal_blocks));
  }
  if (s.options.max_parallel < 0) {
    throw ScenarioError("max_parallel must be nonnegative");
  }
}

inline Scenario parse_scenario(const std::string& text) {
  const std::vector<std::string> lines = detail::split_lines(text);

  struct GridBlock {
    std::vector<std::string> rows;
    std::vector<int> line_numbers;
  };
  GridBlock start_block, goal_block;
  bool seen_start = false, seen_goal = false, seen_options = false;
  std::string name;
  WorldOptions options;

  enum class Section { None, Start, Goal, Options };
  Section section = Section::None;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::string trimmed = detail::trim(lines[i]);
    if (trimmed.empty()) continue;

    if (trimmed.front() == '[') {
      if (trimmed == "[start]") {
        if (seen_start) throw ParseError(line_no, 0, "duplicate [start]");
        seen_start = true;
        section = Section::Start;
      } else if (trimmed == "[goal]") {
        if (seen_goal) throw ParseError(line_no, 0, "duplicate [goal]");
        seen_goal = true;
        section = Section::Goal;
      } else if (trimmed == "[options]") {
        if (seen_options) throw ParseError(line_no, 0, "duplicate [options]");
        seen_options = true;
        section = Section::Options;
      } else {
        throw ParseError(line_no, 0, "unknown section " + trimmed);
      }
      continue;
    }

    switch (section) {
      case Section::None:
        throw ParseError(line_no, 0, "content before any section header");
      case Section::Start:
        start_block.rows.push_back(trimmed);
        start_block.line_numbers.push_back(line_no);
        break;
      case Section::Goal:
        goal_block.rows.push_back(trimmed);
        goal_block.line_numbers.push_back(line_no);
        break;
      case Section::Options: {
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
          throw ParseError(line_no, 0, "expected key = value");
        }
        const std::string key = detail::trim(trimmed.substr(0, eq));
        const std::string value = detail::trim(trimmed.substr(eq + 1));
        if (key == "name") {
          name = value;
        } else if (key == "ground_shift") {
          if (value == "true") {
            options.ground_shift = true;
          } else if (value == "false") {
            options.ground_shift = false;
          } else {
            throw ParseError(line_no, 0,
                             "ground_shift must be true or false");
          }
        } else if (key == "max_parallel") {
          try {
            options.max_parallel = std::stoi(value);
          } catch (const std::exception&) {
            throw ParseError(line_no, 0, "max_parallel must be an integer");
          }
          if (options.max_parallel < 0) {
            throw ParseError(line_no, 0, "max_parallel must be nonnegative");
          }
        } else {
          throw ParseError(line_no, 0, "unknown option " + key);
        }
        break;
      }
    }
  }

  if (!seen_start) throw ParseError(static_cast<int>(lines.size()), 0,
                                    "missing [start] section");
  if (!seen_goal) throw ParseError(static_cast<int>(lines.size()), 0,
                                   "missing [goal] section");
  if (start_block.rows.empty()) {
    throw ParseError(static_cast<int>(lines.size()), 0, "zero dimensions");
  }
  if (goal_block.rows.empty()) {
    throw ParseError(static_cast<int>(lines.size()), 0, "zero dimensions");
  }

  auto parse_grid = [](const GridBlock& block, bool allow_robot) {
    const int height = static_cast<int>(block.rows.size());
    const int width = static_cast<int>(block.rows.front().size());
    GridState grid(width, height);
    for (int i = 0; i < height; ++i) {
      const std::string& row = block.rows[i];
      const int line_no = block.line_numbers[i];
      if (static_cast<int>(row.size()) != width) {
        throw ParseError(line_no, 0, "ragged grid row (expected width " +
                                         std::to_string(width) + ")");
      }
      const int y = height - 1 - i;
      for (int x = 0; x < width; ++x) {
        const auto cell = cell_from_char(row[x]);
        if (!cell) {
          throw ParseError(line_no, x + 1,
                           std::string("unknown grid character '") + row[x] +
                               "'");
        }
        if (!allow_robot && *cell == Cell::BlockWithRobot) {
          throw ParseError(line_no, x + 1, "robot in goal");
        }
        grid.set({x, y}, *cell);
      }
    }
    return grid;
  };

  Scenario scenario;
  scenario.name = name;
  scenario.options = options;
  scenario.start = parse_grid(start_block, /*allow_robot=*/true);
  scenario.goal = goal_from_state(parse_grid(goal_block, /*allow_robot=*/false));
  scenario.width = scenario.start.width();
  scenario.height = scenario.start.height();
  validate_scenario(scenario);
  return scenario;
}

inline std::string serialize_scenario(const Scenario& s) {
  std::string out;
  out += "[start]\n";
  out += render_ascii(s.start);
  out += "[goal]\n";
  out += render_ascii(s.goal);
  const bool any_option = !s.name.empty() || s.options.ground_shift ||
                          s.options.max_parallel > 0;
  if (any_option) {
    out += "[options]\n";
    if (!s.name.empty()) out += "name = " + s.name + "\n";
    if (s.options.ground_shift) out += "ground_shift = true\n";
    if (s.options.max_parallel > 0) {
      out += "max_parallel = " + std::to_string(s.options.max_parallel) + "\n";
    }
  }
  return out;
}

inline Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

// ---------------------------------------------------------------------------
// Plan text

namespace detail {

inline const char* kind_token(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::MoveRobot:
      return "MOVE";
    case PrimitiveKind::LiftBlock:
      return "LIFT";
    case PrimitiveKind::PutDownBlock:
      return "PUT";
    case PrimitiveKind::ShiftBlock:
      return "SHIFT";
    case PrimitiveKind::CoopLiftUp:
      return "COOP";
  }
  return "?";
}

inline std::optional<PrimitiveKind> kind_from_token(std::string_view token) {
  if (token == "MOVE") return PrimitiveKind::MoveRobot;
  if (token == "LIFT") return PrimitiveKind::LiftBlock;
  if (token == "PUT") return PrimitiveKind::PutDownBlock;
  if (token == "SHIFT") return PrimitiveKind::ShiftBlock;
  if (token == "COOP") return PrimitiveKind::CoopLiftUp;
  return std::nullopt;
}

inline std::string primitive_text(const MotionPrimitive& prim) {
  std::string out = kind_token(prim.kind);
  out += ' ';
  out += direction_to_char(prim.dir);
  out += " @";
  out += to_string(prim.actor);
  if (prim.kind == PrimitiveKind::CoopLiftUp) {
    out += " catcher @";
    out += to_string(prim.catcher);
  }
  return out;
}

inline Coord parse_coord_at(std::string_view text, int line_no) {
  // Expects "@(x,y)".
  if (text.size() < 6 || text[0] != '@' || text[1] != '(' ||
      text.back() != ')') {
    throw ParseError(line_no, 0, "malformed coordinate: " + std::string(text));
  }
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError(line_no, 0, "malformed coordinate: " + std::string(text));
  }
  try {
    Coord c;
    c.x = std::stoi(std::string(text.substr(2, comma - 2)));
    c.y = std::stoi(std::string(text.substr(comma + 1,
                                            text.size() - comma - 2)));
    return c;
  } catch (const std::exception&) {
    throw ParseError(line_no, 0, "malformed coordinate: " + std::string(text));
  }
}

inline MotionPrimitive parse_primitive_text(const std::string& text,
                                            int line_no) {
  std::istringstream in(text);
  std::string kind_tok, dir_tok, actor_tok;
  in >> kind_tok >> dir_tok >> actor_tok;
  const auto kind = kind_from_token(kind_tok);
  if (!kind) throw ParseError(line_no, 0, "unknown primitive " + kind_tok);
  if (dir_tok.size() != 1 || !direction_from_char(dir_tok[0])) {
    throw ParseError(line_no, 0, "unknown direction " + dir_tok);
  }
  MotionPrimitive prim;
  prim.kind = *kind;
  prim.dir = *direction_from_char(dir_tok[0]);
  prim.actor = parse_coord_at(actor_tok, line_no);
  if (*kind == PrimitiveKind::CoopLiftUp) {
    std::string catcher_kw, catcher_tok;
    in >> catcher_kw >> catcher_tok;
    if (catcher_kw != "catcher") {
      throw ParseError(line_no, 0, "coop primitive missing catcher");
    }
    prim.catcher = parse_coord_at(catcher_tok, line_no);
  }
  return prim;
}

inline std::uint64_t parse_header_u64(const std::string& line,
                                      std::string_view key, int line_no) {
  const std::string prefix = std::string(key) + ": ";
  if (line.rfind(prefix, 0) != 0) {
    throw ParseError(line_no, 0, "expected \"" + prefix + "...\"");
  }
  try {
    return std::stoull(line.substr(prefix.size()));
  } catch (const std::exception&) {
    throw ParseError(line_no, 0, "malformed number in header");
  }
}

}  // namespace detail

/// Deterministic, line-oriented plan text. Wall-clock duration is omitted so
/// the output is byte-stable.
inline std::string write_plan(const Plan& plan, const Scenario& scenario) {
  std::string out;
  out += "scenario: " + scenario.name + "\n";
  out += "cost: " + std::to_string(plan.total_cost) + "\n";
  out += "steps: " + std::to_string(plan.steps.size()) + "\n";
  out += "expanded: " + std::to_string(plan.stats.expanded) + "\n";
  out += "generated: " + std::to_string(plan.stats.generated) + "\n";
  out += "reopened: " + std::to_string(plan.stats.reopened) + "\n";
  for (const JointAction& action : plan.steps) {
    for (std::size_t i = 0; i < action.primitives.size(); ++i) {
      if (i > 0) out += "; ";
      out += detail::primitive_text(action.primitives[i]);
    }
    out += '\n';
  }
  return out;
}

/// Parses plan text back into a Plan (steps, cost, and search counters; the
/// wall-clock duration is not serialized).
inline Plan parse_plan(const std::string& text) {
  const std::vector<std::string> lines = detail::split_lines(text);
  if (lines.size() < 6) {
    throw ParseError(static_cast<int>(lines.size()), 0,
                     "plan header truncated");
  }
  if (lines[0].rfind("scenario: ", 0) != 0 && lines[0] != "scenario:") {
    throw ParseError(1, 0, "expected \"scenario: ...\"");
  }
  Plan plan;
  plan.total_cost =
      static_cast<int>(detail::parse_header_u64(lines[1], "cost", 2));
  const std::uint64_t steps = detail::parse_header_u64(lines[2], "steps", 3);
  plan.stats.expanded = detail::parse_header_u64(lines[3], "expanded", 4);
  plan.stats.generated = detail::parse_header_u64(lines[4], "generated", 5);
  plan.stats.reopened = detail::parse_header_u64(lines[5], "reopened", 6);

  for (std::size_t i = 6; i < lines.size(); ++i) {
    const std::string line = detail::trim(lines[i]);
    if (line.empty()) continue;
    JointAction action;
    std::size_t pos = 0;
    while (pos < line.size()) {
      auto sep = line.find("; ", pos);
      const std::string piece = line.substr(
          pos, sep == std::string::npos ? std::string::npos : sep - pos);
      action.primitives.push_back(
          detail::parse_primitive_text(piece, static_cast<int>(i) + 1));
      if (sep == std::string::npos) break;
      pos = sep + 2;
    }
    plan.steps.push_back(std::move(action));
  }
  if (plan.steps.size() != steps) {
    throw ParseError(static_cast<int>(lines.size()), 0,
                     "step count mismatch: header says " +
                         std::to_string(steps) + ", found " +
                         std::to_string(plan.steps.size()));
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Benchmark task suite

/// Graded benchmark tasks: task n starts with n+1 blocks in a ground row and
/// rearranges the leftmost blocks into a second story at the right end. Task
/// n is instantiated for robot counts 1..n (robots fill the leftmost blocks),
/// giving 21 scenarios. Layouts are fixed here and shipped under scenarios/.
inline std::vector<Scenario> generate_task_suite() {
  std::vector<Scenario> suite;
  for (int n = 1; n <= 6; ++n) {
    const int blocks = n + 1;
    const int width = blocks + 2;
    const int height = 3;
    const int story = std::min(blocks / 2, 3);  // blocks that move up

    GridState start(width, height);
    for (int b = 1; b <= blocks; ++b) start.set({b, 0}, Cell::Block);

    GridState goal_state(width, height);
    for (int x = story + 1; x <= blocks; ++x) goal_state.set({x, 0}, Cell::Block);
    for (int x = blocks - story + 1; x <= blocks; ++x) {
      goal_state.set({x, 1}, Cell::Block);
    }

    for (int robots = 1; robots <= n; ++robots) {
      Scenario s;
      s.name = "task" + std::to_string(n) + "_r" + std::to_string(robots);
      s.width = width;
      s.height = height;
      s.start = start;
      for (int r = 1; r <= robots; ++r) {
        s.start.set({r, 0}, Cell::BlockWithRobot);
      }
      s.goal = goal_from_state(goal_state);
      validate_scenario(s);
      suite.push_back(std::move(s));
    }
  }
  return suite;
}

}  // namespace reconfig
