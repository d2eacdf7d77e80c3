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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Lattice world model: a dense 2D grid of cells that are empty, hold a
// passive block, or hold a block with a robot inside. y grows upward and
// y = 0 is the ground row; "lift" always means +y.

namespace reconfig {

/// Raised for semantically invalid scenarios (dimension or count mismatches,
/// missing robots, oversized worlds).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Coord {
  int x = 0;
  int y = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

inline std::string to_string(Coord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

enum class Cell : std::uint8_t { Empty = 0, Block = 1, BlockWithRobot = 2 };

inline bool has_block(Cell c) { return c != Cell::Empty; }
inline bool has_robot(Cell c) { return c == Cell::BlockWithRobot; }

inline char cell_to_char(Cell c) {
  switch (c) {
    case Cell::Empty:
      return '.';
    case Cell::Block:
      return '#';
    case Cell::BlockWithRobot:
      return 'R';
  }
  return '?';
}

inline std::optional<Cell> cell_from_char(char ch) {
  switch (ch) {
    case '.':
      return Cell::Empty;
    case '#':
      return Cell::Block;
    case 'R':
      return Cell::BlockWithRobot;
    default:
      return std::nullopt;
  }
}

/// Dense row-major grid of cells. Treated as an immutable value by the
/// planner: primitive application copies the state and edits the copy.
class GridState {
 public:
  GridState() = default;

  GridState(int width, int height)
      : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
      throw ScenarioError("grid dimensions must be positive");
    }
    cells_.assign(static_cast<std::size_t>(width) * height, Cell::Empty);
  }

  int width() const { return width_; }
  int height() const { return height_; }

  bool in_bounds(Coord c) const {
    return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
  }

  Cell at(Coord c) const {
    check_bounds(c);
    return cells_[index(c)];
  }

  void set(Coord c, Cell cell) {
    check_bounds(c);
    cells_[index(c)] = cell;
  }

  int block_count() const {
    int n = 0;
    for (Cell c : cells_) n += has_block(c) ? 1 : 0;
    return n;
  }

  int robot_count() const {
    int n = 0;
    for (Cell c : cells_) n += has_robot(c) ? 1 : 0;
    return n;
  }

  /// Robot-bearing cells in row-major order (y ascending, then x).
  std::vector<Coord> robot_cells() const {
    std::vector<Coord> out;
    for (int y = 0; y < height_; ++y) {
      for (int x = 0; x < width_; ++x) {
        if (has_robot(cells_[index({x, y})])) out.push_back({x, y});
      }
    }
    return out;
  }

  const std::vector<Cell>& cells() const { return cells_; }

  friend bool operator==(const GridState&, const GridState&) = default;

 private:
  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.y) * width_ + c.x;
  }

  void check_bounds(Coord c) const {
    if (!in_bounds(c)) {
      throw std::out_of_range("coordinate " + to_string(c) +
                              " outside " + std::to_string(width_) + "x" +
                              std::to_string(height_) + " grid");
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Cell> cells_;
};

/// Goal arrangement: which cells must hold a block (robot positions are
/// not part of the goal).
struct GoalSpec {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;  // 1 = block required

  bool block_at(Coord c) const {
    return mask[static_cast<std::size_t>(c.y) * width + c.x] != 0;
  }

  int block_count() const {
    int n = 0;
    for (auto b : mask) n += b ? 1 : 0;
    return n;
  }

  friend bool operator==(const GoalSpec&, const GoalSpec&) = default;
};

/// Canonical search key: dimensions plus the row-major cell tags. Robots are
/// anonymous, so states whose grids agree cell-for-cell share one key.
inline std::string canonical_key(const GridState& s) {
  std::string key;
  key.reserve(s.cells().size() + 8);
  key += std::to_string(s.width());
  key += 'x';
  key += std::to_string(s.height());
  key += ':';
  for (Cell c : s.cells()) key += cell_to_char(c);
  return key;
}

inline void check_same_dims(const GridState& s, const GoalSpec& g) {
  if (s.width() != g.width || s.height() != g.height) {
    throw ScenarioError("state is " + std::to_string(s.width()) + "x" +
                        std::to_string(s.height()) + " but goal is " +
                        std::to_string(g.width) + "x" +
                        std::to_string(g.height));
  }
}

/// True iff block occupancy matches the goal mask everywhere. Robot
/// positions are ignored.
inline bool is_goal(const GridState& s, const GoalSpec& g) {
  check_same_dims(s, g);
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      if (has_block(s.at({x, y})) != g.block_at({x, y})) return false;
    }
  }
  return true;
}

/// Blocks standing on cells the goal wants empty, row-major, each flagged
/// with robot presence.
inline std::vector<std::pair<Coord, bool>> misplaced_blocks(
    const GridState& s, const GoalSpec& g) {
  check_same_dims(s, g);
  std::vector<std::pair<Coord, bool>> out;
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      Cell c = s.at({x, y});
      if (has_block(c) && !g.block_at({x, y})) {
        out.emplace_back(Coord{x, y}, has_robot(c));
      }
    }
  }
  return out;
}

/// Text frame: one line per row, top row first, trailing newline.
/// '.' empty, '#' block, 'R' block with robot.
inline std::string render_ascii(const GridState& s) {
  std::string out;
  out.reserve(static_cast<std::size_t>(s.height()) * (s.width() + 1));
  for (int y = s.height() - 1; y >= 0; --y) {
    for (int x = 0; x < s.width(); ++x) out += cell_to_char(s.at({x, y}));
    out += '\n';
  }
  return out;
}

inline std::string render_ascii(const GoalSpec& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.height) * (g.width + 1));
  for (int y = g.height - 1; y >= 0; --y) {
    for (int x = 0; x < g.width; ++x) out += g.block_at({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

/// Parses a bare grid frame (the render_ascii format). Intended for tests
/// and golden files; scenario files go through parse_scenario instead.
inline GridState parse_ascii(const std::string& text) {
  std::vector<std::string> rows;
  std::string row;
  for (char ch : text) {
    if (ch == '\n') {
      rows.push_back(row);
      row.clear();
    } else {
      row += ch;
    }
  }
  if (!row.empty()) rows.push_back(row);
  if (rows.empty()) throw ScenarioError("empty grid text");
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.front().size());
  GridState s(width, height);
  for (int i = 0; i < height; ++i) {
    const std::string& line = rows[i];
    if (static_cast<int>(line.size()) != width) {
      throw ScenarioError("ragged grid row: \"" + line + "\"");
    }
    const int y = height - 1 - i;  // top row first
    for (int x = 0; x < width; ++x) {
      auto cell = cell_from_char(line[x]);
      if (!cell) throw ScenarioError(std::string("unknown grid character '") +
                                     line[x] + "'");
      s.set({x, y}, *cell);
    }
  }
  return s;
}

/// Goal mask built from a state's block occupancy.
inline GoalSpec goal_from_state(const GridState& s) {
  GoalSpec g;
  g.width = s.width();
  g.height = s.height();
  g.mask.assign(s.cells().size(), 0);
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      g.mask[static_cast<std::size_t>(y) * g.width + x] =
          has_block(s.at({x, y})) ? 1 : 0;
    }
  }
  return g;
}

}  // namespace reconfig
