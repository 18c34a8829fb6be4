#pragma once

// Sokoban, bloxorz and rush hour state machines.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "puzzles/action.hpp"
#include "puzzles/core.hpp"

namespace puzzles {

// ---------------------------------------------------------------------------
// Sokoban

/// Board of at most 64 cells; cell sets are bitmasks over row-major indices.
struct SokobanState {
  int width = 0;
  int height = 0;
  std::uint64_t walls = 0;
  std::uint64_t goals = 0;
  std::uint64_t boxes = 0;
  int player = 0;

  bool operator==(const SokobanState&) const = default;

  int index(int row, int col) const { return row * width + col; }
  bool in_bounds(int row, int col) const {
    return row >= 0 && col >= 0 && row < height && col < width;
  }
  static bool test(std::uint64_t mask, int cell) { return (mask >> cell) & 1U; }

  /// Rows separated by '/', using the textual grid alphabet
  /// (# wall, . floor, @ player, + player on goal, O box, * box on goal, X goal).
  static Result<SokobanState> parse(std::string_view rows);
  /// Throws PuzzleError(invalid_argument) when an invariant fails.
  void validate() const;
};

Result<SokobanState> sokoban_step(const SokobanState& state, Dir dir);
bool sokoban_is_goal(const SokobanState& state);

// ---------------------------------------------------------------------------
// Bloxorz

enum class Tile : std::uint8_t { absent, solid, fragile, broken };
enum class Orientation : std::uint8_t { standing, lying_x, lying_y };

/// Anchor is the top-left covered cell; lying_x extends one column right,
/// lying_y one row down.
struct Block {
  int row = 0;
  int col = 0;
  Orientation orientation = Orientation::standing;

  bool operator==(const Block&) const = default;

  int cell_count() const { return orientation == Orientation::standing ? 1 : 2; }
  std::array<std::array<int, 2>, 2> cells() const;
  bool covers(int row, int col) const;
};

Block roll(const Block& block, Dir dir);

struct BloxorzState {
  int width = 0;
  int height = 0;
  std::vector<Tile> tiles;  // row-major
  int goal_row = 0;
  int goal_col = 0;
  Block block;

  bool operator==(const BloxorzState&) const = default;

  bool in_bounds(int row, int col) const {
    return row >= 0 && col >= 0 && row < height && col < width;
  }
  Tile tile(int row, int col) const {
    return in_bounds(row, col) ? tiles[static_cast<std::size_t>(row * width + col)] : Tile::absent;
  }
  bool has_fragile() const;
  int broken_count() const;

  /// Rows separated by '/': '#' absent, '.' solid, ':' fragile, 'x' broken, 'G' goal.
  static Result<BloxorzState> parse(std::string_view rows, Block block);
  void validate() const;
};

Result<BloxorzState> bloxorz_step(const BloxorzState& state, Dir dir);
bool bloxorz_is_goal(const BloxorzState& state);

// ---------------------------------------------------------------------------
// Rush hour

inline constexpr int kRushHourSize = 6;

struct Vehicle {
  char letter = 'A';
  bool horizontal = true;
  int length = 2;
  int row = 0;
  int col = 0;

  bool operator==(const Vehicle&) const = default;
  bool covers(int r, int c) const {
    return horizontal ? (r == row && c >= col && c < col + length)
                      : (c == col && r >= row && r < row + length);
  }
};

struct RushHourState {
  std::vector<Vehicle> vehicles;  // sorted by letter, 'A' first
  int exit_row = 2;

  bool operator==(const RushHourState&) const = default;

  const Vehicle* find(char letter) const;
  /// Letter per cell, '.' when empty.
  std::array<char, kRushHourSize * kRushHourSize> occupancy() const;
  void validate() const;
};

Result<RushHourState> rushhour_step(const RushHourState& state, char vehicle, Dir dir,
                                    int distance);
bool rushhour_is_goal(const RushHourState& state);
/// Letters (ascending) of vehicles on the cells strictly between A's right end
/// and the exit.
std::vector<char> blocking_vehicles(const RushHourState& state);

}  // namespace puzzles
