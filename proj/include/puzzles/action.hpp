#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "puzzles/core.hpp"

namespace puzzles {

enum class Dir : std::uint8_t { up, down, left, right };
inline constexpr std::array<Dir, 4> kDirs = {Dir::up, Dir::down, Dir::left, Dir::right};
inline constexpr int kDirRow[4] = {-1, 1, 0, 0};
inline constexpr int kDirCol[4] = {0, 0, -1, 1};

std::string_view dir_name(Dir dir);
Dir opposite(Dir dir);

enum class Axis : std::uint8_t { x, y, z };
enum class Turn : std::uint8_t { cw, ccw };

// One struct per token shape of the action grammar.

/// `up|down|left|right` (sokoban, bloxorz)
struct Move {
  Dir dir;
  bool operator==(const Move&) const = default;
};
/// `slide(V,dir,n)` (rush hour)
struct Slide {
  char vehicle;
  Dir dir;
  int distance;
  bool operator==(const Slide&) const = default;
};
/// `rotate(Pk,deg)` (tangram); relative, counterclockwise
struct PieceRotate {
  int piece;
  int degrees;
  bool operator==(const PieceRotate&) const = default;
};
/// `rotate(Pk,cw|ccw)` (jigsaw)
struct PieceTurn {
  int piece;
  Turn turn;
  bool operator==(const PieceTurn&) const = default;
};
/// `place(Pk,row,col)` (tangram, jigsaw)
struct PiecePlace {
  int piece;
  int row;
  int col;
  bool operator==(const PiecePlace&) const = default;
};
/// `rotate(k,deg)` (char recognition); relative, counterclockwise
struct FragmentRotate {
  int fragment;
  int degrees;
  bool operator==(const FragmentRotate&) const = default;
};
/// `place(k,slot)` (char recognition), slot is a letter label
struct FragmentPlace {
  int fragment;
  char slot;
  bool operator==(const FragmentPlace&) const = default;
};
/// `rotate(+15|-15)` (2D rotation)
struct Spin {
  int degrees;
  bool operator==(const Spin&) const = default;
};
/// `rotate(x|y|z,+15|-15)` (3D rotation)
struct AxisSpin {
  Axis axis;
  int degrees;
  bool operator==(const AxisSpin&) const = default;
};
/// `swap(i,j)` (anagram)
struct Swap {
  int i;
  int j;
  bool operator==(const Swap&) const = default;
};
/// `identify(x)` (anagram, char recognition)
struct Identify {
  std::string text;
  bool operator==(const Identify&) const = default;
};

using Action = std::variant<Move, Slide, PieceRotate, PieceTurn, PiecePlace, FragmentRotate,
                            FragmentPlace, Spin, AxisSpin, Swap, Identify>;

/// Canonical wire spelling of an action.
std::string render_action(const Action& action);

/// Parses one token of `game`'s grammar. Surrounding whitespace is ignored;
/// error offsets index into `text` as given.
Result<Action> parse_action(GameId game, std::string_view text);

}  // namespace puzzles
