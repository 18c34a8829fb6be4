#include <algorithm>

#include "puzzles/sliding.hpp"

namespace puzzles {

std::array<std::array<int, 2>, 2> Block::cells() const {
  switch (orientation) {
    case Orientation::standing: return {{{row, col}, {row, col}}};
    case Orientation::lying_x: return {{{row, col}, {row, col + 1}}};
    case Orientation::lying_y: return {{{row, col}, {row + 1, col}}};
  }
  return {};
}

bool Block::covers(int r, int c) const {
  const auto cs = cells();
  return (cs[0][0] == r && cs[0][1] == c) || (cs[1][0] == r && cs[1][1] == c);
}

Block roll(const Block& b, Dir dir) {
  using O = Orientation;
  switch (b.orientation) {
    case O::standing:
      switch (dir) {
        case Dir::up: return {b.row - 2, b.col, O::lying_y};
        case Dir::down: return {b.row + 1, b.col, O::lying_y};
        case Dir::left: return {b.row, b.col - 2, O::lying_x};
        case Dir::right: return {b.row, b.col + 1, O::lying_x};
      }
      break;
    case O::lying_x:
      switch (dir) {
        case Dir::up: return {b.row - 1, b.col, O::lying_x};
        case Dir::down: return {b.row + 1, b.col, O::lying_x};
        case Dir::left: return {b.row, b.col - 1, O::standing};
        case Dir::right: return {b.row, b.col + 2, O::standing};
      }
      break;
    case O::lying_y:
      switch (dir) {
        case Dir::up: return {b.row - 1, b.col, O::standing};
        case Dir::down: return {b.row + 2, b.col, O::standing};
        case Dir::left: return {b.row, b.col - 1, O::lying_y};
        case Dir::right: return {b.row, b.col + 1, O::lying_y};
      }
      break;
  }
  return b;
}

bool BloxorzState::has_fragile() const {
  return std::any_of(tiles.begin(), tiles.end(),
                     [](Tile t) { return t == Tile::fragile || t == Tile::broken; });
}

int BloxorzState::broken_count() const {
  return static_cast<int>(std::count(tiles.begin(), tiles.end(), Tile::broken));
}

Result<BloxorzState> BloxorzState::parse(std::string_view rows, Block block) {
  BloxorzState s;
  s.block = block;
  int goals = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = rows.find('/', start);
    const std::string_view line =
        rows.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    if (s.height == 0) s.width = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != s.width) {
      return Error{ErrorKind::invalid_argument, "ragged bloxorz rows", start};
    }
    for (std::size_t c = 0; c < line.size(); ++c) {
      Tile t = Tile::absent;
      switch (line[c]) {
        case '#': t = Tile::absent; break;
        case '.': t = Tile::solid; break;
        case ':': t = Tile::fragile; break;
        case 'x': t = Tile::broken; break;
        case 'G':
          t = Tile::solid;
          s.goal_row = s.height;
          s.goal_col = static_cast<int>(c);
          ++goals;
          break;
        default: return Error{ErrorKind::invalid_argument, "bad bloxorz cell", start + c};
      }
      s.tiles.push_back(t);
    }
    ++s.height;
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (goals != 1) return Error{ErrorKind::invalid_argument, "need exactly one goal", 0};
  try {
    s.validate();
  } catch (const PuzzleError& e) {
    return e.error();
  }
  return s;
}

void BloxorzState::validate() const {
  auto fail = [](const char* what) { throw PuzzleError(ErrorKind::invalid_argument, what); };
  if (width <= 0 || height <= 0 || width * height > 64) fail("bloxorz board size");
  if (tiles.size() != static_cast<std::size_t>(width * height)) fail("tile count");
  if (tile(goal_row, goal_col) != Tile::solid) fail("goal must be a solid tile");
  for (const auto& cell : block.cells()) {
    const Tile t = tile(cell[0], cell[1]);
    if (t != Tile::solid && t != Tile::fragile) fail("block must rest on solid or fragile tiles");
  }
}

Result<BloxorzState> bloxorz_step(const BloxorzState& state, Dir dir) {
  const Block next_block = roll(state.block, dir);
  for (const auto& cell : next_block.cells()) {
    if (!state.in_bounds(cell[0], cell[1])) return Error::illegal("off_board");
    const Tile t = state.tile(cell[0], cell[1]);
    if (t == Tile::absent) return Error::illegal("no_tile");
    if (t == Tile::broken) return Error::illegal("broken_tile");
  }
  BloxorzState next = state;
  next.block = next_block;
  // Fragile tiles give way once the block has left them.
  for (const auto& cell : state.block.cells()) {
    if (next_block.covers(cell[0], cell[1])) continue;
    auto& t = next.tiles[static_cast<std::size_t>(cell[0] * state.width + cell[1])];
    if (t == Tile::fragile) t = Tile::broken;
  }
  return next;
}

bool bloxorz_is_goal(const BloxorzState& state) {
  return state.block.orientation == Orientation::standing && state.block.row == state.goal_row &&
         state.block.col == state.goal_col;
}

}  // namespace puzzles
