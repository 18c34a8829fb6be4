#include <bit>

#include "puzzles/sliding.hpp"

namespace puzzles {

Result<SokobanState> SokobanState::parse(std::string_view rows) {
  SokobanState s;
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= rows.size()) {
    const std::size_t slash = rows.find('/', start);
    const std::size_t stop = slash == std::string_view::npos ? rows.size() : slash;
    lines.push_back(rows.substr(start, stop - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  s.height = static_cast<int>(lines.size());
  s.width = lines.empty() ? 0 : static_cast<int>(lines[0].size());
  if (s.width * s.height > 64 || s.width == 0) {
    return Error{ErrorKind::invalid_argument, "sokoban board must have 1..64 cells", 0};
  }
  int players = 0;
  std::size_t offset = 0;
  for (int r = 0; r < s.height; ++r) {
    if (static_cast<int>(lines[static_cast<std::size_t>(r)].size()) != s.width) {
      return Error{ErrorKind::invalid_argument, "ragged sokoban rows", offset};
    }
    for (int c = 0; c < s.width; ++c) {
      const auto bit = std::uint64_t{1} << s.index(r, c);
      switch (lines[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        case '#': s.walls |= bit; break;
        case '.': break;
        case '@': s.player = s.index(r, c); ++players; break;
        case '+': s.player = s.index(r, c); s.goals |= bit; ++players; break;
        case 'O': s.boxes |= bit; break;
        case '*': s.boxes |= bit; s.goals |= bit; break;
        case 'X': s.goals |= bit; break;
        default:
          return Error{ErrorKind::invalid_argument, "bad sokoban cell",
                       offset + static_cast<std::size_t>(c)};
      }
    }
    offset += static_cast<std::size_t>(s.width) + 1;
  }
  if (players != 1) return Error{ErrorKind::invalid_argument, "need exactly one player", 0};
  try {
    s.validate();
  } catch (const PuzzleError& e) {
    return e.error();
  }
  return s;
}

void SokobanState::validate() const {
  auto fail = [](const char* what) { throw PuzzleError(ErrorKind::invalid_argument, what); };
  if (width <= 0 || height <= 0 || width * height > 64) fail("sokoban board size");
  const int cells = width * height;
  const std::uint64_t board = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  if ((walls | goals | boxes) & ~board) fail("cell outside board");
  if (player < 0 || player >= cells) fail("player outside board");
  if (test(walls, player)) fail("player on wall");
  if (test(boxes, player)) fail("player on box");
  if (boxes & walls) fail("box on wall");
  if (goals & walls) fail("goal on wall");
  if (std::popcount(boxes) != std::popcount(goals) || boxes == 0) fail("box/goal count");
}

Result<SokobanState> sokoban_step(const SokobanState& state, Dir dir) {
  const int d = static_cast<int>(dir);
  const int row = state.player / state.width;
  const int col = state.player % state.width;
  const int r1 = row + kDirRow[d];
  const int c1 = col + kDirCol[d];
  if (!state.in_bounds(r1, c1)) return Error::illegal("off_board");
  const int target = state.index(r1, c1);
  if (SokobanState::test(state.walls, target)) return Error::illegal("blocked");

  SokobanState next = state;
  if (SokobanState::test(state.boxes, target)) {
    const int r2 = r1 + kDirRow[d];
    const int c2 = c1 + kDirCol[d];
    if (!state.in_bounds(r2, c2)) return Error::illegal("box_blocked");
    const int beyond = state.index(r2, c2);
    if (SokobanState::test(state.walls | state.boxes, beyond)) return Error::illegal("box_blocked");
    next.boxes &= ~(std::uint64_t{1} << target);
    next.boxes |= std::uint64_t{1} << beyond;
  }
  next.player = target;
  return next;
}

bool sokoban_is_goal(const SokobanState& state) { return state.boxes == state.goals; }

}  // namespace puzzles
