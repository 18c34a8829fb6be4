#include <algorithm>

#include "puzzles/assembly.hpp"

namespace puzzles {

int JigsawState::cell_of(int piece) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == piece) return static_cast<int>(i);
  }
  return -1;
}

void JigsawState::validate() const {
  auto fail = [](const char* what) { throw PuzzleError(ErrorKind::invalid_argument, what); };
  if (k != 2 && k != 3) fail("jigsaw grid must be 2x2 or 3x3");
  const auto n = static_cast<std::size_t>(piece_count());
  if (cells.size() != n || rotations.size() != n || true_cell.size() != n) fail("jigsaw sizes");
  std::vector<int> seen(n, 0);
  for (int id : cells) {
    if (id < -1 || id >= piece_count()) fail("jigsaw piece id");
    if (id >= 0 && ++seen[static_cast<std::size_t>(id)] > 1) fail("piece placed twice");
  }
  for (int r : rotations) {
    if (r != 0 && r != 90 && r != 180 && r != 270) fail("jigsaw rotation");
  }
  std::vector<int> truth = true_cell;
  std::sort(truth.begin(), truth.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (truth[i] != static_cast<int>(i)) fail("true assignment must be a permutation");
  }
}

Result<JigsawState> jigsaw_apply(const JigsawState& state, const Action& action) {
  const int n = state.piece_count();
  if (const auto* turn = std::get_if<PieceTurn>(&action)) {
    if (turn->piece < 0 || turn->piece >= n) return Error::illegal("unknown_piece");
    if (state.cell_of(turn->piece) >= 0) return Error::illegal("already_placed");
    JigsawState next = state;
    auto& r = next.rotations[static_cast<std::size_t>(turn->piece)];
    r = (r + (turn->turn == Turn::ccw ? 90 : 270)) % 360;
    return next;
  }
  if (const auto* place = std::get_if<PiecePlace>(&action)) {
    if (place->piece < 0 || place->piece >= n) return Error::illegal("unknown_piece");
    if (place->row >= state.k || place->col >= state.k) return Error::illegal("off_board");
    if (state.cell_of(place->piece) >= 0) return Error::illegal("already_placed");
    const auto cell = static_cast<std::size_t>(place->row * state.k + place->col);
    if (state.cells[cell] >= 0) return Error::illegal("occupied");
    JigsawState next = state;
    next.cells[cell] = place->piece;
    return next;
  }
  return Error::illegal("unsupported_action");
}

bool jigsaw_is_goal(const JigsawState& state) {
  for (int id = 0; id < state.piece_count(); ++id) {
    const auto i = static_cast<std::size_t>(id);
    if (state.rotations[i] != 0) return false;
    if (state.cells[static_cast<std::size_t>(state.true_cell[i])] != id) return false;
  }
  return true;
}

}  // namespace puzzles
