#include <algorithm>
#include <map>

#include "puzzles/assembly.hpp"

namespace puzzles {

namespace {

Polyomino base_footprint(TangramKind kind) {
  switch (kind) {
    case TangramKind::small_triangle: return {{0, 0}, {1, 0}, {1, 1}};
    case TangramKind::square: return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    case TangramKind::parallelogram: return {{0, 1}, {0, 2}, {1, 0}, {1, 1}};
    case TangramKind::medium_triangle:
      return {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
    case TangramKind::large_triangle:
      return {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}};
  }
  return {};
}

}  // namespace

const Polyomino& tangram_footprint(TangramKind kind, int degrees) {
  static const auto table = [] {
    std::array<std::array<Polyomino, 4>, 5> t;
    for (int k = 0; k < 5; ++k) {
      Polyomino p = normalize(base_footprint(static_cast<TangramKind>(k)));
      for (int q = 0; q < 4; ++q) {
        t[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = p;
        p = rotate_ccw(p);
      }
    }
    return t;
  }();
  const int q = (((degrees / 90) % 4) + 4) % 4;
  return table[static_cast<std::size_t>(kind)][static_cast<std::size_t>(q)];
}

int tangram_area(TangramKind kind) {
  return static_cast<int>(tangram_footprint(kind, 0).size());
}

int TangramState::target_area() const {
  return static_cast<int>(std::count(target.begin(), target.end(), std::uint8_t{1}));
}

const TangramPiece* TangramState::find(int id) const {
  for (const auto& p : pieces) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::vector<int> TangramState::owners() const {
  std::vector<int> owner(static_cast<std::size_t>(width * height), -1);
  for (const auto& p : pieces) {
    if (!p.placed_at) continue;
    for (const auto& c : tangram_footprint(p.kind, p.rotation)) {
      const int r = p.placed_at->row + c.row;
      const int col = p.placed_at->col + c.col;
      if (r >= 0 && col >= 0 && r < height && col < width) {
        owner[static_cast<std::size_t>(r * width + col)] = p.id;
      }
    }
  }
  return owner;
}

void TangramState::validate() const {
  auto fail = [](const char* what) { throw PuzzleError(ErrorKind::invalid_argument, what); };
  if (width <= 0 || height <= 0) fail("tangram canvas size");
  if (target.size() != static_cast<std::size_t>(width * height)) fail("tangram target size");
  if (pieces.empty() || pieces.size() > kTangramSet.size()) fail("tangram piece count");
  std::vector<int> count(target.size(), 0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.id != static_cast<int>(i)) fail("tangram piece ids must be 0..n-1");
    if (p.rotation % 90 != 0 || p.rotation < 0 || p.rotation >= 360) fail("tangram rotation");
    if (!p.placed_at) continue;
    for (const auto& c : tangram_footprint(p.kind, p.rotation)) {
      const int r = p.placed_at->row + c.row;
      const int col = p.placed_at->col + c.col;
      if (!is_target(r, col)) fail("placed piece leaves the silhouette");
      if (++count[static_cast<std::size_t>(r * width + col)] > 1) fail("placed pieces overlap");
    }
  }
}

Result<TangramState> tangram_apply(const TangramState& state, const Action& action) {
  if (const auto* rot = std::get_if<PieceRotate>(&action)) {
    const TangramPiece* piece = state.find(rot->piece);
    if (piece == nullptr) return Error::illegal("unknown_piece");
    if (piece->placed_at) return Error::illegal("already_placed");
    if (rot->degrees != 90 && rot->degrees != 180 && rot->degrees != 270) {
      return Error::illegal("bad_rotation");
    }
    TangramState next = state;
    auto& p = next.pieces[static_cast<std::size_t>(rot->piece)];
    p.rotation = (p.rotation + rot->degrees) % 360;
    return next;
  }
  if (const auto* place = std::get_if<PiecePlace>(&action)) {
    const TangramPiece* piece = state.find(place->piece);
    if (piece == nullptr) return Error::illegal("unknown_piece");
    if (piece->placed_at) return Error::illegal("already_placed");
    const auto owner = state.owners();
    for (const auto& c : tangram_footprint(piece->kind, piece->rotation)) {
      const int r = place->row + c.row;
      const int col = place->col + c.col;
      if (r >= state.height || col >= state.width) return Error::illegal("off_board");
      if (!state.is_target(r, col)) return Error::illegal("off_silhouette");
      if (owner[static_cast<std::size_t>(r * state.width + col)] >= 0) return Error::illegal("overlap");
    }
    TangramState next = state;
    next.pieces[static_cast<std::size_t>(place->piece)].placed_at = Cell2{place->row, place->col};
    return next;
  }
  return Error::illegal("unsupported_action");
}

bool tangram_is_goal(const TangramState& state) {
  for (const auto& p : state.pieces) {
    if (!p.placed_at) return false;
  }
  const auto owner = state.owners();
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (state.target[i] != 0 && owner[i] < 0) return false;
  }
  return true;
}

}  // namespace puzzles
