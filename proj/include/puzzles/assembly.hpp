#pragma once

// Tangram, jigsaw and character-recognition state machines.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "puzzles/action.hpp"
#include "puzzles/shapes.hpp"

namespace puzzles {

// ---------------------------------------------------------------------------
// Tangram: the seven classical pieces as polyomino footprints.

enum class TangramKind : std::uint8_t {
  small_triangle,
  square,
  parallelogram,
  medium_triangle,
  large_triangle,
};

/// Classical set in id order P0..P6; smaller sets use a prefix of it.
inline constexpr std::array<TangramKind, 7> kTangramSet = {
    TangramKind::small_triangle,  TangramKind::small_triangle, TangramKind::square,
    TangramKind::parallelogram,   TangramKind::medium_triangle, TangramKind::large_triangle,
    TangramKind::large_triangle,
};

/// Normalized footprint of `kind` rotated counterclockwise by `degrees`
/// (a multiple of 90).
const Polyomino& tangram_footprint(TangramKind kind, int degrees);
int tangram_area(TangramKind kind);

struct TangramPiece {
  int id = 0;
  TangramKind kind = TangramKind::small_triangle;
  int rotation = 0;                  // degrees, multiple of 90
  std::optional<Cell2> placed_at;    // top-left of the footprint box

  bool operator==(const TangramPiece&) const = default;
};

struct TangramState {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> target;  // 1 = silhouette cell, row-major
  std::vector<TangramPiece> pieces;  // ascending id

  bool operator==(const TangramState&) const = default;

  bool is_target(int row, int col) const {
    return row >= 0 && col >= 0 && row < height && col < width &&
           target[static_cast<std::size_t>(row * width + col)] != 0;
  }
  int target_area() const;
  /// Piece id covering each cell, -1 if uncovered.
  std::vector<int> owners() const;
  const TangramPiece* find(int id) const;
  void validate() const;
};

Result<TangramState> tangram_apply(const TangramState& state, const Action& action);
bool tangram_is_goal(const TangramState& state);

// ---------------------------------------------------------------------------
// Jigsaw

struct JigsawState {
  int k = 2;                      // k x k grid
  std::vector<int> cells;         // piece id per cell, -1 if empty
  std::vector<int> rotations;     // per piece, degrees in {0,90,180,270}
  std::vector<int> true_cell;     // hidden: correct cell per piece
  std::uint64_t pattern = 0;      // procedural image seed

  bool operator==(const JigsawState&) const = default;

  int piece_count() const { return k * k; }
  /// Cell holding `piece`, -1 if unplaced.
  int cell_of(int piece) const;
  void validate() const;
};

Result<JigsawState> jigsaw_apply(const JigsawState& state, const Action& action);
bool jigsaw_is_goal(const JigsawState& state);

// ---------------------------------------------------------------------------
// Character recognition: a 16x16 glyph cut into four 8x8 fragments.

inline constexpr int kFragments = 4;
inline constexpr int kGlyphSize = 16;

/// Slot labels in assembly order: A top-left, B top-right, C bottom-left, D bottom-right.
inline char slot_label(int slot) { return static_cast<char>('A' + slot); }

struct CharRecState {
  char glyph = 'A';                     // hidden
  std::array<int, kFragments> true_slot{};  // hidden: correct slot per fragment
  std::array<int, kFragments> rotations{};  // degrees per fragment
  std::array<int, kFragments> slot{-1, -1, -1, -1};  // assigned slot, -1 if unplaced
  std::optional<char> identified;

  bool operator==(const CharRecState&) const = default;

  int placed_count() const;
  bool assembled_correctly() const;
  void validate() const;
};

Result<CharRecState> charrec_apply(const CharRecState& state, const Action& action);
bool charrec_is_goal(const CharRecState& state);

/// 16x16 monochrome glyph bitmap for A-Z and 0-9; row-major, true = ink.
using GlyphBitmap = std::array<std::array<bool, kGlyphSize>, kGlyphSize>;
const GlyphBitmap& glyph_bitmap(char c);
/// Glyph characters whose four fragments are pairwise distinguishable under
/// rotation (the sampler only draws from these).
const std::vector<char>& charrec_alphabet();
/// One 8x8 quadrant of a glyph (slot order A-D), turned counterclockwise by
/// `rotation` degrees.
using FragmentBitmap = std::array<std::array<bool, kGlyphSize / 2>, kGlyphSize / 2>;
FragmentBitmap fragment_view(char glyph, int slot, int rotation);
/// 5x7 bitmap rows used for labels; returns nullptr for unsupported characters.
const std::array<std::uint8_t, 7>* small_glyph(char c);

}  // namespace puzzles
