#pragma once

// Lattice shapes: polyominoes (2D) and polycubes (3D), their rotation groups
// and canonical forms.

#include <array>
#include <compare>
#include <vector>

#include "puzzles/core.hpp"

namespace puzzles {

struct Cell2 {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell2&) const = default;
};

/// Cell set, kept normalized (min row = min col = 0) and sorted.
using Polyomino = std::vector<Cell2>;

Polyomino normalize(Polyomino cells);
/// Quarter turn counterclockwise on screen (row axis points down).
Polyomino rotate_ccw(const Polyomino& cells);
/// Rotate counterclockwise by `quarters` quarter turns.
Polyomino rotate_quarters(const Polyomino& cells, int quarters);
Polyomino mirror(const Polyomino& cells);
/// Lexicographically least of the four rotations.
Polyomino canonical_2d(const Polyomino& cells);
/// Number of quarter-turn rotations (1..4) mapping the shape to itself.
int rotational_symmetry_2d(const Polyomino& cells);
bool is_connected(const Polyomino& cells);
/// Random connected growth from a single cell.
Polyomino grow_polyomino(Rng& rng, int cells);

struct Voxel {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Voxel&) const = default;
};

using Polycube = std::vector<Voxel>;

/// Signed permutation matrix with determinant +1.
using LatticeRotation = std::array<std::array<int, 3>, 3>;

/// The 24 proper rotations of the cube, identity first.
const std::array<LatticeRotation, 24>& cube_rotations();

Polycube normalize(Polycube voxels);
Polycube apply(const LatticeRotation& m, const Polycube& voxels);
Polycube mirror(const Polycube& voxels);
Polycube canonical_3d(const Polycube& voxels);
int rotational_symmetry_3d(const Polycube& voxels);
bool is_connected(const Polycube& voxels);
Polycube grow_polycube(Rng& rng, int voxels);

}  // namespace puzzles
