#include "puzzles/shapes.hpp"

#include <algorithm>
#include <set>

namespace puzzles {

Polyomino normalize(Polyomino cells) {
  if (cells.empty()) return cells;
  int min_row = cells[0].row;
  int min_col = cells[0].col;
  for (const auto& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (auto& c : cells) {
    c.row -= min_row;
    c.col -= min_col;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

Polyomino rotate_ccw(const Polyomino& cells) {
  Polyomino out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back({-c.col, c.row});
  return normalize(std::move(out));
}

Polyomino rotate_quarters(const Polyomino& cells, int quarters) {
  Polyomino out = normalize(cells);
  for (int q = ((quarters % 4) + 4) % 4; q > 0; --q) out = rotate_ccw(out);
  return out;
}

Polyomino mirror(const Polyomino& cells) {
  Polyomino out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back({c.row, -c.col});
  return normalize(std::move(out));
}

Polyomino canonical_2d(const Polyomino& cells) {
  Polyomino best = normalize(cells);
  Polyomino current = best;
  for (int q = 1; q < 4; ++q) {
    current = rotate_ccw(current);
    if (current < best) best = current;
  }
  return best;
}

int rotational_symmetry_2d(const Polyomino& cells) {
  const Polyomino base = normalize(cells);
  Polyomino current = base;
  int count = 1;
  for (int q = 1; q < 4; ++q) {
    current = rotate_ccw(current);
    if (current == base) ++count;
  }
  return count;
}

bool is_connected(const Polyomino& cells) {
  if (cells.empty()) return true;
  std::set<Cell2> all(cells.begin(), cells.end());
  std::set<Cell2> seen{cells.front()};
  std::vector<Cell2> stack{cells.front()};
  while (!stack.empty()) {
    const Cell2 c = stack.back();
    stack.pop_back();
    const Cell2 next[4] = {{c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
    for (const auto& n : next) {
      if (all.count(n) != 0 && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == all.size();
}

Polyomino grow_polyomino(Rng& rng, int cells) {
  std::set<Cell2> shape{{0, 0}};
  while (static_cast<int>(shape.size()) < cells) {
    std::set<Cell2> frontier;
    for (const auto& c : shape) {
      const Cell2 next[4] = {{c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
      for (const auto& n : next) {
        if (shape.count(n) == 0) frontier.insert(n);
      }
    }
    const std::vector<Cell2> options(frontier.begin(), frontier.end());
    shape.insert(rng.pick(options));
  }
  return normalize(Polyomino(shape.begin(), shape.end()));
}

// ---------------------------------------------------------------------------

const std::array<LatticeRotation, 24>& cube_rotations() {
  static const std::array<LatticeRotation, 24> table = [] {
    std::array<LatticeRotation, 24> out{};
    std::size_t n = 0;
    std::array<int, 3> perm = {0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        LatticeRotation m{};
        for (int r = 0; r < 3; ++r) {
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] =
              (signs >> r) & 1 ? -1 : 1;
        }
        const int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det == 1) out[n++] = m;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return table;
}

Polycube normalize(Polycube voxels) {
  if (voxels.empty()) return voxels;
  Voxel lo = voxels[0];
  for (const auto& v : voxels) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    lo.z = std::min(lo.z, v.z);
  }
  for (auto& v : voxels) {
    v.x -= lo.x;
    v.y -= lo.y;
    v.z -= lo.z;
  }
  std::sort(voxels.begin(), voxels.end());
  return voxels;
}

Polycube apply(const LatticeRotation& m, const Polycube& voxels) {
  Polycube out;
  out.reserve(voxels.size());
  for (const auto& v : voxels) {
    out.push_back({m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                   m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                   m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z});
  }
  return normalize(std::move(out));
}

Polycube mirror(const Polycube& voxels) {
  Polycube out = voxels;
  for (auto& v : out) v.x = -v.x;
  return normalize(std::move(out));
}

Polycube canonical_3d(const Polycube& voxels) {
  Polycube best;
  bool first = true;
  for (const auto& m : cube_rotations()) {
    Polycube r = apply(m, voxels);
    if (first || r < best) {
      best = std::move(r);
      first = false;
    }
  }
  return best;
}

int rotational_symmetry_3d(const Polycube& voxels) {
  const Polycube base = normalize(voxels);
  int count = 0;
  for (const auto& m : cube_rotations()) {
    if (apply(m, base) == base) ++count;
  }
  return count;
}

bool is_connected(const Polycube& voxels) {
  if (voxels.empty()) return true;
  std::set<Voxel> all(voxels.begin(), voxels.end());
  std::set<Voxel> seen{voxels.front()};
  std::vector<Voxel> stack{voxels.front()};
  while (!stack.empty()) {
    const Voxel v = stack.back();
    stack.pop_back();
    const Voxel next[6] = {{v.x - 1, v.y, v.z}, {v.x + 1, v.y, v.z}, {v.x, v.y - 1, v.z},
                           {v.x, v.y + 1, v.z}, {v.x, v.y, v.z - 1}, {v.x, v.y, v.z + 1}};
    for (const auto& n : next) {
      if (all.count(n) != 0 && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == all.size();
}

Polycube grow_polycube(Rng& rng, int voxels) {
  std::set<Voxel> shape{{0, 0, 0}};
  while (static_cast<int>(shape.size()) < voxels) {
    std::set<Voxel> frontier;
    for (const auto& v : shape) {
      const Voxel next[6] = {{v.x - 1, v.y, v.z}, {v.x + 1, v.y, v.z}, {v.x, v.y - 1, v.z},
                             {v.x, v.y + 1, v.z}, {v.x, v.y, v.z - 1}, {v.x, v.y, v.z + 1}};
      for (const auto& n : next) {
        if (shape.count(n) == 0) frontier.insert(n);
      }
    }
    const std::vector<Voxel> options(frontier.begin(), frontier.end());
    shape.insert(rng.pick(options));
  }
  return normalize(Polycube(shape.begin(), shape.end()));
}

}  // namespace puzzles
