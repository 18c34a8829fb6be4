#pragma once

// Planar polyomino and polycube rotation in 15 degree steps.

#include <array>

#include "puzzles/action.hpp"
#include "puzzles/shapes.hpp"

namespace puzzles {

inline constexpr int kRotationIncrement = 15;

/// Maps any integer angle to [0, 360).
constexpr int wrap_degrees(int degrees) { return ((degrees % 360) + 360) % 360; }

/// Signed d in (-180, 180] with current + d == target (mod 360).
int shortest_delta(int current, int target);

/// Left shape at `angle`, right panel showing `reference` at `target_angle`.
/// For shape matching `reference == shape`.
struct Rot2DState {
  Polyomino shape;
  int angle = 0;
  int target_angle = 0;
  Polyomino reference;

  bool operator==(const Rot2DState&) const = default;
  int n_cells() const { return static_cast<int>(shape.size()); }
};

using Angles3 = std::array<int, 3>;  // rx, ry, rz

struct Rot3DState {
  Polycube shape;
  Angles3 angles{};
  Angles3 target{};
  Polycube reference;

  bool operator==(const Rot3DState&) const = default;
  int n_voxels() const { return static_cast<int>(shape.size()); }
};

Rot2DState rot_step(const Rot2DState& state, int degrees);
Rot3DState rot_step(const Rot3DState& state, Axis axis, int degrees);

Result<Rot2DState> rot2d_apply(const Rot2DState& state, const Action& action);
Result<Rot3DState> rot3d_apply(const Rot3DState& state, const Action& action);

/// Shape-matching goal: exact angle equality.
bool rot2d_is_goal(const Rot2DState& state);
bool rot3d_is_goal(const Rot3DState& state);

/// The displayed left figure (shape turned by its angle) equals the displayed
/// right figure, up to translation.
bool poses_match(const Polyomino& left, int left_angle, const Polyomino& right, int right_angle);
/// Same for polycubes under the Rz*Ry*Rx pose.
bool poses_match(const Polycube& left, const Angles3& left_angles, const Polycube& right,
                 const Angles3& right_angles);

/// Shape identity up to proper rotation (mirror images differ).
bool same_shape(const Polyomino& a, const Polyomino& b);
bool same_shape(const Polycube& a, const Polycube& b);

}  // namespace puzzles
