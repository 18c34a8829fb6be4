#include "puzzles/rotation.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace puzzles {

int shortest_delta(int current, int target) {
  int d = wrap_degrees(target - current);
  if (d > 180) d -= 360;
  return d;
}

Rot2DState rot_step(const Rot2DState& state, int degrees) {
  Rot2DState next = state;
  next.angle = wrap_degrees(state.angle + degrees);
  return next;
}

Rot3DState rot_step(const Rot3DState& state, Axis axis, int degrees) {
  Rot3DState next = state;
  auto& a = next.angles[static_cast<std::size_t>(axis)];
  a = wrap_degrees(a + degrees);
  return next;
}

Result<Rot2DState> rot2d_apply(const Rot2DState& state, const Action& action) {
  if (const auto* spin = std::get_if<Spin>(&action)) {
    if (spin->degrees != kRotationIncrement && spin->degrees != -kRotationIncrement) {
      return Error::illegal("bad_increment");
    }
    return rot_step(state, spin->degrees);
  }
  return Error::illegal("unsupported_action");
}

Result<Rot3DState> rot3d_apply(const Rot3DState& state, const Action& action) {
  if (const auto* spin = std::get_if<AxisSpin>(&action)) {
    if (spin->degrees != kRotationIncrement && spin->degrees != -kRotationIncrement) {
      return Error::illegal("bad_increment");
    }
    return rot_step(state, spin->axis, spin->degrees);
  }
  return Error::illegal("unsupported_action");
}

bool rot2d_is_goal(const Rot2DState& state) { return state.angle == state.target_angle; }

bool rot3d_is_goal(const Rot3DState& state) { return state.angles == state.target; }

bool poses_match(const Polyomino& left, int left_angle, const Polyomino& right, int right_angle) {
  // The figures are unions of unit squares, so equal figures differ by a
  // lattice (quarter-turn) rotation.
  const int relative = wrap_degrees(left_angle - right_angle);
  if (relative % 90 != 0) return false;
  return rotate_quarters(left, relative / 90) == normalize(right);
}

namespace {

using Matrix = std::array<std::array<double, 3>, 3>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix m{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    }
  }
  return m;
}

Matrix axis_matrix(Axis axis, int degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(t);
  const double s = std::sin(t);
  switch (axis) {
    case Axis::x: return {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
    case Axis::y: return {{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
    case Axis::z: return {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
  }
  return {};
}

Matrix pose_matrix(const Angles3& a) {
  return multiply(axis_matrix(Axis::z, a[2]),
                  multiply(axis_matrix(Axis::y, a[1]), axis_matrix(Axis::x, a[0])));
}

std::optional<LatticeRotation> as_lattice(const Matrix& m) {
  LatticeRotation out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double rounded = std::round(m[i][j]);
      if (std::abs(m[i][j] - rounded) > 1e-9) return std::nullopt;
      out[i][j] = static_cast<int>(rounded);
    }
  }
  return out;
}

}  // namespace

bool poses_match(const Polycube& left, const Angles3& left_angles, const Polycube& right,
                 const Angles3& right_angles) {
  // R_right^T * R_left carries the left body frame into the right one; equal
  // axis-aligned figures force it to be a cube rotation.
  const Matrix l = pose_matrix(left_angles);
  const Matrix r = pose_matrix(right_angles);
  Matrix rt{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) rt[i][j] = r[j][i];
  }
  const auto relative = as_lattice(multiply(rt, l));
  if (!relative) return false;
  return apply(*relative, left) == normalize(right);
}

bool same_shape(const Polyomino& a, const Polyomino& b) {
  return a.size() == b.size() && canonical_2d(a) == canonical_2d(b);
}

bool same_shape(const Polycube& a, const Polycube& b) {
  return a.size() == b.size() && canonical_3d(a) == canonical_3d(b);
}

}  // namespace puzzles
