#pragma once

// Integer-only software rendering of engine states, plus PNG and raw frame
// encodings.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "puzzles/engine.hpp"

namespace puzzles {

/// Bumped whenever any color or layout constant changes.
inline constexpr int kPaletteVersion = 1;
inline constexpr int kNativeSize = 256;

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Rgb&) const = default;
};

struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB

  Frame() = default;
  Frame(int w, int h, Rgb fill);
  bool operator==(const Frame&) const = default;

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);
};

/// True for the supported output sizes (256, 128, 64).
bool valid_frame_size(int size);

/// Renders natively at 256 and box-filters down to `size`.
Frame render(GameId game, const EngineState& state, int size = kNativeSize);

/// 2x box filter with round-half-up averaging.
Frame downsample(const Frame& frame);

/// Fixed-point (2^14) cosine and sine of a multiple of 15 degrees.
int fixed_cos(int degrees);
int fixed_sin(int degrees);
inline constexpr int kFixedOne = 1 << 14;

/// One visible cube face after projection. Corners are screen positions in
/// 1/256 pixel units relative to the figure center; larger depth is nearer.
struct ProjectedFace {
  std::array<std::array<std::int64_t, 2>, 4> corners;
  std::int64_t depth = 0;
  int brightness = 0;  // 0..255
};

/// Orthographic projection of a polycube under Rz*Ry*Rx followed by the fixed
/// camera tilt, with back faces culled and faces sorted far to near.
/// `unit` is the cube edge length in 1/256 pixel units.
std::vector<ProjectedFace> project_3d(const Polycube& voxels, const Angles3& angles, std::int64_t unit);

/// PNG: 8-bit RGB, no interlace, stored deflate blocks, no ancillary chunks.
std::vector<std::uint8_t> encode_png(const Frame& frame);
/// Little-endian u32 width, u32 height, then the RGB bytes.
std::vector<std::uint8_t> raw_frame(const Frame& frame);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace puzzles
