#include "puzzles/raster.hpp"

#include <algorithm>
#include <fstream>

#include <zlib.h>

namespace puzzles {

Frame::Frame(int w, int h, Rgb fill) : width(w), height(h), pixels(static_cast<std::size_t>(w * h * 3)) {
  for (std::size_t i = 0; i < pixels.size(); i += 3) {
    pixels[i] = fill.r;
    pixels[i + 1] = fill.g;
    pixels[i + 2] = fill.b;
  }
}

Rgb Frame::at(int x, int y) const {
  const auto i = static_cast<std::size_t>((y * width + x) * 3);
  return {pixels[i], pixels[i + 1], pixels[i + 2]};
}

void Frame::set(int x, int y, Rgb c) {
  if (x < 0 || y < 0 || x >= width || y >= height) return;
  const auto i = static_cast<std::size_t>((y * width + x) * 3);
  pixels[i] = c.r;
  pixels[i + 1] = c.g;
  pixels[i + 2] = c.b;
}

bool valid_frame_size(int size) { return size == 256 || size == 128 || size == 64; }

// ---------------------------------------------------------------------------
// Fixed-point trigonometry: the only quantization of rotation in the renderer.

namespace {

// round(cos(15 k degrees) * 2^14) for k = 0..6
constexpr int kCosQuarter[7] = {16384, 15826, 14189, 11585, 8192, 4240, 0};

}  // namespace

int fixed_cos(int degrees) {
  const int d = wrap_degrees(degrees);
  const int k = d / kRotationIncrement;  // 0..23
  const int q = k / 6;
  const int r = k % 6;
  switch (q) {
    case 0: return kCosQuarter[r];
    case 1: return -kCosQuarter[6 - r];
    case 2: return -kCosQuarter[r];
    default: return kCosQuarter[6 - r];
  }
}

int fixed_sin(int degrees) { return fixed_cos(degrees - 90); }

namespace {

// ---------------------------------------------------------------------------
// Palette (version kPaletteVersion)

constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWall{64, 64, 64};
constexpr Rgb kFloor{208, 208, 208};
constexpr Rgb kGridLine{176, 176, 176};
constexpr Rgb kPlayer{40, 90, 220};
constexpr Rgb kBox{139, 90, 43};
constexpr Rgb kGoal{210, 40, 40};
constexpr Rgb kVoid{32, 32, 44};
constexpr Rgb kFragileStripe{236, 170, 70};
constexpr Rgb kBrokenTile{82, 58, 40};
constexpr Rgb kBlock{232, 120, 30};
constexpr Rgb kBlockTop{255, 176, 90};
constexpr Rgb kSilhouette{128, 128, 128};
constexpr Rgb kCanvas{244, 244, 244};
constexpr Rgb kSlot{232, 232, 232};
constexpr Rgb kOutline{96, 96, 96};
constexpr Rgb kLeftShape{56, 116, 204};
constexpr Rgb kRightShape{56, 160, 96};
constexpr Rgb kEdge{24, 24, 32};

constexpr Rgb kTangramColors[7] = {
    {230, 60, 60}, {250, 160, 40}, {250, 220, 50}, {70, 180, 80},
    {60, 170, 220}, {70, 90, 200}, {160, 80, 190},
};

constexpr Rgb kVehicleColors[10] = {
    {40, 120, 200}, {60, 170, 80}, {240, 180, 40}, {150, 80, 180}, {240, 120, 40},
    {40, 170, 170}, {200, 80, 140}, {120, 120, 60}, {90, 90, 220}, {110, 190, 60},
};
constexpr Rgb kCarA{220, 30, 30};

Rgb scale(Rgb c, int brightness) {
  auto ch = [&](std::uint8_t v) { return static_cast<std::uint8_t>((v * brightness + 127) / 255); };
  return {ch(c.r), ch(c.g), ch(c.b)};
}

// ---------------------------------------------------------------------------
// Primitives. Polygon coordinates are in 1/256 pixel units.

using Point = std::array<std::int64_t, 2>;
constexpr std::int64_t kSub = 256;

class Painter {
 public:
  explicit Painter(Frame& f) : f_(f) {}

  void rect(int x0, int y0, int x1, int y1, Rgb c) {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, f_.width);
    y1 = std::min(y1, f_.height);
    for (int y = y0; y < y1; ++y) {
      for (int x = x0; x < x1; ++x) f_.set(x, y, c);
    }
  }

  void outline(int x0, int y0, int x1, int y1, int t, Rgb c) {
    rect(x0, y0, x1, y0 + t, c);
    rect(x0, y1 - t, x1, y1, c);
    rect(x0, y0, x0 + t, y1, c);
    rect(x1 - t, y0, x1, y1, c);
  }

  void disc(int cx2, int cy2, int r2, Rgb c) {
    // Center and radius in half pixels.
    for (int y = (cy2 - r2) / 2 - 1; y <= (cy2 + r2) / 2 + 1; ++y) {
      for (int x = (cx2 - r2) / 2 - 1; x <= (cx2 + r2) / 2 + 1; ++x) {
        const int dx = 2 * x + 1 - cx2;
        const int dy = 2 * y + 1 - cy2;
        if (dx * dx + dy * dy <= r2 * r2) f_.set(x, y, c);
      }
    }
  }

  void polygon(const std::vector<Point>& pts, Rgb c) {
    if (pts.size() < 3) return;
    std::int64_t area = 0;
    std::int64_t lo_x = pts[0][0], hi_x = pts[0][0], lo_y = pts[0][1], hi_y = pts[0][1];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point& a = pts[i];
      const Point& b = pts[(i + 1) % pts.size()];
      area += a[0] * b[1] - b[0] * a[1];
      lo_x = std::min(lo_x, a[0]);
      hi_x = std::max(hi_x, a[0]);
      lo_y = std::min(lo_y, a[1]);
      hi_y = std::max(hi_y, a[1]);
    }
    if (area == 0) return;
    const std::int64_t sign = area > 0 ? 1 : -1;
    const int x0 = std::max<int>(0, static_cast<int>(floor_div(lo_x, kSub)));
    const int x1 = std::min<int>(f_.width - 1, static_cast<int>(floor_div(hi_x, kSub)));
    const int y0 = std::max<int>(0, static_cast<int>(floor_div(lo_y, kSub)));
    const int y1 = std::min<int>(f_.height - 1, static_cast<int>(floor_div(hi_y, kSub)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const std::int64_t px = x * kSub + kSub / 2;
        const std::int64_t py = y * kSub + kSub / 2;
        bool inside = true;
        for (std::size_t i = 0; i < pts.size() && inside; ++i) {
          const Point& a = pts[i];
          const Point& b = pts[(i + 1) % pts.size()];
          const std::int64_t cross = (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0]);
          inside = sign * cross >= 0;
        }
        if (inside) f_.set(x, y, c);
      }
    }
  }

  /// 5x7 font, `s` pixels per font dot, top-left at (x, y).
  void text(int x, int y, int s, std::string_view str, Rgb c) {
    for (char ch : str) {
      const auto* rows = small_glyph(ch);
      if (rows != nullptr) {
        for (int r = 0; r < 7; ++r) {
          for (int k = 0; k < 5; ++k) {
            if (((*rows)[static_cast<std::size_t>(r)] >> (4 - k)) & 1U) {
              rect(x + k * s, y + r * s, x + (k + 1) * s, y + (r + 1) * s, c);
            }
          }
        }
      }
      x += 6 * s;
    }
  }

  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  }

 private:
  Frame& f_;
};

std::vector<Point> shrink(const std::vector<Point>& pts, int percent) {
  Point center{0, 0};
  for (const auto& p : pts) {
    center[0] += p[0];
    center[1] += p[1];
  }
  const auto n = static_cast<std::int64_t>(pts.size());
  std::vector<Point> out;
  for (const auto& p : pts) {
    out.push_back({(p[0] * (100 - percent) * n + center[0] * percent) / (100 * n),
                   (p[1] * (100 - percent) * n + center[1] * percent) / (100 * n)});
  }
  return out;
}

struct Grid {
  int x0;
  int y0;
  int cell;

  static Grid fit(int ax, int ay, int aw, int ah, int cols, int rows) {
    const int cell = std::min(aw / cols, ah / rows);
    return {ax + (aw - cell * cols) / 2, ay + (ah - cell * rows) / 2, cell};
  }
  int x(int col) const { return x0 + col * cell; }
  int y(int row) const { return y0 + row * cell; }
};

std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// Sliding games

void draw_sokoban(Painter& p, const SokobanState& s) {
  const Grid g = Grid::fit(8, 8, 240, 240, s.width, s.height);
  const int c = g.cell;
  for (int r = 0; r < s.height; ++r) {
    for (int col = 0; col < s.width; ++col) {
      const int i = s.index(r, col);
      const int x = g.x(col);
      const int y = g.y(r);
      if (SokobanState::test(s.walls, i)) {
        p.rect(x, y, x + c, y + c, kWall);
        continue;
      }
      p.rect(x, y, x + c, y + c, kGridLine);
      p.rect(x + 1, y + 1, x + c - 1, y + c - 1, kFloor);
      const std::int64_t cx = (x * 2 + c) * kSub / 2;
      const std::int64_t cy = (y * 2 + c) * kSub / 2;
      const std::int64_t h = c * kSub * 3 / 10;
      if (SokobanState::test(s.goals, i)) {
        p.polygon({{cx, cy - h}, {cx + h, cy}, {cx, cy + h}, {cx - h, cy}}, kGoal);
      }
      if (SokobanState::test(s.boxes, i)) {
        const int m = c / 8;
        p.rect(x + m, y + m, x + c - m, y + c - m, kBox);
        p.outline(x + m, y + m, x + c - m, y + c - m, std::max(1, c / 16), scale(kBox, 160));
        if (SokobanState::test(s.goals, i)) {
          const std::int64_t q = h / 2;
          p.polygon({{cx, cy - q}, {cx + q, cy}, {cx, cy + q}, {cx - q, cy}}, kGoal);
        }
      }
      if (i == s.player) p.disc(2 * x + c, 2 * y + c, c * 7 / 10, kPlayer);
    }
  }
}

void draw_bloxorz(Painter& p, Frame& f, const BloxorzState& s) {
  p.rect(0, 0, f.width, f.height, kVoid);
  const Grid g = Grid::fit(8, 8, 240, 240, s.width, s.height);
  const int c = g.cell;
  for (int r = 0; r < s.height; ++r) {
    for (int col = 0; col < s.width; ++col) {
      const int x = g.x(col);
      const int y = g.y(r);
      const Tile t = s.tile(r, col);
      if (r == s.goal_row && col == s.goal_col) {
        p.rect(x + 1, y + 1, x + c - 1, y + c - 1, kFloor);
        p.rect(x + c / 5, y + c / 5, x + c - c / 5, y + c - c / 5, kGoal);
        continue;
      }
      switch (t) {
        case Tile::absent: break;
        case Tile::solid: p.rect(x + 1, y + 1, x + c - 1, y + c - 1, kFloor); break;
        case Tile::fragile: {
          const int band = std::max(2, c / 6);
          for (int yy = y + 1; yy < y + c - 1; ++yy) {
            for (int xx = x + 1; xx < x + c - 1; ++xx) {
              f.set(xx, yy, (((xx - x) + (yy - y)) / band) % 2 == 0 ? kFragileStripe : kFloor);
            }
          }
          break;
        }
        case Tile::broken: {
          p.rect(x + 1, y + 1, x + c - 1, y + c - 1, kBrokenTile);
          const std::int64_t a = (x + c / 4) * kSub;
          const std::int64_t b = (x + c - c / 4) * kSub;
          const std::int64_t u = (y + c / 4) * kSub;
          const std::int64_t v = (y + c - c / 4) * kSub;
          const std::int64_t w = std::max<std::int64_t>(kSub, c * kSub / 12);
          p.polygon({{a, u + w}, {a + w, u}, {b, v - w}, {b - w, v}}, kVoid);
          p.polygon({{b - w, u}, {b, u + w}, {a + w, v}, {a, v - w}}, kVoid);
          break;
        }
      }
    }
  }
  const auto cells = s.block.cells();
  const int r0 = std::min(cells[0][0], cells[1][0]);
  const int c0 = std::min(cells[0][1], cells[1][1]);
  const int r1 = std::max(cells[0][0], cells[1][0]) + 1;
  const int c1 = std::max(cells[0][1], cells[1][1]) + 1;
  const int m = c / 8;
  p.rect(g.x(c0) + m, g.y(r0) + m, g.x(c1) - m, g.y(r1) - m, kBlock);
  p.outline(g.x(c0) + m, g.y(r0) + m, g.x(c1) - m, g.y(r1) - m, std::max(1, c / 16), scale(kBlock, 150));
  if (s.block.orientation == Orientation::standing) {
    const int q = c / 3;
    p.rect(g.x(c0) + q, g.y(r0) + q, g.x(c1) - q, g.y(r1) - q, kBlockTop);
  }
}

void draw_rush_hour(Painter& p, const RushHourState& s) {
  const Grid g = Grid::fit(16, 16, 224, 224, kRushHourSize, kRushHourSize);
  const int c = g.cell;
  p.rect(g.x(0) - 4, g.y(0) - 4, g.x(kRushHourSize) + 4, g.y(kRushHourSize) + 4, kOutline);
  p.rect(g.x(kRushHourSize), g.y(s.exit_row), g.x(kRushHourSize) + 4, g.y(s.exit_row + 1), kCarA);
  for (int r = 0; r < kRushHourSize; ++r) {
    for (int col = 0; col < kRushHourSize; ++col) {
      p.rect(g.x(col), g.y(r), g.x(col) + c, g.y(r) + c, kGridLine);
      p.rect(g.x(col) + 1, g.y(r) + 1, g.x(col) + c - 1, g.y(r) + c - 1, kFloor);
    }
  }
  for (const auto& v : s.vehicles) {
    const Rgb color = v.letter == 'A' ? kCarA : kVehicleColors[(v.letter - 'B') % 10];
    const int w = v.horizontal ? v.length : 1;
    const int h = v.horizontal ? 1 : v.length;
    const int m = c / 10;
    p.rect(g.x(v.col) + m, g.y(v.row) + m, g.x(v.col + w) - m, g.y(v.row + h) - m, color);
    const int dot = std::max(1, c / 16);
    p.text(g.x(v.col) + (c - 5 * dot) / 2, g.y(v.row) + (c - 7 * dot) / 2, dot, std::string(1, v.letter),
           kWhite);
  }
}

// ---------------------------------------------------------------------------
// Assembly games

void draw_tangram(Painter& p, const TangramState& s) {
  const Grid g = Grid::fit(8, 8, 240, 168, s.width, s.height);
  const int c = g.cell;
  const auto owner = s.owners();
  for (int r = 0; r < s.height; ++r) {
    for (int col = 0; col < s.width; ++col) {
      const auto i = static_cast<std::size_t>(r * s.width + col);
      const Rgb fill = owner[i] >= 0 ? kTangramColors[owner[i] % 7] : (s.target[i] != 0 ? kSilhouette : kCanvas);
      p.rect(g.x(col), g.y(r), g.x(col) + c, g.y(r) + c, fill);
    }
  }
  // Tray: one slot per piece id, unplaced pieces drawn at their rotation.
  const int slot = 240 / 7;
  const int unit = std::max(1, (slot - 4) / 4);
  for (const auto& piece : s.pieces) {
    const int sx = 8 + piece.id * slot;
    const int sy = 184;
    p.outline(sx, sy, sx + slot - 2, sy + 64, 1, kGridLine);
    if (piece.placed_at) continue;
    const Polyomino& fp = tangram_footprint(piece.kind, piece.rotation);
    int rows = 0, cols = 0;
    for (const auto& cell : fp) {
      rows = std::max(rows, cell.row + 1);
      cols = std::max(cols, cell.col + 1);
    }
    const int ox = sx + (slot - 2 - cols * unit) / 2;
    const int oy = sy + 12 + (52 - rows * unit) / 2;
    for (const auto& cell : fp) {
      p.rect(ox + cell.col * unit, oy + cell.row * unit, ox + (cell.col + 1) * unit, oy + (cell.row + 1) * unit,
             kTangramColors[piece.id % 7]);
    }
    p.text(sx + 2, sy + 2, 1, std::to_string(piece.id), kBlack);
  }
}

// Color of the source picture at (gx, gy) out of `size` pixels per side.
Rgb jigsaw_source(std::uint64_t pattern, int k, int gx, int gy, int size) {
  const int tile = size / k;
  const int cell = (gy / tile) * k + (gx / tile);
  const std::uint64_t h = mix64(pattern ^ static_cast<std::uint64_t>(cell + 1));
  const int lx = gx % tile;
  const int ly = gy % tile;
  const int mx = tile / 4 + static_cast<int>(h % static_cast<std::uint64_t>(std::max(1, tile / 4)));
  const int my = tile / 5 + static_cast<int>((h >> 16) % static_cast<std::uint64_t>(std::max(1, tile / 4)));
  const int rad = std::max(1, tile / 7);
  if ((lx - mx) * (lx - mx) + (ly - my) * (ly - my) <= rad * rad) return {24, 24, 24};
  const int band = std::max(2, size / 14);
  const bool stripe = ((gx + 2 * gy + static_cast<int>(pattern & 31)) / band) % 2 == 0;
  return {static_cast<std::uint8_t>(40 + 200 * gx / size), static_cast<std::uint8_t>(40 + 200 * gy / size),
          static_cast<std::uint8_t>(stripe ? 60 + (h >> 40) % 60 : 190 + (h >> 48) % 60)};
}

void draw_jigsaw_piece(Frame& f, const JigsawState& s, int piece, int x0, int y0, int tile) {
  const int truth = s.true_cell[static_cast<std::size_t>(piece)];
  const int tr = truth / s.k;
  const int tc = truth % s.k;
  const int q = s.rotations[static_cast<std::size_t>(piece)] / 90;
  for (int i = 0; i < tile; ++i) {
    for (int j = 0; j < tile; ++j) {
      // Undo q counterclockwise quarter turns: display (i, j) <- source.
      int si = i;
      int sj = j;
      for (int t = 0; t < q; ++t) {
        const int ni = sj;
        const int nj = tile - 1 - si;
        si = ni;
        sj = nj;
      }
      f.set(x0 + j, y0 + i, jigsaw_source(s.pattern, s.k, tc * tile + sj, tr * tile + si, tile * s.k));
    }
  }
}

void draw_jigsaw(Painter& p, Frame& f, const JigsawState& s) {
  const int tile = 132 / s.k;
  const int bx = (256 - tile * s.k) / 2;
  const int by = 8;
  p.rect(bx - 2, by - 2, bx + tile * s.k + 2, by + tile * s.k + 2, kOutline);
  for (int cell = 0; cell < s.piece_count(); ++cell) {
    const int x = bx + (cell % s.k) * tile;
    const int y = by + (cell / s.k) * tile;
    const int piece = s.cells[static_cast<std::size_t>(cell)];
    if (piece < 0) {
      p.rect(x + 1, y + 1, x + tile - 1, y + tile - 1, kSlot);
    } else {
      draw_jigsaw_piece(f, s, piece, x, y, tile);
    }
  }
  const int small = 36;
  const int pitch = 46;
  for (int piece = 0; piece < s.piece_count(); ++piece) {
    const int x = (256 - 5 * pitch) / 2 + (piece % 5) * pitch + (pitch - small) / 2;
    const int y = 152 + (piece / 5) * pitch;
    p.outline(x - 1, y - 1, x + small + 1, y + small + 1, 1, kGridLine);
    if (s.cell_of(piece) < 0) draw_jigsaw_piece(f, s, piece, x, y, small);
    p.rect(x, y, x + 8, y + 10, kWhite);
    p.text(x + 2, y + 2, 1, std::to_string(piece), kBlack);
  }
}

void draw_fragment(Painter& p, const CharRecState& s, int fragment, int x0, int y0, int dot) {
  const auto bmp = fragment_view(s.glyph, s.true_slot[static_cast<std::size_t>(fragment)],
                                 s.rotations[static_cast<std::size_t>(fragment)]);
  p.rect(x0, y0, x0 + 8 * dot, y0 + 8 * dot, kWhite);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (bmp[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        p.rect(x0 + c * dot, y0 + r * dot, x0 + (c + 1) * dot, y0 + (r + 1) * dot, kBlack);
      }
    }
  }
}

void draw_charrec(Painter& p, const CharRecState& s) {
  const int slot_dot = 7;
  const int slot_size = 8 * slot_dot;
  const int ax = 12;
  const int ay = 72;
  for (int slot = 0; slot < kFragments; ++slot) {
    const int x = ax + (slot % 2) * (slot_size + 2);
    const int y = ay + (slot / 2) * (slot_size + 2);
    p.rect(x, y, x + slot_size, y + slot_size, kSlot);
    p.text(x + slot_size / 2 - 5, y + slot_size / 2 - 7, 2, std::string(1, slot_label(slot)), kGridLine);
  }
  for (int k = 0; k < kFragments; ++k) {
    const int slot = s.slot[static_cast<std::size_t>(k)];
    if (slot < 0) continue;
    draw_fragment(p, s, k, ax + (slot % 2) * (slot_size + 2), ay + (slot / 2) * (slot_size + 2), slot_dot);
  }
  p.outline(ax - 3, ay - 3, ax + 2 * slot_size + 5, ay + 2 * slot_size + 5, 1, kOutline);
  const int dot = 6;
  const int size = 8 * dot;
  const int tx = 144;
  const int ty = 64;
  for (int k = 0; k < kFragments; ++k) {
    const int x = tx + (k % 2) * (size + 12);
    const int y = ty + (k / 2) * (size + 22);
    p.text(x, y, 1, std::to_string(k), kBlack);
    const int fy = y + 10;
    p.outline(x - 1, fy - 1, x + size + 1, fy + size + 1, 1, kGridLine);
    if (s.slot[static_cast<std::size_t>(k)] < 0) draw_fragment(p, s, k, x, fy, dot);
  }
}

void draw_anagram(Painter& p, const AnagramState& s) {
  const int n = std::max(1, static_cast<int>(s.letters.size()));
  const int pitch = std::min(40, 240 / n);
  const int tile = pitch - 4;
  const int x0 = (256 - pitch * n) / 2 + 2;
  const int y0 = 128 - tile / 2;
  const int dot = std::max(1, tile / 10);
  for (int i = 0; i < static_cast<int>(s.letters.size()); ++i) {
    const int x = x0 + i * pitch;
    p.rect(x, y0, x + tile, y0 + tile, s.identified ? kRightShape : kLeftShape);
    const char up = static_cast<char>(s.letters[static_cast<std::size_t>(i)] - 'a' + 'A');
    p.text(x + (tile - 5 * dot) / 2, y0 + (tile - 7 * dot) / 2, dot, std::string(1, up), kWhite);
    p.text(x + (tile - 5) / 2, y0 + tile + 6, 1, std::to_string(i), kBlack);
  }
}

// ---------------------------------------------------------------------------
// Rotation games

using Mat = std::array<std::array<std::int64_t, 3>, 3>;

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat m{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      m[i][j] = (acc + kFixedOne / 2) >> 14;
    }
  }
  return m;
}

Mat axis(Axis ax, int degrees) {
  const std::int64_t c = fixed_cos(degrees);
  const std::int64_t s = fixed_sin(degrees);
  const std::int64_t one = kFixedOne;
  switch (ax) {
    case Axis::x: return {{{one, 0, 0}, {0, c, -s}, {0, s, c}}};
    case Axis::y: return {{{c, 0, s}, {0, one, 0}, {-s, 0, c}}};
    case Axis::z: return {{{c, -s, 0}, {s, c, 0}, {0, 0, one}}};
  }
  return {};
}

const Mat& camera() {
  static const Mat m = mat_mul(axis(Axis::x, 30), axis(Axis::y, -30));
  return m;
}

std::array<std::int64_t, 3> transform(const Mat& m, const std::array<std::int64_t, 3>& v) {
  std::array<std::int64_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;  // scaled by 2^14
}

// Light direction, roughly unit length in 2^14 fixed point.
constexpr std::array<std::int64_t, 3> kLight = {-4915, 8192, 13311};

// Maximum squared distance of a corner from the figure center, in doubled units.
std::int64_t radius2(const Polycube& v) {
  if (v.empty()) return 1;
  std::array<int, 3> lo{v[0].x, v[0].y, v[0].z};
  std::array<int, 3> hi = lo;
  for (const auto& p : v) {
    lo = {std::min(lo[0], p.x), std::min(lo[1], p.y), std::min(lo[2], p.z)};
    hi = {std::max(hi[0], p.x), std::max(hi[1], p.y), std::max(hi[2], p.z)};
  }
  std::int64_t best = 1;
  for (const auto& p : v) {
    for (int corner = 0; corner < 8; ++corner) {
      const std::int64_t x = 2 * (p.x + (corner & 1)) - (lo[0] + hi[0] + 1);
      const std::int64_t y = 2 * (p.y + ((corner >> 1) & 1)) - (lo[1] + hi[1] + 1);
      const std::int64_t z = 2 * (p.z + ((corner >> 2) & 1)) - (lo[2] + hi[2] + 1);
      best = std::max(best, x * x + y * y + z * z);
    }
  }
  return best;
}

std::int64_t radius2(const Polyomino& cells) {
  if (cells.empty()) return 1;
  int lr = cells[0].row, hr = lr, lc = cells[0].col, hc = lc;
  for (const auto& c : cells) {
    lr = std::min(lr, c.row);
    hr = std::max(hr, c.row);
    lc = std::min(lc, c.col);
    hc = std::max(hc, c.col);
  }
  std::int64_t best = 1;
  for (const auto& c : cells) {
    for (int corner = 0; corner < 4; ++corner) {
      const std::int64_t x = 2 * (c.col + (corner & 1)) - (lc + hc + 1);
      const std::int64_t y = 2 * (c.row + (corner >> 1)) - (lr + hr + 1);
      best = std::max(best, x * x + y * y);
    }
  }
  return best;
}

// Unit length (1/256 px) so a figure of squared doubled radius r2 fits in
// a circle of `px` pixels radius.
std::int64_t fit_unit(std::int64_t r2, int px, int cap_px) {
  const std::int64_t unit = (2 * px * kSub) / std::max<std::int64_t>(1, isqrt(r2) + 1);
  return std::min<std::int64_t>(unit, cap_px * kSub);
}

void draw_polyomino(Painter& p, const Polyomino& cells, int angle, std::int64_t unit, int cx, int cy, Rgb color) {
  if (cells.empty()) return;
  int lr = cells[0].row, hr = lr, lc = cells[0].col, hc = lc;
  for (const auto& c : cells) {
    lr = std::min(lr, c.row);
    hr = std::max(hr, c.row);
    lc = std::min(lc, c.col);
    hc = std::max(hc, c.col);
  }
  const std::int64_t co = fixed_cos(angle);
  const std::int64_t si = fixed_sin(angle);
  for (const auto& cell : cells) {
    std::vector<Point> quad;
    constexpr int kCorners[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    for (const auto& k : kCorners) {
      const std::int64_t x = 2 * (cell.col + k[0]) - (lc + hc + 1);
      const std::int64_t y = 2 * (cell.row + k[1]) - (lr + hr + 1);
      // Counterclockwise on screen with y pointing down.
      const std::int64_t rx = x * co + y * si;
      const std::int64_t ry = -x * si + y * co;
      quad.push_back({cx * kSub + ((rx * unit) >> 15), cy * kSub + ((ry * unit) >> 15)});
    }
    p.polygon(quad, kEdge);
    p.polygon(shrink(quad, 14), color);
  }
}

void draw_polycube(Painter& p, const Polycube& v, const Angles3& angles, std::int64_t unit, int cx, int cy,
                   Rgb color) {
  for (const auto& face : project_3d(v, angles, unit)) {
    std::vector<Point> quad;
    for (const auto& c : face.corners) quad.push_back({cx * kSub + c[0], cy * kSub + c[1]});
    p.polygon(quad, kEdge);
    p.polygon(shrink(quad, 12), scale(color, face.brightness));
  }
}

}  // namespace

std::vector<ProjectedFace> project_3d(const Polycube& voxels, const Angles3& angles, std::int64_t unit) {
  std::vector<ProjectedFace> faces;
  if (voxels.empty()) return faces;
  const Mat pose = mat_mul(axis(Axis::z, angles[2]), mat_mul(axis(Axis::y, angles[1]), axis(Axis::x, angles[0])));
  const Mat m = mat_mul(camera(), pose);
  std::array<int, 3> lo{voxels[0].x, voxels[0].y, voxels[0].z};
  std::array<int, 3> hi = lo;
  for (const auto& p : voxels) {
    lo = {std::min(lo[0], p.x), std::min(lo[1], p.y), std::min(lo[2], p.z)};
    hi = {std::max(hi[0], p.x), std::max(hi[1], p.y), std::max(hi[2], p.z)};
  }
  Polycube sorted = voxels;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : sorted) {
    for (int axis_i = 0; axis_i < 3; ++axis_i) {
      for (int dir = -1; dir <= 1; dir += 2) {
        std::array<int, 3> n{0, 0, 0};
        n[static_cast<std::size_t>(axis_i)] = dir;
        if (std::binary_search(sorted.begin(), sorted.end(), Voxel{v.x + n[0], v.y + n[1], v.z + n[2]})) continue;
        const auto rn = transform(m, {n[0], n[1], n[2]});
        if (rn[2] <= 0) continue;
        // Face corners in doubled centered coordinates.
        const std::array<int, 3> base{v.x, v.y, v.z};
        const int u = (axis_i + 1) % 3;
        const int w = (axis_i + 2) % 3;
        constexpr int kLoop[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        ProjectedFace face;
        std::int64_t depth = 0;
        for (std::size_t k = 0; k < 4; ++k) {
          std::array<int, 3> corner = base;
          if (dir > 0) corner[static_cast<std::size_t>(axis_i)] += 1;
          corner[static_cast<std::size_t>(u)] += kLoop[k][0];
          corner[static_cast<std::size_t>(w)] += kLoop[k][1];
          std::array<std::int64_t, 3> d{};
          for (std::size_t a = 0; a < 3; ++a) d[a] = 2 * corner[a] - (lo[a] + hi[a] + 1);
          const auto r = transform(m, d);
          face.corners[k] = {{(r[0] * unit) >> 15, (-r[1] * unit) >> 15}};
          depth += r[2];
        }
        face.depth = depth;
        const std::int64_t dot = (rn[0] * kLight[0] + rn[1] * kLight[1] + rn[2] * kLight[2]) >> 14;
        face.brightness = static_cast<int>(96 + (159 * std::clamp<std::int64_t>(dot, 0, kFixedOne)) / kFixedOne);
        faces.push_back(face);
      }
    }
  }
  std::sort(faces.begin(), faces.end(), [](const ProjectedFace& a, const ProjectedFace& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    if (a.brightness != b.brightness) return a.brightness < b.brightness;
    return a.corners < b.corners;
  });
  return faces;
}

Frame downsample(const Frame& frame) {
  Frame out(frame.width / 2, frame.height / 2, kBlack);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      for (int ch = 0; ch < 3; ++ch) {
        auto px = [&](int xx, int yy) {
          return frame.pixels[static_cast<std::size_t>((yy * frame.width + xx) * 3 + ch)];
        };
        const int sum = px(2 * x, 2 * y) + px(2 * x + 1, 2 * y) + px(2 * x, 2 * y + 1) + px(2 * x + 1, 2 * y + 1);
        out.pixels[static_cast<std::size_t>((y * out.width + x) * 3 + ch)] = static_cast<std::uint8_t>((sum + 2) / 4);
      }
    }
  }
  return out;
}

Frame render(GameId game, const EngineState& state, int size) {
  if (!valid_frame_size(size)) {
    throw PuzzleError(ErrorKind::invalid_argument, "frame size must be 256, 128 or 64");
  }
  if (!state_matches(game, state)) {
    throw PuzzleError(ErrorKind::invalid_argument,
                      "state does not belong to game " + std::string(game_name(game)));
  }
  Frame f(kNativeSize, kNativeSize, kWhite);
  Painter p(f);
  switch (game) {
    case GameId::sokoban: draw_sokoban(p, std::get<SokobanState>(state)); break;
    case GameId::bloxorz: draw_bloxorz(p, f, std::get<BloxorzState>(state)); break;
    case GameId::rush_hour: draw_rush_hour(p, std::get<RushHourState>(state)); break;
    case GameId::tangram:
    case GameId::tangram_certificate: draw_tangram(p, std::get<TangramState>(state)); break;
    case GameId::jigsaw: draw_jigsaw(p, f, std::get<JigsawState>(state)); break;
    case GameId::char_recognition: draw_charrec(p, std::get<CharRecState>(state)); break;
    case GameId::anagram: draw_anagram(p, std::get<AnagramState>(state)); break;
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d: {
      const auto& s = std::get<Rot2DState>(state);
      const std::int64_t unit = fit_unit(std::max(radius2(s.shape), radius2(s.reference)), 56, 24);
      p.rect(127, 8, 129, 248, kGridLine);
      draw_polyomino(p, s.shape, s.angle, unit, 64, 128, kLeftShape);
      draw_polyomino(p, s.reference, s.target_angle, unit, 192, 128, kRightShape);
      break;
    }
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d: {
      const auto& s = std::get<Rot3DState>(state);
      const std::int64_t unit = fit_unit(std::max(radius2(s.shape), radius2(s.reference)), 58, 22);
      p.rect(127, 8, 129, 248, kGridLine);
      draw_polycube(p, normalize(s.shape), s.angles, unit, 64, 128, kLeftShape);
      draw_polycube(p, normalize(s.reference), s.target, unit, 192, 128, kRightShape);
      break;
    }
  }
  while (f.width > size) f = downsample(f);
  return f;
}

namespace {

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift <= 24; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_chunk(std::vector<std::uint8_t>& out, const char* type, const std::vector<std::uint8_t>& data) {
  put_u32_be(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const auto crc = crc32(0L, out.data() + start, static_cast<uInt>(out.size() - start));
  put_u32_be(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Frame& frame) {
  std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  std::vector<std::uint8_t> ihdr;
  put_u32_be(ihdr, static_cast<std::uint32_t>(frame.width));
  put_u32_be(ihdr, static_cast<std::uint32_t>(frame.height));
  ihdr.insert(ihdr.end(), {8, 2, 0, 0, 0});
  put_chunk(out, "IHDR", ihdr);

  std::vector<std::uint8_t> raw;
  const auto stride = static_cast<std::size_t>(frame.width * 3);
  raw.reserve((stride + 1) * static_cast<std::size_t>(frame.height));
  for (int y = 0; y < frame.height; ++y) {
    raw.push_back(0);
    const auto row = frame.pixels.begin() + static_cast<std::ptrdiff_t>(stride * static_cast<std::size_t>(y));
    raw.insert(raw.end(), row, row + static_cast<std::ptrdiff_t>(stride));
  }
  std::vector<std::uint8_t> z = {0x78, 0x01};
  std::size_t pos = 0;
  do {
    const std::size_t n = std::min<std::size_t>(65535, raw.size() - pos);
    const bool last = pos + n == raw.size();
    z.push_back(last ? 1 : 0);
    z.push_back(static_cast<std::uint8_t>(n & 0xff));
    z.push_back(static_cast<std::uint8_t>(n >> 8));
    z.push_back(static_cast<std::uint8_t>(~n & 0xff));
    z.push_back(static_cast<std::uint8_t>((~n >> 8) & 0xff));
    z.insert(z.end(), raw.begin() + static_cast<std::ptrdiff_t>(pos),
             raw.begin() + static_cast<std::ptrdiff_t>(pos + n));
    pos += n;
  } while (pos < raw.size());
  put_u32_be(z, static_cast<std::uint32_t>(adler32(1L, raw.data(), static_cast<uInt>(raw.size()))));
  put_chunk(out, "IDAT", z);
  put_chunk(out, "IEND", {});
  return out;
}

std::vector<std::uint8_t> raw_frame(const Frame& frame) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + frame.pixels.size());
  put_u32_le(out, static_cast<std::uint32_t>(frame.width));
  put_u32_le(out, static_cast<std::uint32_t>(frame.height));
  out.insert(out.end(), frame.pixels.begin(), frame.pixels.end());
  return out;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw PuzzleError(ErrorKind::io_error, "cannot write " + path);
}

}  // namespace puzzles
