#include <algorithm>
#include <map>
#include <set>
#include <string_view>

#include "puzzles/assembly.hpp"

namespace puzzles {

namespace {

struct GlyphRows {
  char c;
  std::array<std::string_view, 7> rows;
};

// 5x7 source font; glyphs are scaled 2x into the 16x16 cell.
constexpr GlyphRows kFont[] = {
    {'A', {"01110", "10001", "10001", "11111", "10001", "10001", "10001"}},
    {'B', {"11110", "10001", "10001", "11110", "10001", "10001", "11110"}},
    {'C', {"01110", "10001", "10000", "10000", "10000", "10001", "01110"}},
    {'D', {"11110", "10001", "10001", "10001", "10001", "10001", "11110"}},
    {'E', {"11111", "10000", "10000", "11110", "10000", "10000", "11111"}},
    {'F', {"11111", "10000", "10000", "11110", "10000", "10000", "10000"}},
    {'G', {"01110", "10001", "10000", "10111", "10001", "10001", "01111"}},
    {'H', {"10001", "10001", "10001", "11111", "10001", "10001", "10001"}},
    {'I', {"01110", "00100", "00100", "00100", "00100", "00100", "01110"}},
    {'J', {"00111", "00010", "00010", "00010", "00010", "10010", "01100"}},
    {'K', {"10001", "10010", "10100", "11000", "10100", "10010", "10001"}},
    {'L', {"10000", "10000", "10000", "10000", "10000", "10000", "11111"}},
    {'M', {"10001", "11011", "10101", "10101", "10001", "10001", "10001"}},
    {'N', {"10001", "10001", "11001", "10101", "10011", "10001", "10001"}},
    {'O', {"01110", "10001", "10001", "10001", "10001", "10001", "01110"}},
    {'P', {"11110", "10001", "10001", "11110", "10000", "10000", "10000"}},
    {'Q', {"01110", "10001", "10001", "10001", "10101", "10010", "01101"}},
    {'R', {"11110", "10001", "10001", "11110", "10100", "10010", "10001"}},
    {'S', {"01111", "10000", "10000", "01110", "00001", "00001", "11110"}},
    {'T', {"11111", "00100", "00100", "00100", "00100", "00100", "00100"}},
    {'U', {"10001", "10001", "10001", "10001", "10001", "10001", "01110"}},
    {'V', {"10001", "10001", "10001", "10001", "10001", "01010", "00100"}},
    {'W', {"10001", "10001", "10001", "10101", "10101", "10101", "01010"}},
    {'X', {"10001", "10001", "01010", "00100", "01010", "10001", "10001"}},
    {'Y', {"10001", "10001", "01010", "00100", "00100", "00100", "00100"}},
    {'Z', {"11111", "00001", "00010", "00100", "01000", "10000", "11111"}},
    {'0', {"01110", "10001", "10011", "10101", "11001", "10001", "01110"}},
    {'1', {"00100", "01100", "00100", "00100", "00100", "00100", "01110"}},
    {'2', {"01110", "10001", "00001", "00010", "00100", "01000", "11111"}},
    {'3', {"11111", "00010", "00100", "00010", "00001", "10001", "01110"}},
    {'4', {"00010", "00110", "01010", "10010", "11111", "00010", "00010"}},
    {'5', {"11111", "10000", "11110", "00001", "00001", "10001", "01110"}},
    {'6', {"00110", "01000", "10000", "11110", "10001", "10001", "01110"}},
    {'7', {"11111", "00001", "00010", "00100", "01000", "01000", "01000"}},
    {'8', {"01110", "10001", "10001", "01110", "10001", "10001", "01110"}},
    {'9', {"01110", "10001", "10001", "01111", "00001", "00010", "01100"}},
    {'+', {"00000", "00100", "00100", "11111", "00100", "00100", "00000"}},
    {'-', {"00000", "00000", "00000", "11111", "00000", "00000", "00000"}},
    {'?', {"01110", "10001", "00001", "00010", "00100", "00000", "00100"}},
};

using Fragment = FragmentBitmap;

Fragment cut(const GlyphBitmap& g, int slot) {
  Fragment f{};
  const int r0 = (slot / 2) * 8;
  const int c0 = (slot % 2) * 8;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      f[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          g[static_cast<std::size_t>(r0 + r)][static_cast<std::size_t>(c0 + c)];
    }
  }
  return f;
}

Fragment turn_ccw(const Fragment& f) {
  Fragment out{};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          f[static_cast<std::size_t>(c)][static_cast<std::size_t>(7 - r)];
    }
  }
  return out;
}

}  // namespace

FragmentBitmap fragment_view(char glyph, int slot, int rotation) {
  Fragment f = cut(glyph_bitmap(glyph), slot);
  for (int q = 0; q < ((rotation / 90) % 4 + 4) % 4; ++q) f = turn_ccw(f);
  return f;
}

const std::array<std::uint8_t, 7>* small_glyph(char c) {
  static const auto table = [] {
    std::map<char, std::array<std::uint8_t, 7>> t;
    for (const auto& g : kFont) {
      std::array<std::uint8_t, 7> bits{};
      for (std::size_t r = 0; r < 7; ++r) {
        for (std::size_t k = 0; k < 5; ++k) {
          if (g.rows[r][k] == '1') bits[r] = static_cast<std::uint8_t>(bits[r] | (0x10 >> k));
        }
      }
      t[g.c] = bits;
    }
    return t;
  }();
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  auto it = table.find(c);
  return it == table.end() ? nullptr : &it->second;
}

const GlyphBitmap& glyph_bitmap(char c) {
  static const auto table = [] {
    std::map<char, GlyphBitmap> t;
    for (const auto& g : kFont) {
      GlyphBitmap bmp{};
      for (int r = 0; r < 7; ++r) {
        for (int k = 0; k < 5; ++k) {
          if (g.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != '1') continue;
          for (int dr = 0; dr < 2; ++dr) {
            for (int dc = 0; dc < 2; ++dc) {
              bmp[static_cast<std::size_t>(1 + 2 * r + dr)][static_cast<std::size_t>(3 + 2 * k + dc)] = true;
            }
          }
        }
      }
      t[g.c] = bmp;
    }
    return t;
  }();
  auto it = table.find(c);
  if (it == table.end()) throw PuzzleError(ErrorKind::invalid_argument, "no glyph for character");
  return it->second;
}

const std::vector<char>& charrec_alphabet() {
  static const std::vector<char> alphabet = [] {
    std::vector<char> out;
    for (const auto& g : kFont) {
      const bool alnum = (g.c >= 'A' && g.c <= 'Z') || (g.c >= '0' && g.c <= '9');
      if (!alnum) continue;
      const GlyphBitmap& bmp = glyph_bitmap(g.c);
      std::set<Fragment> views;
      bool blank = false;
      for (int slot = 0; slot < kFragments; ++slot) {
        Fragment f = cut(bmp, slot);
        bool ink = false;
        for (const auto& row : f) ink = ink || std::find(row.begin(), row.end(), true) != row.end();
        blank = blank || !ink;
        for (int q = 0; q < 4; ++q) {
          views.insert(f);
          f = turn_ccw(f);
        }
      }
      if (!blank && views.size() == 16) out.push_back(g.c);
    }
    return out;
  }();
  return alphabet;
}

int CharRecState::placed_count() const {
  return static_cast<int>(std::count_if(slot.begin(), slot.end(), [](int s) { return s >= 0; }));
}

bool CharRecState::assembled_correctly() const {
  for (int k = 0; k < kFragments; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (slot[i] != true_slot[i] || rotations[i] != 0) return false;
  }
  return true;
}

void CharRecState::validate() const {
  auto fail = [](const char* what) { throw PuzzleError(ErrorKind::invalid_argument, what); };
  std::array<int, kFragments> used{};
  for (int s : slot) {
    if (s < -1 || s >= kFragments) fail("slot index");
    if (s >= 0 && ++used[static_cast<std::size_t>(s)] > 1) fail("slot holds two fragments");
  }
  std::array<int, kFragments> truth = true_slot;
  std::sort(truth.begin(), truth.end());
  for (int k = 0; k < kFragments; ++k) {
    if (truth[static_cast<std::size_t>(k)] != k) fail("true slots must be a permutation");
  }
  for (int r : rotations) {
    if (r != 0 && r != 90 && r != 180 && r != 270) fail("fragment rotation");
  }
}

Result<CharRecState> charrec_apply(const CharRecState& state, const Action& action) {
  if (const auto* rot = std::get_if<FragmentRotate>(&action)) {
    if (rot->fragment < 0 || rot->fragment >= kFragments) return Error::illegal("unknown_fragment");
    if (rot->degrees != 90 && rot->degrees != 180 && rot->degrees != 270) {
      return Error::illegal("bad_rotation");
    }
    CharRecState next = state;
    auto& r = next.rotations[static_cast<std::size_t>(rot->fragment)];
    r = (r + rot->degrees) % 360;
    return next;
  }
  if (const auto* place = std::get_if<FragmentPlace>(&action)) {
    if (place->fragment < 0 || place->fragment >= kFragments) return Error::illegal("unknown_fragment");
    const int slot = place->slot - 'A';
    if (slot < 0 || slot >= kFragments) return Error::illegal("unknown_slot");
    if (state.slot[static_cast<std::size_t>(place->fragment)] >= 0) return Error::illegal("already_placed");
    if (std::find(state.slot.begin(), state.slot.end(), slot) != state.slot.end()) {
      return Error::illegal("occupied");
    }
    CharRecState next = state;
    next.slot[static_cast<std::size_t>(place->fragment)] = slot;
    return next;
  }
  if (const auto* id = std::get_if<Identify>(&action)) {
    if (state.placed_count() != kFragments) return Error::illegal("not_assembled");
    if (id->text.size() != 1) return Error::illegal("bad_identify");
    CharRecState next = state;
    next.identified = id->text[0];
    return next;
  }
  return Error::illegal("unsupported_action");
}

bool charrec_is_goal(const CharRecState& state) {
  return state.assembled_correctly() && state.identified == state.glyph;
}

}  // namespace puzzles
