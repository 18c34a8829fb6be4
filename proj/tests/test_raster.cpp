#include <zlib.h>

#include <cstring>

#include "doctest.h"
#include "puzzles/instance.hpp"
#include "puzzles/raster.hpp"

using namespace puzzles;

namespace {

std::uint32_t be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) | p[3];
}

// Minimal PNG reader: checks chunk CRCs, concatenates IDAT, inflates, and
// undoes filter type 0 only.
Frame decode_png(const std::vector<std::uint8_t>& png) {
  static const std::uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  REQUIRE(png.size() > 8);
  REQUIRE(std::memcmp(png.data(), kSignature, 8) == 0);
  std::size_t pos = 8;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> idat;
  bool ended = false;
  while (pos + 12 <= png.size()) {
    const std::uint32_t len = be32(&png[pos]);
    const std::string type(reinterpret_cast<const char*>(&png[pos + 4]), 4);
    REQUIRE(pos + 12 + len <= png.size());
    const std::uint32_t crc = be32(&png[pos + 8 + len]);
    CHECK(crc == static_cast<std::uint32_t>(::crc32(0, &png[pos + 4], len + 4)));
    const std::uint8_t* data = &png[pos + 8];
    if (type == "IHDR") {
      REQUIRE(len == 13);
      width = static_cast<int>(be32(data));
      height = static_cast<int>(be32(data + 4));
      CHECK(data[8] == 8);
      CHECK(data[9] == 2);
      CHECK(data[12] == 0);
    } else if (type == "IDAT") {
      idat.insert(idat.end(), data, data + len);
    } else if (type == "IEND") {
      ended = true;
    } else {
      FAIL("unexpected chunk " << type);
    }
    pos += 12 + len;
  }
  CHECK(ended);
  CHECK(pos == png.size());
  const std::size_t stride = static_cast<std::size_t>(width) * 3 + 1;
  std::vector<std::uint8_t> raw(stride * static_cast<std::size_t>(height));
  uLongf raw_len = raw.size();
  REQUIRE(::uncompress(raw.data(), &raw_len, idat.data(), idat.size()) == Z_OK);
  REQUIRE(raw_len == raw.size());
  Frame f(width, height, Rgb{});
  for (int y = 0; y < height; ++y) {
    CHECK(raw[static_cast<std::size_t>(y) * stride] == 0);
    std::memcpy(&f.pixels[static_cast<std::size_t>(y) * (stride - 1)], &raw[static_cast<std::size_t>(y) * stride + 1],
                stride - 1);
  }
  return f;
}

Frame box_filter(const Frame& f) {
  Frame out(f.width / 2, f.height / 2, Rgb{});
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const Rgb a = f.at(2 * x, 2 * y), b = f.at(2 * x + 1, 2 * y), c = f.at(2 * x, 2 * y + 1), d = f.at(2 * x + 1, 2 * y + 1);
      auto avg = [](int p, int q, int r, int s) { return static_cast<std::uint8_t>((p + q + r + s + 2) / 4); };
      out.set(x, y, Rgb{avg(a.r, b.r, c.r, d.r), avg(a.g, b.g, c.g, d.g), avg(a.b, b.b, c.b, d.b)});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("raster") {
  TEST_CASE("every game renders at the three sizes") {
    for (GameId g : kAllGames) {
      const auto inst = sample(g, Seed{3}, Difficulty::defaults(g));
      for (int size : {256, 128, 64}) {
        const Frame f = render(g, inst.initial, size);
        CHECK(f.width == size);
        CHECK(f.height == size);
        CHECK(f.pixels.size() == static_cast<std::size_t>(size * size * 3));
      }
      CHECK(render(g, inst.initial) == render(g, inst.initial));
    }
  }

  TEST_CASE("smaller sizes are box-filtered native frames") {
    for (GameId g : kAllGames) {
      const auto inst = sample(g, Seed{8}, Difficulty::defaults(g));
      const Frame native = render(g, inst.initial, 256);
      CHECK(render(g, inst.initial, 128) == box_filter(native));
      CHECK(render(g, inst.initial, 64) == box_filter(box_filter(native)));
      CHECK(downsample(native) == box_filter(native));
    }
  }

  TEST_CASE("bad sizes and mismatched states are rejected") {
    const auto inst = sample(GameId::sokoban, Seed{0}, Difficulty::defaults(GameId::sokoban));
    CHECK_THROWS_AS(render(GameId::sokoban, inst.initial, 100), PuzzleError);
    CHECK_THROWS_AS(render(GameId::bloxorz, inst.initial), PuzzleError);
    CHECK(valid_frame_size(64));
    CHECK_FALSE(valid_frame_size(32));
  }

  TEST_CASE("PNG round trip through an independent decoder") {
    for (GameId g : {GameId::sokoban, GameId::shape_match_3d, GameId::jigsaw}) {
      const auto inst = sample(g, Seed{1}, Difficulty::defaults(g));
      for (int size : {256, 64}) {
        const Frame f = render(g, inst.initial, size);
        CHECK(decode_png(encode_png(f)) == f);
      }
    }
    Frame odd(3, 2, Rgb{1, 2, 3});
    odd.set(2, 1, Rgb{200, 100, 50});
    CHECK(decode_png(encode_png(odd)) == odd);
  }

  TEST_CASE("raw frame layout") {
    Frame f(2, 1, Rgb{9, 8, 7});
    f.set(1, 0, Rgb{1, 2, 3});
    const std::vector<std::uint8_t> expected = {2, 0, 0, 0, 1, 0, 0, 0, 9, 8, 7, 1, 2, 3};
    CHECK(raw_frame(f) == expected);
  }

  TEST_CASE("fixed-point trigonometry") {
    for (int a = 0; a < 360; a += 15) {
      const long c = fixed_cos(a);
      const long s = fixed_sin(a);
      CHECK(std::abs(c * c + s * s - long{kFixedOne} * kFixedOne) < 3 * kFixedOne);
      CHECK(std::abs(c - std::lround(std::cos(a * M_PI / 180) * kFixedOne)) <= 1);
      CHECK(std::abs(s - std::lround(std::sin(a * M_PI / 180) * kFixedOne)) <= 1);
    }
    CHECK(fixed_cos(90) == 0);
    CHECK(fixed_sin(90) == kFixedOne);
    CHECK(fixed_cos(180) == -kFixedOne);
  }

  TEST_CASE("a single cube shows three faces drawn far to near") {
    const Polycube cube = {{0, 0, 0}};
    for (const Angles3 angles : {Angles3{0, 0, 0}, Angles3{0, 90, 0}, Angles3{90, 0, 180}}) {
      const auto faces = project_3d(cube, angles, 256 * 20);
      CHECK(faces.size() == 3);
      for (std::size_t i = 1; i < faces.size(); ++i) CHECK(faces[i - 1].depth <= faces[i].depth);
      for (const auto& f : faces) {
        CHECK(f.brightness >= 96);
        CHECK(f.brightness <= 255);
      }
    }
    // Quarter turns of a cube about any axis leave the picture unchanged.
    Rot3DState st;
    st.shape = cube;
    st.reference = cube;
    st.target = {0, 0, 0};
    const Frame base = render(GameId::shape_match_3d, EngineState{st});
    for (const Angles3 angles : {Angles3{90, 0, 0}, Angles3{0, 270, 0}, Angles3{180, 90, 90}}) {
      Rot3DState turned = st;
      turned.angles = angles;
      CHECK(render(GameId::shape_match_3d, EngineState{turned}) == base);
    }
  }

  TEST_CASE("hidden faces between adjacent cubes are not drawn") {
    const Polycube bar = {{0, 0, 0}, {1, 0, 0}};
    CHECK(project_3d(bar, {0, 0, 0}, 256 * 20).size() == 5);
  }

  TEST_CASE("state changes change the frame") {
    const auto inst = sample(GameId::sokoban, Seed{4}, Difficulty::defaults(GameId::sokoban));
    const auto next = step(GameId::sokoban, inst.initial, inst.ground_truth.actions.front()).value();
    CHECK_FALSE(render(GameId::sokoban, inst.initial) == render(GameId::sokoban, next));
    const auto rot = sample(GameId::shape_match_2d, Seed{4}, Difficulty::defaults(GameId::shape_match_2d));
    const auto turned = step(GameId::shape_match_2d, rot.initial, Action{Spin{15}}).value();
    CHECK_FALSE(render(GameId::shape_match_2d, rot.initial) == render(GameId::shape_match_2d, turned));
  }

  TEST_CASE("frames are stable across equal states built separately") {
    for (GameId g : kAllGames) {
      const auto a = sample(g, Seed{12}, Difficulty::defaults(g));
      const auto b = sample(g, Seed{12}, Difficulty::defaults(g));
      CHECK(encode_png(render(g, a.initial)) == encode_png(render(g, b.initial)));
    }
  }
}
