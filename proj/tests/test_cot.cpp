#include "doctest.h"
#include "json.hpp"
#include "listings.hpp"
#include "puzzles/cot.hpp"
#include "puzzles/instance.hpp"

using namespace puzzles;

namespace {

std::string golden(const std::string& name) {
  std::string text = listing::read_file(std::string(GOLDEN_DIR) + "/" + name + ".json");
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::vector<std::string> keys(const std::string& json) {
  std::vector<std::string> out;
  const auto parsed = nlohmann::ordered_json::parse(json);
  for (const auto& [k, v] : parsed.items()) out.push_back(k);
  return out;
}

const listing::Example& example(const std::string& name) {
  static const auto all = listing::examples();
  for (const auto& e : all) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no example " + name);
}

}  // namespace

TEST_SUITE("cot") {
  TEST_CASE("golden files are the listings of the reference document") {
    const std::string doc = listing::read_file(REFERENCE_DOC);
    for (const auto& e : listing::examples()) {
      CAPTURE(e.name);
      const auto extracted = listing::extract(doc, e.heading);
      REQUIRE(extracted.has_value());
      CHECK(*extracted == golden(e.name));
    }
  }

  TEST_CASE("seven listings reproduce byte for byte") {
    for (const std::string name : {"sokoban", "anagram", "tangram", "jigsaw", "char_recognition",
                                   "mental_rotation_3d", "mental_rotation_2d"}) {
      CAPTURE(name);
      const auto& e = example(name);
      CHECK(emit_state_json(e.game, e.state, e.moves) == golden(name));
    }
  }

  TEST_CASE("every serialized schema uses the listed key order") {
    for (const auto& e : listing::examples()) {
      CAPTURE(e.name);
      CHECK(keys(emit_state_json(e.game, e.state, e.moves)) == keys(golden(e.name)));
    }
  }

  TEST_CASE("bloxorz listing fields reproduce but its grid contradicts them") {
    const auto& e = example("bloxorz");
    auto got = nlohmann::ordered_json::parse(emit_state_json(e.game, e.state, e.moves));
    auto want = nlohmann::ordered_json::parse(golden("bloxorz"));
    const std::string grid = want["g"];
    got.erase("g");
    want.erase("g");
    CHECK(got == want);
    // No row width places S at (1,1) and G at the listed goal (3,3).
    const auto s_at = grid.find('S');
    const auto g_at = grid.find('G');
    int consistent_widths = 0;
    for (std::size_t w = 1; w <= grid.size(); ++w) {
      if (grid.size() % w != 0) continue;
      const bool s_ok = s_at / w == 1 && s_at % w == 1;
      const bool g_ok = g_at / w == 3 && g_at % w == 3;
      consistent_widths += s_ok && g_ok ? 1 : 0;
    }
    CHECK(consistent_widths == 0);
  }

  TEST_CASE("rush hour listing fields reproduce but its grid is not a 6x6 board") {
    const auto& e = example("rush_hour");
    auto got = nlohmann::ordered_json::parse(emit_state_json(e.game, e.state, e.moves));
    auto want = nlohmann::ordered_json::parse(golden("rush_hour"));
    const std::string grid = want["g"];
    got.erase("g");
    want.erase("g");
    CHECK(got == want);
    CHECK(grid.size() == 33);
    CHECK(grid.size() != static_cast<std::size_t>(kRushHourSize * kRushHourSize));
    CHECK(rush_hour_grid(std::get<RushHourState>(e.state)).size() == 36);
  }

  TEST_CASE("sokoban grid alphabet round-trips") {
    const auto s = SokobanState::parse("######/#+*O.#/#....#/######").value();
    CHECK(sokoban_grid(s) == "#######+*O.##....#######");
  }

  TEST_CASE("descriptions stay within the default length budget except tangram canvases") {
    std::size_t longest_tangram = 0;
    for (GameId g : kAllGames) {
      const bool tangram = g == GameId::tangram || g == GameId::tangram_certificate;
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = sample(g, Seed{seed}, Difficulty::defaults(g));
        EngineState s = inst.initial;
        std::vector<std::string> texts{emit_state_json(g, s, 0)};
        for (const auto& a : inst.ground_truth.actions) {
          s = step(g, s, a).value();
          texts.push_back(emit_state_json(g, s, static_cast<int>(texts.size())));
        }
        for (const auto& j : texts) {
          CHECK(nlohmann::json::accept(j));
          CHECK(char_budget(j) == j.size());
          if (tangram) {
            longest_tangram = std::max(longest_tangram, j.size());
          } else {
            CHECK(char_budget(j) <= kDefaultCharBudget);
          }
        }
      }
    }
    // Seven-piece canvases are larger than the budget; the exporter counts them.
    CHECK(longest_tangram > kDefaultCharBudget);
  }

  TEST_CASE("rotation descriptions carry the shortest deltas") {
    const auto& e = example("mental_rotation_2d");
    CHECK(emit_state_json(e.game, e.state, 0).find("\"delta\":90") != std::string::npos);
    Rot2DState s = std::get<Rot2DState>(e.state);
    s.angle = 300;
    s.target_angle = 30;
    CHECK(emit_state_json(GameId::shape_match_2d, s, 0).find("\"delta\":90") != std::string::npos);
    CHECK_THROWS_AS(emit_state_json(GameId::sokoban, e.state, 0), PuzzleError);
  }
}
