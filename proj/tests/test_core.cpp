#include <set>

#include "doctest.h"
#include "puzzles/instance.hpp"

using namespace puzzles;

TEST_SUITE("core") {
  TEST_CASE("twelve distinct game ids with stable names") {
    std::set<std::string_view> names;
    for (GameId g : kAllGames) {
      names.insert(game_name(g));
      CHECK(parse_game(game_name(g)) == g);
    }
    CHECK(names.size() == 12);
    CHECK_FALSE(parse_game("chess"));
    int certificates = 0;
    for (GameId g : kAllGames) certificates += is_certificate(g) ? 1 : 0;
    CHECK(certificates == 3);
  }

  TEST_CASE("parse_action base cases") {
    auto up = parse_action(GameId::sokoban, "up");
    REQUIRE(up);
    CHECK(*up == Action{Move{Dir::up}});

    auto id = parse_action(GameId::anagram, "identify(cat)");
    REQUIRE(id);
    CHECK(*id == Action{Identify{"cat"}});

    auto jump = parse_action(GameId::sokoban, "jump");
    REQUIRE_FALSE(jump);
    CHECK(jump.error().kind == ErrorKind::parse_error);
    CHECK(jump.error().offset == 0);
  }

  TEST_CASE("surrounding whitespace is ignored, operators are case sensitive") {
    CHECK(parse_action(GameId::bloxorz, "  left\n").ok());
    CHECK_FALSE(parse_action(GameId::bloxorz, "Left").ok());
    const auto bad = parse_action(GameId::rush_hour, "slide(A,right,x)");
    REQUIRE_FALSE(bad);
    CHECK(bad.error().offset.has_value());
  }

  TEST_CASE("tokens of another game are rejected") {
    CHECK_FALSE(parse_action(GameId::sokoban, "slide(A,right,1)").ok());
    CHECK_FALSE(parse_action(GameId::jigsaw, "rotate(+15)").ok());
    CHECK_FALSE(parse_action(GameId::shape_match_2d, "rotate(x,+15)").ok());
  }

  TEST_CASE("grammar totality and legality closure on sampled states") {
    Resources res;
    for (GameId g : kAllGames) {
      CAPTURE(game_name(g));
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Instance inst = sample(g, Seed{seed}, Difficulty::defaults(g), res);
        EngineState s = inst.initial;
        std::vector<EngineState> trail{s};
        for (const auto& a : inst.ground_truth.actions) {
          s = step(g, s, a).value();
          trail.push_back(s);
        }
        for (const auto& state : trail) {
          const auto legal = legal_actions(g, state);
          std::set<std::string> legal_text;
          for (const auto& a : legal) {
            const std::string text = render_action(a);
            legal_text.insert(text);
            auto parsed = parse_action(g, text);
            REQUIRE(parsed);
            CHECK(*parsed == a);
            CHECK(step(g, state, a).ok());
          }
          // No legal token is a prefix of another.
          for (const auto& a : legal_text) {
            for (const auto& b : legal_text) {
              if (a != b) CHECK_FALSE(b.rfind(a, 0) == 0);
            }
          }
          // Every expert action at this state (if any) is in the legal set.
          for (const auto& a : inst.ground_truth.actions) {
            if (step(g, state, a).ok()) CHECK(legal_text.count(render_action(a)) == 1);
          }
        }
      }
    }
  }

  TEST_CASE("step is pure") {
    const Instance inst = sample(GameId::sokoban, Seed{4}, Difficulty::defaults(GameId::sokoban));
    const EngineState before = inst.initial;
    const auto a = inst.ground_truth.actions.front();
    const auto r1 = step(GameId::sokoban, inst.initial, a);
    const auto r2 = step(GameId::sokoban, inst.initial, a);
    CHECK(inst.initial == before);
    CHECK(r1.value() == r2.value());
  }

  TEST_CASE("seed streams are domain separated and deterministic") {
    Rng a = Rng::for_instance(GameId::sokoban, Seed{1});
    Rng b = Rng::for_instance(GameId::sokoban, Seed{1});
    Rng c = Rng::for_instance(GameId::bloxorz, Seed{1});
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }

  TEST_CASE("bounded draws are uniform enough and in range") {
    Rng r(7);
    std::array<int, 6> counts{};
    for (int i = 0; i < 60000; ++i) {
      const auto v = r.below(6);
      REQUIRE(v < 6);
      ++counts[v];
    }
    for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  }

  TEST_CASE("wrong state alternative is rejected") {
    const auto s = sample(GameId::jigsaw, Seed{0}, Difficulty::defaults(GameId::jigsaw)).initial;
    CHECK_FALSE(state_matches(GameId::sokoban, s));
    CHECK_THROWS_AS((void)step(GameId::sokoban, s, Move{Dir::up}), PuzzleError);
  }
}
