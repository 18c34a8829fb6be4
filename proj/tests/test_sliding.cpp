#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "puzzles/cot.hpp"
#include "puzzles/instance.hpp"

using namespace puzzles;

namespace {

SokobanState sokoban(std::string_view rows) { return SokobanState::parse(rows).value(); }

RushHourState rush(std::vector<Vehicle> vehicles) {
  RushHourState s;
  s.vehicles = std::move(vehicles);
  s.validate();
  return s;
}

}  // namespace

TEST_SUITE("sliding") {
  TEST_CASE("sokoban example board: naive search optimum is 5") {
    const auto s = sokoban("#####/#@.X#/#.O.#/#...#/#####");
    CHECK(sokoban_grid(s) == "######@.X##.O.##...######");
    const auto oracle_result = oracle::shortest_path(GameId::sokoban, s);
    REQUIRE(oracle_result.length);
    CHECK(*oracle_result.length == 5);
    // One optimal witness, checked move by move.
    EngineState cur = s;
    for (Dir d : {Dir::down, Dir::right, Dir::down, Dir::right, Dir::up}) cur = step(GameId::sokoban, cur, Move{d}).value();
    CHECK(is_goal(GameId::sokoban, cur));
  }

  TEST_CASE("sokoban pushes") {
    const auto s = sokoban("#####/#@O.#/#.X.#/#####");
    auto r = sokoban_step(s, Dir::up);
    REQUIRE_FALSE(r);
    CHECK(r.error().kind == ErrorKind::illegal_action);
    const auto pushed = sokoban_step(s, Dir::right).value();
    CHECK(sokoban_grid(pushed) == "######.@O##.X.######");
    CHECK_FALSE(sokoban_step(pushed, Dir::right).ok());  // box against wall

    const auto two = sokoban("######/#@OO.#/#XX..#/######");
    CHECK_FALSE(sokoban_step(two, Dir::right).ok());  // box against box
  }

  TEST_CASE("sokoban non-push moves are reversible and conserve boxes") {
    const auto s = sokoban("######/#@...#/#.O..#/#..X.#/######");
    for (Dir d : kDirs) {
      auto r = sokoban_step(s, d);
      if (!r || r->boxes != s.boxes) continue;
      CHECK(sokoban_step(*r, opposite(d)).value() == s);
    }
  }

  TEST_CASE("sokoban goal and parse validation") {
    CHECK(sokoban_is_goal(sokoban("#####/#@*.#/#####")));
    CHECK_FALSE(sokoban_is_goal(sokoban("#####/#@OX#/#####")));
    CHECK_FALSE(SokobanState::parse("#####/#@OX#/#.X.#/#####").ok());  // box/goal count mismatch
    CHECK_FALSE(SokobanState::parse("####/#..#/####").ok());           // no player
  }

  TEST_CASE("bloxorz strip solved in two rolls") {
    const auto s = BloxorzState::parse("...G", Block{0, 0, Orientation::standing}).value();
    const auto r1 = bloxorz_step(s, Dir::right).value();
    CHECK(r1.block == Block{0, 1, Orientation::lying_x});
    const auto r2 = bloxorz_step(r1, Dir::right).value();
    CHECK(r2.block == Block{0, 3, Orientation::standing});
    CHECK(bloxorz_is_goal(r2));
    const auto o = oracle::shortest_path(GameId::bloxorz, s);
    REQUIRE(o.length);
    CHECK(*o.length == 2);
  }

  TEST_CASE("bloxorz goal requires standing") {
    const auto s = BloxorzState::parse("..G./....", Block{0, 1, Orientation::lying_x}).value();
    CHECK(s.block.covers(0, 2));
    CHECK_FALSE(bloxorz_is_goal(s));
  }

  TEST_CASE("bloxorz rolling off the board or onto a hole is illegal") {
    const auto s = BloxorzState::parse("....G", Block{0, 0, Orientation::standing}).value();
    CHECK_FALSE(bloxorz_step(s, Dir::left).ok());
    CHECK_FALSE(bloxorz_step(s, Dir::up).ok());
    const auto hole = BloxorzState::parse(".#..G", Block{0, 0, Orientation::standing}).value();
    CHECK_FALSE(bloxorz_step(hole, Dir::right).ok());
  }

  TEST_CASE("fragile tiles break on departure, not on arrival") {
    const auto s = BloxorzState::parse(":...G", Block{0, 0, Orientation::standing}).value();
    CHECK(s.has_fragile());
    const auto moved = bloxorz_step(s, Dir::right).value();
    CHECK(moved.tile(0, 0) == Tile::broken);
    CHECK(moved.broken_count() == 1);
    // Arriving on a fragile tile is fine.
    const auto t = BloxorzState::parse("...:.G", Block{0, 0, Orientation::standing}).value();
    const auto on = bloxorz_step(t, Dir::right).value();  // lying on cols 1-2
    const auto stand = bloxorz_step(on, Dir::right).value();
    CHECK(stand.block == Block{0, 3, Orientation::standing});
    CHECK(stand.tile(0, 3) == Tile::fragile);
    const auto away = bloxorz_step(stand, Dir::right).value();
    CHECK(away.tile(0, 3) == Tile::broken);
    // Returning onto a broken tile is illegal.
    CHECK_FALSE(bloxorz_step(away, Dir::left).ok());
  }

  TEST_CASE("bloxorz schema distance field") {
    BloxorzState s;
    s.width = 4;
    s.height = 5;
    s.tiles.assign(20, Tile::solid);
    s.goal_row = 3;
    s.goal_col = 3;
    s.block = Block{1, 1, Orientation::standing};
    const std::string json = emit_state_json(GameId::bloxorz, s, 2);
    CHECK(json.find("\"b\":[1,1,\"S\"],\"goal\":[3,3],\"broken\":0,\"distance\":4,\"moves\":2}") != std::string::npos);
  }

  TEST_CASE("rush hour unobstructed exit in one slide") {
    const auto s = rush({{'A', true, 2, 2, 0}});
    const auto r = rushhour_step(s, 'A', Dir::right, 4).value();
    CHECK(rushhour_is_goal(r));
    CHECK_FALSE(rushhour_step(s, 'A', Dir::right, 5).ok());
    CHECK_FALSE(rushhour_step(s, 'A', Dir::up, 1).ok());
  }

  TEST_CASE("rush hour slides may not pass through vehicles") {
    // B stands in column 3 across rows 1-3; the far cells are free.
    const auto s = rush({{'A', true, 2, 2, 0}, {'B', false, 3, 1, 3}});
    CHECK(rushhour_step(s, 'A', Dir::right, 1).ok());
    CHECK_FALSE(rushhour_step(s, 'A', Dir::right, 2).ok());
    CHECK_FALSE(rushhour_step(s, 'A', Dir::right, 3).ok());
    CHECK(blocking_vehicles(s) == std::vector<char>{'B'});
  }

  TEST_CASE("rush hour legality matches a cell-by-cell simulation") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = sample(GameId::rush_hour, Seed{seed}, Difficulty::defaults(GameId::rush_hour));
      const auto& s = std::get<RushHourState>(inst.initial);
      const auto grid = s.occupancy();
      for (const auto& v : s.vehicles) {
        for (Dir d : kDirs) {
          for (int n = 1; n <= 5; ++n) {
            const bool along = v.horizontal ? (d == Dir::left || d == Dir::right) : (d == Dir::up || d == Dir::down);
            bool free = along;
            for (int k = 1; k <= n && free; ++k) {
              // Leading cell after k unit moves.
              int r = v.row, c = v.col;
              if (d == Dir::right) c = v.col + v.length - 1 + k;
              if (d == Dir::left) c = v.col - k;
              if (d == Dir::down) r = v.row + v.length - 1 + k;
              if (d == Dir::up) r = v.row - k;
              free = r >= 0 && c >= 0 && r < 6 && c < 6 && grid[static_cast<std::size_t>(r * 6 + c)] == '.';
            }
            CHECK(rushhour_step(s, v.letter, d, n).ok() == free);
          }
        }
      }
    }
  }

  TEST_CASE("blocks_A lists vehicles strictly between A and the exit") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = sample(GameId::rush_hour, Seed{seed}, Difficulty::defaults(GameId::rush_hour));
      const auto& s = std::get<RushHourState>(inst.initial);
      const Vehicle* a = s.find('A');
      REQUIRE(a != nullptr);
      CHECK(a->horizontal);
      CHECK(a->length == 2);
      CHECK(a->row == s.exit_row);
      std::set<char> expect;
      const auto grid = s.occupancy();
      for (int c = a->col + a->length; c < 6; ++c) {
        const char ch = grid[static_cast<std::size_t>(s.exit_row * 6 + c)];
        if (ch != '.') expect.insert(ch);
      }
      const auto got = blocking_vehicles(s);
      CHECK(std::vector<char>(expect.begin(), expect.end()) == got);
    }
  }
}
