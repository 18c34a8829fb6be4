#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "puzzles/instance.hpp"

using namespace puzzles;

namespace {

bool replays(GameId game, const EngineState& start, const std::vector<Action>& actions) {
  EngineState s = start;
  for (const auto& a : actions) {
    auto next = step(game, s, a);
    if (!next) return false;
    s = std::move(next).value();
  }
  return is_goal(game, s);
}

// Brute force over row subsets of a small matrix.
bool brute_cover(const ExactCoverMatrix& m) {
  const std::size_t n = m.rows.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> hits(static_cast<std::size_t>(m.column_count()), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if ((mask >> r) & 1U) {
        for (int c : m.rows[r].columns) ++hits[static_cast<std::size_t>(c)];
      }
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("solvers") {
  TEST_CASE("BFS length equals the naive oracle on sampled instances") {
    for (GameId g : {GameId::sokoban, GameId::bloxorz, GameId::rush_hour}) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = sample(g, Seed{seed}, Difficulty::defaults(g));
        const auto truth = oracle::shortest_path(g, inst.initial);
        REQUIRE_FALSE(truth.truncated);
        REQUIRE(truth.length.has_value());
        CAPTURE(game_name(g));
        CAPTURE(seed);
        CHECK(static_cast<int>(inst.ground_truth.actions.size()) == *truth.length);
        CHECK(inst.ground_truth.optimal);
        CHECK(replays(g, inst.initial, inst.ground_truth.actions));
      }
    }
  }

  TEST_CASE("BFS on a state already at the goal returns no actions") {
    const auto s = SokobanState::parse("#####/#@.*#/#####").value();
    const auto r = solve_bfs(GameId::sokoban, EngineState{s});
    CHECK(r.status == SearchStatus::solved);
    CHECK(r.solution.actions.empty());
  }

  TEST_CASE("box wedged in a corner is unsolvable") {
    const auto s = SokobanState::parse("#####/#@.O#/#..X#/#####").value();
    const auto r = solve_bfs(GameId::sokoban, EngineState{s});
    CHECK(r.status == SearchStatus::unsolvable);
    CHECK_FALSE(oracle::shortest_path(GameId::sokoban, EngineState{s}).length.has_value());
    CHECK_THROWS_AS(solve(GameId::sokoban, EngineState{s}), PuzzleError);
  }

  TEST_CASE("BFS budget is honored") {
    const auto inst = sample(GameId::rush_hour, Seed{1}, Difficulty::defaults(GameId::rush_hour));
    const auto r = solve_bfs(GameId::rush_hour, inst.initial, 3);
    CHECK(r.status == SearchStatus::budget_exceeded);
  }

  TEST_CASE("dancing links agrees with subset enumeration on random matrices") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      ExactCoverMatrix m;
      m.cell_columns = 2 + static_cast<int>(rng.below(6));
      const int rows = 1 + static_cast<int>(rng.below(12));
      for (int r = 0; r < rows; ++r) {
        ExactCoverMatrix::Row row;
        for (int c = 0; c < m.cell_columns; ++c) {
          if (rng.percent(35)) row.columns.push_back(c);
        }
        if (row.columns.empty()) row.columns.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(m.cell_columns))));
        m.rows.push_back(row);
      }
      const auto got = dancing_links(m);
      CHECK((got.status == SearchStatus::solved) == brute_cover(m));
      if (got.status == SearchStatus::solved) {
        std::vector<int> hits(static_cast<std::size_t>(m.column_count()), 0);
        for (int r : got.rows) {
          for (int c : m.rows[static_cast<std::size_t>(r)].columns) ++hits[static_cast<std::size_t>(c)];
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      }
    }
  }

  TEST_CASE("full seven-piece tangrams are tiled by the expert") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = sample(GameId::tangram, Seed{seed}, Difficulty::defaults(GameId::tangram));
      const auto& s = std::get<TangramState>(inst.initial);
      CHECK(s.pieces.size() == 7);
      CHECK(s.target_area() == 40);
      CHECK(replays(GameId::tangram, inst.initial, inst.ground_truth.actions));
    }
  }

  TEST_CASE("experts are deterministic") {
    for (GameId g : kAllGames) {
      const auto a = sample(g, Seed{5}, Difficulty::defaults(g));
      CHECK(solve(g, a.initial) == a.ground_truth);
      CHECK(solve(g, a.initial) == solve(g, a.initial));
    }
  }

  TEST_CASE("closed-form experts for jigsaw and char recognition replay to the goal") {
    for (GameId g : {GameId::jigsaw, GameId::char_recognition, GameId::anagram, GameId::shape_match_2d,
                     GameId::shape_match_3d}) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = sample(g, Seed{seed}, Difficulty::defaults(g));
        CHECK(replays(g, inst.initial, inst.ground_truth.actions));
      }
    }
  }
}
