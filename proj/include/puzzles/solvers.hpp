#pragma once

// Expert solvers: breadth-first search for the sliding games, dancing-links
// exact cover for tangram, closed forms for everything else.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puzzles/engine.hpp"

namespace puzzles {

/// Hard cap on search nodes per instance.
inline constexpr std::uint64_t kExpansionBudget = 5'000'000;

struct Solution {
  std::vector<Action> actions;
  std::optional<std::string> answer;
  bool optimal = false;
  std::uint64_t expansions = 0;

  bool operator==(const Solution&) const = default;
};

enum class SearchStatus { solved, unsolvable, budget_exceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::unsolvable;
  Solution solution;  // meaningful when solved; expansions always filled
};

/// Shortest action sequence for sokoban, bloxorz or rush hour (moves for
/// sokoban and bloxorz, slides for rush hour). Expansion order: up, down,
/// left, right; vehicles alphabetically; slide distances ascending.
SearchResult solve_bfs(GameId game, const EngineState& state,
                       std::uint64_t budget = kExpansionBudget);

// ---------------------------------------------------------------------------
// Exact cover

/// Rows are candidate placements (piece x distinct rotation x anchor);
/// columns are silhouette cells followed by one column per piece.
struct ExactCoverMatrix {
  struct Row {
    int piece = 0;
    int rotation = 0;
    Cell2 anchor;
    std::vector<int> columns;  // ascending; last entry is the piece column
  };
  int cell_columns = 0;
  int piece_columns = 0;
  std::vector<Row> rows;

  static ExactCoverMatrix for_tangram(const TangramState& state);
  int column_count() const { return cell_columns + piece_columns; }
};

struct ExactCoverResult {
  SearchStatus status = SearchStatus::unsolvable;
  std::vector<int> rows;  // chosen row indices, ascending by piece
  std::uint64_t expansions = 0;
};

/// Algorithm X with dancing links; returns the first cover found.
ExactCoverResult dancing_links(const ExactCoverMatrix& matrix, std::uint64_t budget = kExpansionBudget);

/// Tiles the silhouette with every unplaced piece. Positive certificates and
/// plain tangrams get rotate+place actions in ascending piece id; the answer
/// is "yes"/"no" for the certificate game.
SearchResult solve_exact_cover(GameId game, const TangramState& state,
                               std::uint64_t budget = kExpansionBudget);

/// Closed-form experts: rotation games (per-axis shortest delta, x then y then
/// z), jigsaw and char recognition (rotations then placements), anagram
/// (cycle-decomposition swaps then identify), rotation certificates.
Solution solve_closed_form(GameId game, const EngineState& state);

/// Dispatches to the right expert. Throws PuzzleError when no solution exists
/// for a non-certificate game or the search budget is exhausted.
Solution solve(GameId game, const EngineState& state, std::uint64_t budget = kExpansionBudget);

}  // namespace puzzles
