#pragma once

// Deliberately naive reference implementations used to check the library.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puzzles/instance.hpp"

namespace oracle {

struct SearchOutcome {
  std::optional<int> length;  // shortest solution, nullopt if unsolvable
  std::uint64_t states = 0;   // distinct states visited
  bool truncated = false;     // gave up after max_states
};

/// Plain BFS over engine transitions, trying every syntactically possible
/// action (all moves, or every vehicle x direction x distance 1..5), keyed by
/// the state's textual description.
SearchOutcome shortest_path(puzzles::GameId game, const puzzles::EngineState& start,
                            std::uint64_t max_states = 1'000'000);

/// Exhaustive tiling search: repeatedly covers the first uncovered silhouette
/// cell with every unused piece, rotation and cell offset.
bool tangram_tileable(const puzzles::TangramState& state);

/// BFS over letter permutations, one transposition per edge.
int anagram_swaps(const std::string& from, const std::string& to);

/// True when `to` is reachable from `from` in at most `depth` swaps, by
/// exhaustive depth-limited search pruned by the mismatch count.
bool anagram_within(const std::string& from, const std::string& to, int depth);

/// Minimal-magnitude signed delta by enumeration of all 24 residues; ties go to +180.
int angle_delta(int current, int target);

/// First violated documented parameter bound of a sampled instance, if any:
/// polycubes of 7..11 voxels, jigsaw k in {2,3}, anagram words of 6..10
/// letters at least 5 swaps from their scramble, a 6x6 rush hour board, and
/// rotation angles that are multiples of 15 degrees.
std::optional<std::string> parameter_violation(const puzzles::Instance& instance);

}  // namespace oracle
