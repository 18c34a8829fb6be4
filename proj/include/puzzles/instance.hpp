#pragma once

// Seeded instance generation.

#include <memory>
#include <string>

#include "puzzles/difficulty.hpp"
#include "puzzles/engine.hpp"
#include "puzzles/solvers.hpp"

namespace puzzles {

/// Rejection attempts per seed before sampling gives up.
inline constexpr int kSampleRetries = 200;
/// Sliding-game candidates are cheap and often rejected by the min_moves bound.
inline constexpr int kSlidingRetries = 5000;

/// Shared read-only inputs to sampling.
struct Resources {
  std::shared_ptr<const Dictionary> dictionary = Dictionary::bundled();
};

struct Instance {
  GameId game = GameId::sokoban;
  Seed seed;
  Difficulty difficulty = Difficulty::defaults(GameId::sokoban);
  EngineState initial;
  Solution ground_truth;
  bool solvable = true;

  bool operator==(const Instance&) const = default;
};

/// Deterministic in (game, seed, difficulty). Certificate games delegate to
/// sample_certificate. Throws PuzzleError(sampling_exhausted) naming the seed
/// when no acceptable instance is found.
Instance sample(GameId game, Seed seed, const Difficulty& difficulty,
                const Resources& resources = {});

/// Yes/no instances with the answer drawn by a fair coin from the seed stream.
Instance sample_certificate(GameId game, Seed seed, const Difficulty& difficulty,
                            const Resources& resources = {});

/// The task instruction shown with `state`.
std::string prompt(GameId game, const EngineState& state);

}  // namespace puzzles
