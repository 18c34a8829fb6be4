#pragma once

// Compact per-state JSON descriptions used as textual chain-of-thought.

#include <string>

#include "puzzles/engine.hpp"

namespace puzzles {

/// Default warn-only length budget for one state description.
inline constexpr std::size_t kDefaultCharBudget = 256;

/// Single-line JSON for `state` after `moves` actions, keys in schema order.
std::string emit_state_json(GameId game, const EngineState& state, int moves);

/// Character count of a state description.
inline std::size_t char_budget(const std::string& state_json) { return state_json.size(); }

/// Grid strings (row-major, rows concatenated) as they appear in the schemas.
std::string sokoban_grid(const SokobanState& state);
std::string bloxorz_grid(const BloxorzState& state);
std::string rush_hour_grid(const RushHourState& state);
std::string tangram_canvas(const TangramState& state);

}  // namespace puzzles
