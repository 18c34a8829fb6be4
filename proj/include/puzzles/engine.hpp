#pragma once

// The behavioral contract shared by every game: a pure transition, a goal
// predicate and a legal-action enumeration, dispatched on GameId.

#include <variant>
#include <vector>

#include "puzzles/action.hpp"
#include "puzzles/anagram.hpp"
#include "puzzles/assembly.hpp"
#include "puzzles/rotation.hpp"
#include "puzzles/sliding.hpp"

namespace puzzles {

using EngineState = std::variant<SokobanState, BloxorzState, RushHourState, TangramState,
                                 JigsawState, CharRecState, AnagramState, Rot2DState, Rot3DState>;

/// True when `state` holds the alternative `game` is played on.
bool state_matches(GameId game, const EngineState& state);

/// Pure transition. Illegal actions (and actions of another game) yield
/// ErrorKind::illegal_action with a short reason.
Result<EngineState> step(GameId game, const EngineState& state, const Action& action);

/// Terminal success predicate. For certificate games this is "left pose
/// matches right pose" (rotation) or "silhouette filled" (tangram); the
/// certificate verdict itself is decided by the answer.
bool is_goal(GameId game, const EngineState& state);

/// Every action legal in `state`, in the fixed expansion order used by the
/// solvers. Free-text `identify` is represented by the words the state can
/// accept (anagram: dictionary anagrams; char recognition: every alphabet
/// character once assembled).
std::vector<Action> legal_actions(GameId game, const EngineState& state);

}  // namespace puzzles
