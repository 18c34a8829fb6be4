#include "puzzles/engine.hpp"

namespace puzzles {

namespace {

template <class S>
Result<EngineState> lift(Result<S> r) {
  if (!r) return r.error();
  return EngineState{std::move(r).value()};
}

template <class S>
const S& expect(GameId game, const EngineState& state) {
  const S* s = std::get_if<S>(&state);
  if (s == nullptr) {
    throw PuzzleError(ErrorKind::invalid_argument,
                      "state does not belong to game " + std::string(game_name(game)));
  }
  return *s;
}

std::size_t state_index(GameId game) {
  switch (game) {
    case GameId::sokoban: return 0;
    case GameId::bloxorz: return 1;
    case GameId::rush_hour: return 2;
    case GameId::tangram:
    case GameId::tangram_certificate: return 3;
    case GameId::jigsaw: return 4;
    case GameId::char_recognition: return 5;
    case GameId::anagram: return 6;
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d: return 7;
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d: return 8;
  }
  return 0;
}

void keep_legal(GameId game, const EngineState& state, std::vector<Action> candidates,
                std::vector<Action>& out) {
  for (auto& a : candidates) {
    if (step(game, state, a)) out.push_back(std::move(a));
  }
}

}  // namespace

bool state_matches(GameId game, const EngineState& state) {
  return state.index() == state_index(game);
}

Result<EngineState> step(GameId game, const EngineState& state, const Action& action) {
  switch (game) {
    case GameId::sokoban: {
      const auto& s = expect<SokobanState>(game, state);
      const auto* m = std::get_if<Move>(&action);
      if (m == nullptr) return Error::illegal("unsupported_action");
      return lift(sokoban_step(s, m->dir));
    }
    case GameId::bloxorz: {
      const auto& s = expect<BloxorzState>(game, state);
      const auto* m = std::get_if<Move>(&action);
      if (m == nullptr) return Error::illegal("unsupported_action");
      return lift(bloxorz_step(s, m->dir));
    }
    case GameId::rush_hour: {
      const auto& s = expect<RushHourState>(game, state);
      const auto* m = std::get_if<Slide>(&action);
      if (m == nullptr) return Error::illegal("unsupported_action");
      return lift(rushhour_step(s, m->vehicle, m->dir, m->distance));
    }
    case GameId::tangram:
    case GameId::tangram_certificate:
      return lift(tangram_apply(expect<TangramState>(game, state), action));
    case GameId::jigsaw: return lift(jigsaw_apply(expect<JigsawState>(game, state), action));
    case GameId::char_recognition:
      return lift(charrec_apply(expect<CharRecState>(game, state), action));
    case GameId::anagram: return lift(anagram_apply(expect<AnagramState>(game, state), action));
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d:
      return lift(rot2d_apply(expect<Rot2DState>(game, state), action));
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d:
      return lift(rot3d_apply(expect<Rot3DState>(game, state), action));
  }
  return Error::illegal("unsupported_action");
}

bool is_goal(GameId game, const EngineState& state) {
  switch (game) {
    case GameId::sokoban: return sokoban_is_goal(expect<SokobanState>(game, state));
    case GameId::bloxorz: return bloxorz_is_goal(expect<BloxorzState>(game, state));
    case GameId::rush_hour: return rushhour_is_goal(expect<RushHourState>(game, state));
    case GameId::tangram:
    case GameId::tangram_certificate: return tangram_is_goal(expect<TangramState>(game, state));
    case GameId::jigsaw: return jigsaw_is_goal(expect<JigsawState>(game, state));
    case GameId::char_recognition: return charrec_is_goal(expect<CharRecState>(game, state));
    case GameId::anagram: return anagram_is_goal(expect<AnagramState>(game, state));
    case GameId::shape_match_2d: return rot2d_is_goal(expect<Rot2DState>(game, state));
    case GameId::shape_match_3d: return rot3d_is_goal(expect<Rot3DState>(game, state));
    case GameId::mental_rotation_2d: {
      const auto& s = expect<Rot2DState>(game, state);
      return poses_match(s.shape, s.angle, s.reference, s.target_angle);
    }
    case GameId::mental_rotation_3d: {
      const auto& s = expect<Rot3DState>(game, state);
      return poses_match(s.shape, s.angles, s.reference, s.target);
    }
  }
  return false;
}

std::vector<Action> legal_actions(GameId game, const EngineState& state) {
  std::vector<Action> out;
  std::vector<Action> candidates;
  switch (game) {
    case GameId::sokoban:
    case GameId::bloxorz:
      for (Dir d : kDirs) candidates.push_back(Move{d});
      break;
    case GameId::rush_hour: {
      const auto& s = expect<RushHourState>(game, state);
      for (const auto& v : s.vehicles) {
        for (Dir d : kDirs) {
          const bool horizontal_move = d == Dir::left || d == Dir::right;
          if (horizontal_move != v.horizontal) continue;
          for (int n = 1; n < kRushHourSize; ++n) {
            if (!rushhour_step(s, v.letter, d, n)) break;
            out.push_back(Slide{v.letter, d, n});
          }
        }
      }
      return out;
    }
    case GameId::tangram:
    case GameId::tangram_certificate: {
      const auto& s = expect<TangramState>(game, state);
      for (const auto& p : s.pieces) {
        for (int deg : {90, 180, 270}) candidates.push_back(PieceRotate{p.id, deg});
        for (int r = 0; r < s.height; ++r) {
          for (int c = 0; c < s.width; ++c) candidates.push_back(PiecePlace{p.id, r, c});
        }
      }
      break;
    }
    case GameId::jigsaw: {
      const auto& s = expect<JigsawState>(game, state);
      for (int id = 0; id < s.piece_count(); ++id) {
        candidates.push_back(PieceTurn{id, Turn::cw});
        candidates.push_back(PieceTurn{id, Turn::ccw});
        for (int r = 0; r < s.k; ++r) {
          for (int c = 0; c < s.k; ++c) candidates.push_back(PiecePlace{id, r, c});
        }
      }
      break;
    }
    case GameId::char_recognition: {
      for (int k = 0; k < kFragments; ++k) {
        for (int deg : {90, 180, 270}) candidates.push_back(FragmentRotate{k, deg});
        for (int slot = 0; slot < kFragments; ++slot) {
          candidates.push_back(FragmentPlace{k, slot_label(slot)});
        }
      }
      for (char c = 'A'; c <= 'Z'; ++c) candidates.push_back(Identify{std::string(1, c)});
      for (char c = '0'; c <= '9'; ++c) candidates.push_back(Identify{std::string(1, c)});
      break;
    }
    case GameId::anagram: {
      const auto& s = expect<AnagramState>(game, state);
      const int n = static_cast<int>(s.letters.size());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.push_back(Swap{i, j});
      }
      if (s.dictionary) {
        for (const auto& w : s.dictionary->words_of_length(s.letters.size())) {
          if (sorted_letters(w) == sorted_letters(s.letters)) out.push_back(Identify{w});
        }
      }
      return out;
    }
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d:
      out.push_back(Spin{kRotationIncrement});
      out.push_back(Spin{-kRotationIncrement});
      return out;
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d:
      for (Axis a : {Axis::x, Axis::y, Axis::z}) {
        out.push_back(AxisSpin{a, kRotationIncrement});
        out.push_back(AxisSpin{a, -kRotationIncrement});
      }
      return out;
  }
  keep_legal(game, state, std::move(candidates), out);
  return out;
}

}  // namespace puzzles
