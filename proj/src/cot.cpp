#include "puzzles/cot.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace puzzles {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  out += s;
  out += '"';
  return out;
}

std::string field(std::string_view key, std::string_view value) {
  return quoted(key) + ":" + std::string(value);
}

std::string number(int v) { return std::to_string(v); }

template <class T, class F>
std::string array(const std::vector<T>& items, F&& render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ',';
    out += render(items[i]);
  }
  return out + "]";
}

std::string object(std::initializer_list<std::string> fields) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  return out + "}";
}

char orientation_code(Orientation o) {
  switch (o) {
    case Orientation::standing: return 'S';
    case Orientation::lying_x: return '=';
    case Orientation::lying_y: return 'H';
  }
  return 'S';
}

std::string letter_counts(const std::string& letters) {
  std::map<char, int> counts;
  for (char c : letters) ++counts[c];
  std::string out;
  for (const auto& [c, n] : counts) {
    if (!out.empty()) out += ' ';
    out += c;
    out += ':';
    out += std::to_string(n);
  }
  return out;
}

std::string nullable(int v) { return v < 0 ? "null" : std::to_string(v); }

}  // namespace

std::string sokoban_grid(const SokobanState& s) {
  std::string g;
  g.reserve(static_cast<std::size_t>(s.width * s.height));
  for (int i = 0; i < s.width * s.height; ++i) {
    const bool wall = SokobanState::test(s.walls, i);
    const bool goal = SokobanState::test(s.goals, i);
    const bool box = SokobanState::test(s.boxes, i);
    if (wall) {
      g += '#';
    } else if (i == s.player) {
      g += goal ? '+' : '@';
    } else if (box) {
      g += goal ? '*' : 'O';
    } else {
      g += goal ? 'X' : '.';
    }
  }
  return g;
}

std::string bloxorz_grid(const BloxorzState& s) {
  std::string g;
  for (int r = 0; r < s.height; ++r) {
    for (int c = 0; c < s.width; ++c) {
      if (s.block.covers(r, c)) {
        g += orientation_code(s.block.orientation);
      } else if (r == s.goal_row && c == s.goal_col) {
        g += 'G';
      } else {
        switch (s.tile(r, c)) {
          case Tile::absent: g += '#'; break;
          case Tile::solid: g += '.'; break;
          case Tile::fragile: g += ':'; break;
          case Tile::broken: g += 'x'; break;
        }
      }
    }
  }
  return g;
}

std::string rush_hour_grid(const RushHourState& s) {
  const auto grid = s.occupancy();
  return std::string(grid.begin(), grid.end());
}

std::string tangram_canvas(const TangramState& s) {
  const auto owner = s.owners();
  std::string c;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] >= 0) {
      c += static_cast<char>('0' + owner[i] % 10);
    } else {
      c += s.target[i] != 0 ? 'T' : '.';
    }
  }
  return c;
}

std::string emit_state_json(GameId game, const EngineState& state, int moves) {
  if (!state_matches(game, state)) {
    throw PuzzleError(ErrorKind::invalid_argument,
                      "state does not belong to game " + std::string(game_name(game)));
  }
  const std::string m = field("moves", number(moves));
  switch (game) {
    case GameId::sokoban: {
      const auto& s = std::get<SokobanState>(state);
      return object({field("g", quoted(sokoban_grid(s))), m});
    }
    case GameId::bloxorz: {
      const auto& s = std::get<BloxorzState>(state);
      const int distance = std::abs(s.block.row - s.goal_row) + std::abs(s.block.col - s.goal_col);
      const std::string code(1, orientation_code(s.block.orientation));
      return object({field("g", quoted(bloxorz_grid(s))),
                     field("b", "[" + number(s.block.row) + "," + number(s.block.col) + "," + quoted(code) + "]"),
                     field("goal", "[" + number(s.goal_row) + "," + number(s.goal_col) + "]"),
                     field("broken", number(s.broken_count())), field("distance", number(distance)), m});
    }
    case GameId::rush_hour: {
      const auto& s = std::get<RushHourState>(state);
      const auto blockers = blocking_vehicles(s);
      return object({field("g", quoted(rush_hour_grid(s))), field("exit_row", number(s.exit_row)),
                     field("exit_col", number(kRushHourSize - 1)),
                     field("n_vehicles", number(static_cast<int>(s.vehicles.size()))),
                     field("blocks_A", array(blockers, [](char c) { return quoted(std::string(1, c)); })),
                     m});
    }
    case GameId::anagram: {
      const auto& s = std::get<AnagramState>(state);
      const int n_valid = s.dictionary ? s.dictionary->anagram_count(s.letters) : 0;
      return object({field("letters", quoted(s.letters)), field("sorted", quoted(sorted_letters(s.letters))),
                     field("len", number(static_cast<int>(s.letters.size()))),
                     field("id", s.identified ? "true" : "false"), field("n_valid", number(n_valid)),
                     field("letter_counts", quoted(letter_counts(s.letters))), m});
    }
    case GameId::tangram:
    case GameId::tangram_certificate: {
      const auto& s = std::get<TangramState>(state);
      std::vector<const TangramPiece*> unplaced;
      for (const auto& p : s.pieces) {
        if (!p.placed_at) unplaced.push_back(&p);
      }
      return object({field("c", quoted(tangram_canvas(s))),
                     field("q_rot", array(unplaced,
                                          [](const TangramPiece* p) {
                                            return "[" + quoted("P" + number(p->id)) + "," +
                                                   number(p->rotation) + "]";
                                          })),
                     m});
    }
    case GameId::jigsaw: {
      const auto& s = std::get<JigsawState>(state);
      std::vector<int> unplaced;
      for (int id = 0; id < s.piece_count(); ++id) {
        if (s.cell_of(id) < 0) unplaced.push_back(id);
      }
      const int placed = s.piece_count() - static_cast<int>(unplaced.size());
      return object({field("g", array(s.cells, nullable)), field("r", array(s.rotations, number)),
                     field("unplaced", array(unplaced, number)), field("n_placed", number(placed)), m});
    }
    case GameId::char_recognition: {
      const auto& s = std::get<CharRecState>(state);
      const std::vector<int> rotations(s.rotations.begin(), s.rotations.end());
      const std::vector<int> slots(s.slot.begin(), s.slot.end());
      return object({field("r", array(rotations, number)), field("p", array(slots, nullable)),
                     field("n_placed", number(s.placed_count())), m});
    }
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d: {
      const auto& s = std::get<Rot3DState>(state);
      return object({field("rx", number(s.angles[0])), field("ry", number(s.angles[1])),
                     field("rz", number(s.angles[2])), field("tx", number(s.target[0])),
                     field("ty", number(s.target[1])), field("tz", number(s.target[2])),
                     field("dx", number(shortest_delta(s.angles[0], s.target[0]))),
                     field("dy", number(shortest_delta(s.angles[1], s.target[1]))),
                     field("dz", number(shortest_delta(s.angles[2], s.target[2]))),
                     field("inc", number(kRotationIncrement)), field("n_voxels", number(s.n_voxels())), m});
    }
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d: {
      const auto& s = std::get<Rot2DState>(state);
      return object({field("r", number(s.angle)), field("target", number(s.target_angle)),
                     field("delta", number(shortest_delta(s.angle, s.target_angle))),
                     field("inc", number(kRotationIncrement)), field("n_cells", number(s.n_cells())), m});
    }
  }
  return {};
}

}  // namespace puzzles
