#include <algorithm>
#include <set>

#include "puzzles/instance.hpp"

namespace puzzles {

namespace {

[[noreturn]] void exhausted(GameId game, Seed seed, int attempts = kSampleRetries) {
  throw PuzzleError(ErrorKind::sampling_exhausted,
                    std::string(game_name(game)) + " seed " + std::to_string(seed.value) +
                        ": no acceptable instance after " + std::to_string(attempts) +
                        " attempts");
}

bool replays_to_goal(GameId game, const EngineState& initial, const Solution& solution) {
  EngineState state = initial;
  for (const auto& a : solution.actions) {
    auto next = step(game, state, a);
    if (!next) return false;
    state = std::move(next).value();
  }
  return is_goal(game, state);
}

int random_angle(Rng& rng) { return kRotationIncrement * rng.between(0, 360 / kRotationIncrement - 1); }

// ---------------------------------------------------------------------------
// Sokoban: reverse walk with pulls from the solved configuration.

std::optional<SokobanState> sokoban_candidate(Rng& rng, const Difficulty& d) {
  const int n = d["size"];
  const int boxes = d["boxes"];
  const int min_moves = d["min_moves"];
  SokobanState s;
  s.width = s.height = n;
  std::vector<int> floor;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int i = s.index(r, c);
      const bool border = r == 0 || c == 0 || r == n - 1 || c == n - 1;
      if (border || rng.percent(d["wall_percent"])) {
        s.walls |= std::uint64_t{1} << i;
      } else {
        floor.push_back(i);
      }
    }
  }
  if (static_cast<int>(floor.size()) < boxes + 2) return std::nullopt;

  // Keep only the floor region connected to a random floor cell.
  std::uint64_t region = 0;
  std::vector<int> frontier{floor[rng.below(floor.size())]};
  region |= std::uint64_t{1} << frontier.front();
  while (!frontier.empty()) {
    const int cell = frontier.back();
    frontier.pop_back();
    for (int dir = 0; dir < 4; ++dir) {
      const int r = cell / n + kDirRow[dir];
      const int c = cell % n + kDirCol[dir];
      const int t = r * n + c;
      if (SokobanState::test(s.walls, t) || SokobanState::test(region, t)) continue;
      region |= std::uint64_t{1} << t;
      frontier.push_back(t);
    }
  }
  floor.clear();
  for (int i = 0; i < n * n; ++i) {
    if (SokobanState::test(region, i)) {
      floor.push_back(i);
    } else {
      s.walls |= std::uint64_t{1} << i;
    }
  }
  if (static_cast<int>(floor.size()) < boxes + 2) return std::nullopt;

  rng.shuffle(floor);
  for (int b = 0; b < boxes; ++b) s.goals |= std::uint64_t{1} << floor[static_cast<std::size_t>(b)];
  s.boxes = s.goals;
  s.player = floor[static_cast<std::size_t>(boxes)];

  const int walk = rng.between(4 * min_moves, 10 * min_moves);
  for (int k = 0; k < walk; ++k) {
    const int dir = static_cast<int>(rng.below(4));
    const int r = s.player / n;
    const int c = s.player % n;
    const int t = s.index(r + kDirRow[dir], c + kDirCol[dir]);
    if (SokobanState::test(s.walls | s.boxes, t)) continue;
    const int br = r - kDirRow[dir];
    const int bc = c - kDirCol[dir];
    const bool pull = s.in_bounds(br, bc) && SokobanState::test(s.boxes, s.index(br, bc)) && rng.percent(75);
    if (pull) {
      s.boxes &= ~(std::uint64_t{1} << s.index(br, bc));
      s.boxes |= std::uint64_t{1} << s.player;
    }
    s.player = t;
  }
  if (s.boxes == s.goals) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// Bloxorz: the path of a random roll sequence ending on the goal, plus
// distractor tiles.

std::optional<BloxorzState> bloxorz_candidate(Rng& rng, const Difficulty& d) {
  const int n = d["size"];
  const int min_moves = d["min_moves"];
  BloxorzState s;
  s.width = s.height = n;
  s.tiles.assign(static_cast<std::size_t>(n * n), Tile::absent);
  s.goal_row = rng.between(0, n - 1);
  s.goal_col = rng.between(0, n - 1);
  Block block{s.goal_row, s.goal_col, Orientation::standing};
  auto mark = [&](const Block& b) {
    for (const auto& c : b.cells()) s.tiles[static_cast<std::size_t>(c[0] * n + c[1])] = Tile::solid;
  };
  auto fits = [&](const Block& b) {
    for (const auto& c : b.cells()) {
      if (!s.in_bounds(c[0], c[1])) return false;
    }
    return true;
  };
  mark(block);
  const int walk = rng.between(min_moves, 3 * min_moves);
  for (int k = 0; k < walk || block.orientation != Orientation::standing; ++k) {
    if (k > walk + 8) return std::nullopt;
    std::vector<Block> options;
    for (Dir dir : kDirs) {
      const Block next = roll(block, dir);
      if (fits(next)) options.push_back(next);
    }
    block = rng.pick(options);
    mark(block);
  }
  for (auto& t : s.tiles) {
    if (t == Tile::absent && rng.percent(25)) t = Tile::solid;
  }
  for (int i = 0; i < n * n; ++i) {
    auto& t = s.tiles[static_cast<std::size_t>(i)];
    if (t == Tile::solid && i != s.goal_row * n + s.goal_col && rng.percent(d["fragile_percent"])) {
      t = Tile::fragile;
    }
  }
  s.block = block;
  if (bloxorz_is_goal(s)) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// Rush hour: random non-overlapping vehicles; BFS decides.

std::optional<RushHourState> rush_hour_candidate(Rng& rng, const Difficulty& d) {
  RushHourState s;
  s.vehicles.push_back(Vehicle{'A', true, 2, s.exit_row, rng.between(0, 2)});
  const int total = d["vehicles"];
  std::array<bool, kRushHourSize * kRushHourSize> used{};
  auto stamp = [&](const Vehicle& v, bool value) {
    for (int k = 0; k < v.length; ++k) {
      const int r = v.horizontal ? v.row : v.row + k;
      const int c = v.horizontal ? v.col + k : v.col;
      used[static_cast<std::size_t>(r * kRushHourSize + c)] = value;
    }
  };
  stamp(s.vehicles.front(), true);
  for (int i = 1; i < total; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      Vehicle v;
      v.letter = static_cast<char>('A' + i);
      v.horizontal = rng.coin();
      v.length = rng.percent(33) ? 3 : 2;
      const int span = kRushHourSize - v.length;
      v.row = v.horizontal ? rng.between(0, kRushHourSize - 1) : rng.between(0, span);
      v.col = v.horizontal ? rng.between(0, span) : rng.between(0, kRushHourSize - 1);
      if (v.horizontal && v.row == s.exit_row) continue;
      bool clear = true;
      for (int k = 0; k < v.length && clear; ++k) {
        const int r = v.horizontal ? v.row : v.row + k;
        const int c = v.horizontal ? v.col + k : v.col;
        clear = !used[static_cast<std::size_t>(r * kRushHourSize + c)];
      }
      if (!clear) continue;
      stamp(v, true);
      s.vehicles.push_back(v);
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  if (rushhour_is_goal(s)) return std::nullopt;
  return s;
}

template <class Candidate>
Instance sample_sliding(GameId game, Seed seed, const Difficulty& d, Candidate&& candidate) {
  Rng rng = Rng::for_instance(game, seed);
  const int min_moves = d["min_moves"];
  for (int attempt = 0; attempt < kSlidingRetries; ++attempt) {
    auto state = candidate(rng, d);
    if (!state) continue;
    const EngineState initial = *state;
    SearchResult result = solve_bfs(game, initial);
    if (result.status != SearchStatus::solved) continue;
    if (static_cast<int>(result.solution.actions.size()) < min_moves) continue;
    return Instance{game, seed, d, initial, std::move(result.solution), true};
  }
  exhausted(game, seed, kSlidingRetries);
}

// ---------------------------------------------------------------------------
// Tangram

struct Silhouette {
  std::set<Cell2> cells;
};

Silhouette build_silhouette(Rng& rng, int pieces) {
  Silhouette out;
  for (int i = 0; i < pieces; ++i) {
    const Polyomino& fp = tangram_footprint(kTangramSet[static_cast<std::size_t>(i)], 90 * rng.between(0, 3));
    if (out.cells.empty()) {
      out.cells.insert(fp.begin(), fp.end());
      continue;
    }
    int lo_r = 1 << 20, lo_c = 1 << 20, hi_r = -(1 << 20), hi_c = -(1 << 20);
    for (const auto& c : out.cells) {
      lo_r = std::min(lo_r, c.row);
      lo_c = std::min(lo_c, c.col);
      hi_r = std::max(hi_r, c.row);
      hi_c = std::max(hi_c, c.col);
    }
    std::vector<Cell2> anchors;
    for (int r = lo_r - 4; r <= hi_r + 1; ++r) {
      for (int c = lo_c - 4; c <= hi_c + 1; ++c) {
        bool overlap = false;
        bool touches = false;
        for (const auto& cell : fp) {
          const Cell2 p{r + cell.row, c + cell.col};
          if (out.cells.count(p) != 0) {
            overlap = true;
            break;
          }
          for (int d = 0; d < 4 && !touches; ++d) {
            touches = out.cells.count(Cell2{p.row + kDirRow[d], p.col + kDirCol[d]}) != 0;
          }
        }
        if (!overlap && touches) anchors.push_back(Cell2{r, c});
      }
    }
    const Cell2 a = rng.pick(anchors);
    for (const auto& cell : fp) out.cells.insert(Cell2{a.row + cell.row, a.col + cell.col});
  }
  return out;
}

TangramState tangram_from(Rng& rng, const Silhouette& sil, int pieces) {
  int lo_r = 1 << 20, lo_c = 1 << 20, hi_r = -(1 << 20), hi_c = -(1 << 20);
  for (const auto& c : sil.cells) {
    lo_r = std::min(lo_r, c.row);
    lo_c = std::min(lo_c, c.col);
    hi_r = std::max(hi_r, c.row);
    hi_c = std::max(hi_c, c.col);
  }
  TangramState s;
  s.height = hi_r - lo_r + 3;
  s.width = hi_c - lo_c + 3;
  s.target.assign(static_cast<std::size_t>(s.width * s.height), 0);
  for (const auto& c : sil.cells) {
    s.target[static_cast<std::size_t>((c.row - lo_r + 1) * s.width + (c.col - lo_c + 1))] = 1;
  }
  for (int i = 0; i < pieces; ++i) {
    s.pieces.push_back(TangramPiece{i, kTangramSet[static_cast<std::size_t>(i)], 90 * rng.between(0, 3),
                                    std::nullopt});
  }
  return s;
}

bool connected(const std::set<Cell2>& cells) {
  Polyomino p(cells.begin(), cells.end());
  return is_connected(p);
}

// Moves one or two silhouette cells to other positions on its boundary.
std::optional<Silhouette> perturb(Rng& rng, const Silhouette& positive) {
  Silhouette out = positive;
  const int moves = rng.between(1, 2);
  for (int m = 0; m < moves; ++m) {
    std::vector<Cell2> cells(out.cells.begin(), out.cells.end());
    rng.shuffle(cells);
    bool moved = false;
    for (const Cell2& removed : cells) {
      std::set<Cell2> rest = out.cells;
      rest.erase(removed);
      if (!connected(rest)) continue;
      std::set<Cell2> boundary;
      for (const auto& c : rest) {
        for (int d = 0; d < 4; ++d) {
          const Cell2 p{c.row + kDirRow[d], c.col + kDirCol[d]};
          if (rest.count(p) == 0 && p != removed) boundary.insert(p);
        }
      }
      if (boundary.empty()) continue;
      const std::vector<Cell2> options(boundary.begin(), boundary.end());
      rest.insert(rng.pick(options));
      out.cells = std::move(rest);
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;
  }
  return out;
}

Instance sample_tangram(GameId game, Seed seed, const Difficulty& d, bool want_yes) {
  Rng rng = Rng::for_instance(game, seed);
  const int pieces = d["pieces"];
  if (game == GameId::tangram_certificate) want_yes = rng.coin();
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Silhouette sil = build_silhouette(rng, pieces);
    if (!want_yes) {
      auto negative = perturb(rng, sil);
      if (!negative) continue;
      sil = std::move(*negative);
    }
    TangramState state = tangram_from(rng, sil, pieces);
    SearchResult result = solve_exact_cover(game, state);
    if (result.status == SearchStatus::budget_exceeded) continue;
    const bool solvable = result.status == SearchStatus::solved;
    if (solvable != want_yes) continue;
    return Instance{game, seed, d, EngineState{std::move(state)}, std::move(result.solution), solvable};
  }
  exhausted(game, seed);
}

// ---------------------------------------------------------------------------

Instance sample_jigsaw(Seed seed, const Difficulty& d) {
  Rng rng = Rng::for_instance(GameId::jigsaw, seed);
  JigsawState s;
  s.k = rng.between(d["min_k"], d["max_k"]);
  const int n = s.piece_count();
  s.cells.assign(static_cast<std::size_t>(n), -1);
  s.true_cell.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.true_cell[static_cast<std::size_t>(i)] = i;
  rng.shuffle(s.true_cell);
  for (int i = 0; i < n; ++i) s.rotations.push_back(90 * rng.between(0, 3));
  s.pattern = rng.next();
  EngineState initial{s};
  Solution sol = solve_closed_form(GameId::jigsaw, initial);
  return Instance{GameId::jigsaw, seed, d, std::move(initial), std::move(sol), true};
}

Instance sample_charrec(Seed seed, const Difficulty& d) {
  Rng rng = Rng::for_instance(GameId::char_recognition, seed);
  CharRecState s;
  s.glyph = rng.pick(charrec_alphabet());
  std::vector<int> slots{0, 1, 2, 3};
  rng.shuffle(slots);
  for (int k = 0; k < kFragments; ++k) {
    s.true_slot[static_cast<std::size_t>(k)] = slots[static_cast<std::size_t>(k)];
    s.rotations[static_cast<std::size_t>(k)] = 90 * rng.between(1, 3);
  }
  EngineState initial{s};
  Solution sol = solve_closed_form(GameId::char_recognition, initial);
  return Instance{GameId::char_recognition, seed, d, std::move(initial), std::move(sol), true};
}

Instance sample_anagram(Seed seed, const Difficulty& d, const Resources& res) {
  Rng rng = Rng::for_instance(GameId::anagram, seed);
  if (!res.dictionary) throw PuzzleError(ErrorKind::invalid_argument, "anagram needs a dictionary");
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    const int length = rng.between(d["min_length"], d["max_length"]);
    const auto& words = res.dictionary->words_of_length(static_cast<std::size_t>(length));
    if (words.empty()) continue;
    const std::string& word = rng.pick(words);
    std::string letters = word;
    std::vector<char> chars(letters.begin(), letters.end());
    rng.shuffle(chars);
    letters.assign(chars.begin(), chars.end());
    if (min_swaps(letters, word).value() < d["min_swaps"]) continue;
    EngineState initial{AnagramState{letters, word, std::nullopt, res.dictionary}};
    Solution sol = solve_closed_form(GameId::anagram, initial);
    return Instance{GameId::anagram, seed, d, std::move(initial), std::move(sol), true};
  }
  exhausted(GameId::anagram, seed);
}

Polyomino asymmetric_polyomino(Rng& rng, int cells) {
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Polyomino p = grow_polyomino(rng, cells);
    if (rotational_symmetry_2d(p) == 1) return p;
  }
  return {};
}

Polycube asymmetric_polycube(Rng& rng, int voxels) {
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Polycube p = grow_polycube(rng, voxels);
    if (rotational_symmetry_3d(p) == 1) return p;
  }
  return {};
}

Instance sample_rot2d(GameId game, Seed seed, const Difficulty& d) {
  Rng rng = Rng::for_instance(game, seed);
  const bool certificate = game == GameId::mental_rotation_2d;
  const bool want_yes = certificate ? rng.coin() : true;
  Rot2DState s;
  s.shape = asymmetric_polyomino(rng, d["cells"]);
  if (s.shape.empty()) exhausted(game, seed);
  s.angle = random_angle(rng);
  do {
    s.target_angle = random_angle(rng);
  } while (s.target_angle == s.angle);
  s.reference = s.shape;
  if (!want_yes) {
    int attempt = 0;
    do {
      if (++attempt > kSampleRetries) exhausted(game, seed);
      s.reference = grow_polyomino(rng, d["cells"]);
    } while (same_shape(s.shape, s.reference));
  }
  EngineState initial{s};
  Solution sol = solve_closed_form(game, initial);
  return Instance{game, seed, d, std::move(initial), std::move(sol), want_yes};
}

Instance sample_rot3d(GameId game, Seed seed, const Difficulty& d) {
  Rng rng = Rng::for_instance(game, seed);
  const bool certificate = game == GameId::mental_rotation_3d;
  const bool want_yes = certificate ? rng.coin() : true;
  const int voxels = rng.between(d["min_voxels"], d["max_voxels"]);
  Rot3DState s;
  s.shape = asymmetric_polycube(rng, voxels);
  if (s.shape.empty()) exhausted(game, seed);
  for (auto& a : s.angles) a = random_angle(rng);
  do {
    for (auto& a : s.target) a = random_angle(rng);
  } while (s.target == s.angles);
  s.reference = s.shape;
  if (!want_yes) {
    const Polycube mirrored = normalize(mirror(s.shape));
    if (!same_shape(mirrored, s.shape) && rng.coin()) {
      s.reference = mirrored;
    } else {
      int attempt = 0;
      do {
        if (++attempt > kSampleRetries) exhausted(game, seed);
        s.reference = grow_polycube(rng, voxels);
      } while (same_shape(s.shape, s.reference));
    }
  }
  EngineState initial{s};
  Solution sol = solve_closed_form(game, initial);
  return Instance{game, seed, d, std::move(initial), std::move(sol), want_yes};
}

void verify(const Instance& inst) {
  const bool ok = inst.solvable ? replays_to_goal(inst.game, inst.initial, inst.ground_truth)
                                : inst.ground_truth.answer == std::optional<std::string>("no");
  if (!ok) {
    throw PuzzleError(ErrorKind::replay_mismatch,
                      std::string(game_name(inst.game)) + " seed " + std::to_string(inst.seed.value) +
                          ": ground truth does not reach the goal");
  }
}

}  // namespace

Instance sample_certificate(GameId game, Seed seed, const Difficulty& difficulty, const Resources&) {
  if (difficulty.game() != game) {
    throw PuzzleError(ErrorKind::invalid_argument, "difficulty belongs to another game");
  }
  Instance inst = [&] {
    switch (game) {
      case GameId::tangram_certificate: return sample_tangram(game, seed, difficulty, true);
      case GameId::mental_rotation_2d: return sample_rot2d(game, seed, difficulty);
      case GameId::mental_rotation_3d: return sample_rot3d(game, seed, difficulty);
      default:
        throw PuzzleError(ErrorKind::invalid_argument,
                          std::string(game_name(game)) + " is not a certificate game");
    }
  }();
  verify(inst);
  return inst;
}

Instance sample(GameId game, Seed seed, const Difficulty& difficulty, const Resources& resources) {
  if (is_certificate(game)) return sample_certificate(game, seed, difficulty, resources);
  if (difficulty.game() != game) {
    throw PuzzleError(ErrorKind::invalid_argument, "difficulty belongs to another game");
  }
  Instance inst = [&] {
    switch (game) {
      case GameId::sokoban: return sample_sliding(game, seed, difficulty, sokoban_candidate);
      case GameId::bloxorz: return sample_sliding(game, seed, difficulty, bloxorz_candidate);
      case GameId::rush_hour: return sample_sliding(game, seed, difficulty, rush_hour_candidate);
      case GameId::tangram: return sample_tangram(game, seed, difficulty, true);
      case GameId::jigsaw: return sample_jigsaw(seed, difficulty);
      case GameId::char_recognition: return sample_charrec(seed, difficulty);
      case GameId::anagram: return sample_anagram(seed, difficulty, resources);
      case GameId::shape_match_2d: return sample_rot2d(game, seed, difficulty);
      case GameId::shape_match_3d: return sample_rot3d(game, seed, difficulty);
      default: break;
    }
    throw PuzzleError(ErrorKind::invalid_argument, "unhandled game");
  }();
  verify(inst);
  return inst;
}

std::string prompt(GameId game, const EngineState& state) {
  switch (game) {
    case GameId::tangram:
      return "Complete the tangram. Fill the grey silhouette using the colored pieces.";
    case GameId::tangram_certificate:
      return "Determine if the pieces can fill the silhouette. Say 'yes' if they can, 'no' if they can't.";
    case GameId::shape_match_3d: return "Rotate the left shape to match the right shape.";
    case GameId::mental_rotation_3d:
      return "Determine if the left and right shapes are the same. Rotate to check, then say 'yes' if "
             "they match or 'no' if they don't.";
    case GameId::shape_match_2d: return "Rotate the left 2D shape to match the right shape.";
    case GameId::mental_rotation_2d:
      return "Determine if the left and right 2D shapes are the same (possibly rotated). Rotate to "
             "check, then say 'yes' if they match or 'no' if they don't.";
    case GameId::jigsaw:
      return "Reconstruct the original image by rotating each piece to the correct orientation and "
             "placing it at its correct grid position.";
    case GameId::anagram:
      return "The letters of a word have been scrambled. Swap letters to unscramble the word, then "
             "submit with identify(word).";
    case GameId::char_recognition:
      return "A character has been broken into pieces that are scattered and rotated. Rotate each "
             "numbered piece to the correct orientation and place it into the matching lettered slot "
             "in the assembly area. Once all pieces are correctly assembled, identify the character.";
    case GameId::sokoban:
      return "Solve this Sokoban puzzle. Push the brown boxes onto the red diamonds.";
    case GameId::bloxorz: {
      std::string text = "Solve this Bloxorz puzzle. Roll the block so it stands on the red goal.";
      const auto* s = std::get_if<BloxorzState>(&state);
      if (s != nullptr && s->has_fragile()) {
        text += " Striped tiles are fragile and will break after the block leaves them.";
      }
      return text;
    }
    case GameId::rush_hour:
      return "Slide vehicles to free the red car (A) and move it to the right edge exit.";
  }
  return {};
}

}  // namespace puzzles
