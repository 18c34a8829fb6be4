#include "puzzles/solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace puzzles {

// ---------------------------------------------------------------------------
// Exact cover

ExactCoverMatrix ExactCoverMatrix::for_tangram(const TangramState& state) {
  ExactCoverMatrix m;
  const auto owner = state.owners();
  std::vector<int> column_of(owner.size(), -1);
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (state.target[i] != 0 && owner[i] < 0) column_of[i] = m.cell_columns++;
  }
  for (const auto& piece : state.pieces) {
    if (piece.placed_at) continue;
    const int piece_column = m.piece_columns++;
    std::set<Polyomino> seen;
    for (int q = 0; q < 4; ++q) {
      const Polyomino& fp = tangram_footprint(piece.kind, q * 90);
      if (!seen.insert(fp).second) continue;
      for (int r = 0; r < state.height; ++r) {
        for (int c = 0; c < state.width; ++c) {
          Row row{piece.id, q * 90, Cell2{r, c}, {}};
          bool fits = true;
          for (const auto& cell : fp) {
            const int rr = r + cell.row;
            const int cc = c + cell.col;
            if (rr >= state.height || cc >= state.width) {
              fits = false;
              break;
            }
            const int col = column_of[static_cast<std::size_t>(rr * state.width + cc)];
            if (col < 0) {
              fits = false;
              break;
            }
            row.columns.push_back(col);
          }
          if (!fits) continue;
          std::sort(row.columns.begin(), row.columns.end());
          row.columns.push_back(-1 - piece_column);
          m.rows.push_back(std::move(row));
        }
      }
    }
  }
  for (auto& row : m.rows) {
    row.columns.back() = m.cell_columns + (-1 - row.columns.back());
  }
  return m;
}

namespace {

class Links {
 public:
  explicit Links(const ExactCoverMatrix& m) {
    const int n = m.column_count();
    const std::size_t total = static_cast<std::size_t>(n + 1);
    left_.resize(total);
    right_.resize(total);
    up_.resize(total);
    down_.resize(total);
    column_.resize(total);
    row_.assign(total, -1);
    size_.assign(total, 0);
    for (int i = 0; i <= n; ++i) {
      left_[idx(i)] = i == 0 ? n : i - 1;
      right_[idx(i)] = i == n ? 0 : i + 1;
      up_[idx(i)] = down_[idx(i)] = column_[idx(i)] = i;
    }
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      int first = -1;
      for (int col : m.rows[r].columns) {
        const int c = col + 1;
        const int node = static_cast<int>(left_.size());
        column_.push_back(c);
        row_.push_back(static_cast<int>(r));
        size_.push_back(0);
        up_.push_back(up_[idx(c)]);
        down_.push_back(c);
        down_[idx(up_[idx(c)])] = node;
        up_[idx(c)] = node;
        ++size_[idx(c)];
        if (first < 0) {
          first = node;
          left_.push_back(node);
          right_.push_back(node);
        } else {
          left_.push_back(left_[idx(first)]);
          right_.push_back(first);
          right_[idx(left_[idx(first)])] = node;
          left_[idx(first)] = node;
        }
      }
    }
  }

  ExactCoverResult run(std::uint64_t budget) {
    ExactCoverResult out;
    std::vector<int> chosen;
    const bool found = search(chosen, budget, out);
    if (found) {
      out.status = SearchStatus::solved;
      out.rows = chosen;
    } else if (out.status != SearchStatus::budget_exceeded) {
      out.status = SearchStatus::unsolvable;
    }
    return out;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  void cover(int c) {
    right_[idx(left_[idx(c)])] = right_[idx(c)];
    left_[idx(right_[idx(c)])] = left_[idx(c)];
    for (int i = down_[idx(c)]; i != c; i = down_[idx(i)]) {
      for (int j = right_[idx(i)]; j != i; j = right_[idx(j)]) {
        up_[idx(down_[idx(j)])] = up_[idx(j)];
        down_[idx(up_[idx(j)])] = down_[idx(j)];
        --size_[idx(column_[idx(j)])];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[idx(c)]; i != c; i = up_[idx(i)]) {
      for (int j = left_[idx(i)]; j != i; j = left_[idx(j)]) {
        ++size_[idx(column_[idx(j)])];
        up_[idx(down_[idx(j)])] = j;
        down_[idx(up_[idx(j)])] = j;
      }
    }
    right_[idx(left_[idx(c)])] = c;
    left_[idx(right_[idx(c)])] = c;
  }

  bool search(std::vector<int>& chosen, std::uint64_t budget, ExactCoverResult& out) {
    if (right_[0] == 0) return true;
    int best = right_[0];
    for (int c = right_[0]; c != 0; c = right_[idx(c)]) {
      if (size_[idx(c)] < size_[idx(best)]) best = c;
    }
    if (size_[idx(best)] == 0) return false;
    cover(best);
    for (int r = down_[idx(best)]; r != best; r = down_[idx(r)]) {
      if (out.expansions >= budget) {
        out.status = SearchStatus::budget_exceeded;
        break;
      }
      ++out.expansions;
      chosen.push_back(row_[idx(r)]);
      for (int j = right_[idx(r)]; j != r; j = right_[idx(j)]) cover(column_[idx(j)]);
      const bool found = search(chosen, budget, out);
      for (int j = left_[idx(r)]; j != r; j = left_[idx(j)]) uncover(column_[idx(j)]);
      if (found) {
        uncover(best);
        return true;
      }
      chosen.pop_back();
      if (out.status == SearchStatus::budget_exceeded) break;
    }
    uncover(best);
    return false;
  }

  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
};

}  // namespace

ExactCoverResult dancing_links(const ExactCoverMatrix& matrix, std::uint64_t budget) {
  Links links(matrix);
  ExactCoverResult out = links.run(budget);
  std::sort(out.rows.begin(), out.rows.end(), [&](int a, int b) {
    return matrix.rows[static_cast<std::size_t>(a)].piece < matrix.rows[static_cast<std::size_t>(b)].piece;
  });
  return out;
}

SearchResult solve_exact_cover(GameId game, const TangramState& state, std::uint64_t budget) {
  const ExactCoverMatrix matrix = ExactCoverMatrix::for_tangram(state);
  const ExactCoverResult cover = dancing_links(matrix, budget);
  SearchResult out;
  out.status = cover.status;
  out.solution.expansions = cover.expansions;
  if (cover.status == SearchStatus::solved) {
    for (int r : cover.rows) {
      const auto& row = matrix.rows[static_cast<std::size_t>(r)];
      const int current = state.pieces[static_cast<std::size_t>(row.piece)].rotation;
      const int delta = wrap_degrees(row.rotation - current);
      if (delta != 0) out.solution.actions.push_back(PieceRotate{row.piece, delta});
      out.solution.actions.push_back(PiecePlace{row.piece, row.anchor.row, row.anchor.col});
    }
  }
  if (game == GameId::tangram_certificate && cover.status != SearchStatus::budget_exceeded) {
    out.solution.answer = cover.status == SearchStatus::solved ? "yes" : "no";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

void spin_to(int from, int to, std::vector<Action>& out) {
  const int d = shortest_delta(from, to);
  const int step = d < 0 ? -kRotationIncrement : kRotationIncrement;
  for (int i = 0; i < std::abs(d) / kRotationIncrement; ++i) out.push_back(Spin{step});
}

void spin_to(Axis axis, int from, int to, std::vector<Action>& out) {
  const int d = shortest_delta(from, to);
  const int step = d < 0 ? -kRotationIncrement : kRotationIncrement;
  for (int i = 0; i < std::abs(d) / kRotationIncrement; ++i) out.push_back(AxisSpin{axis, step});
}

int path_length(const Angles3& from, const Angles3& to) {
  int total = 0;
  for (std::size_t i = 0; i < 3; ++i) total += std::abs(shortest_delta(from[i], to[i]));
  return total / kRotationIncrement;
}

void spin_to(const Angles3& from, const Angles3& to, std::vector<Action>& out) {
  spin_to(Axis::x, from[0], to[0], out);
  spin_to(Axis::y, from[1], to[1], out);
  spin_to(Axis::z, from[2], to[2], out);
}

Solution mental_rotation_2d(const Rot2DState& s) {
  Solution sol;
  sol.answer = "no";
  if (!same_shape(s.shape, s.reference)) return sol;
  std::optional<int> best;
  for (int q = 0; q < 4; ++q) {
    const int candidate = wrap_degrees(s.target_angle + 90 * q);
    if (!poses_match(s.shape, candidate, s.reference, s.target_angle)) continue;
    if (!best || std::abs(shortest_delta(s.angle, candidate)) < std::abs(shortest_delta(s.angle, *best))) {
      best = candidate;
    }
  }
  if (!best) return sol;
  spin_to(s.angle, *best, sol.actions);
  sol.answer = "yes";
  return sol;
}

Solution mental_rotation_3d(const Rot3DState& s) {
  Solution sol;
  sol.answer = "no";
  if (!same_shape(s.shape, s.reference)) return sol;
  std::optional<Angles3> best;
  if (poses_match(s.shape, s.target, s.reference, s.target)) {
    best = s.target;
  } else {
    for (int x = 0; x < 360; x += kRotationIncrement) {
      for (int y = 0; y < 360; y += kRotationIncrement) {
        for (int z = 0; z < 360; z += kRotationIncrement) {
          const Angles3 candidate{x, y, z};
          if (best && path_length(s.angles, candidate) >= path_length(s.angles, *best)) continue;
          if (poses_match(s.shape, candidate, s.reference, s.target)) best = candidate;
        }
      }
    }
  }
  if (!best) return sol;
  spin_to(s.angles, *best, sol.actions);
  sol.answer = "yes";
  return sol;
}

Solution jigsaw_expert(const JigsawState& s) {
  Solution sol;
  for (int id = 0; id < s.piece_count(); ++id) {
    switch (s.rotations[static_cast<std::size_t>(id)]) {
      case 90: sol.actions.push_back(PieceTurn{id, Turn::cw}); break;
      case 180:
        sol.actions.push_back(PieceTurn{id, Turn::cw});
        sol.actions.push_back(PieceTurn{id, Turn::cw});
        break;
      case 270: sol.actions.push_back(PieceTurn{id, Turn::ccw}); break;
      default: break;
    }
  }
  for (int id = 0; id < s.piece_count(); ++id) {
    const int cell = s.true_cell[static_cast<std::size_t>(id)];
    sol.actions.push_back(PiecePlace{id, cell / s.k, cell % s.k});
  }
  return sol;
}

Solution charrec_expert(const CharRecState& s) {
  Solution sol;
  for (int k = 0; k < kFragments; ++k) {
    const int r = s.rotations[static_cast<std::size_t>(k)];
    if (r != 0) sol.actions.push_back(FragmentRotate{k, 360 - r});
  }
  for (int k = 0; k < kFragments; ++k) {
    sol.actions.push_back(FragmentPlace{k, slot_label(s.true_slot[static_cast<std::size_t>(k)])});
  }
  sol.actions.push_back(Identify{std::string(1, s.glyph)});
  sol.answer = std::string(1, s.glyph);
  return sol;
}

Solution anagram_expert(const AnagramState& s) {
  Solution sol;
  for (const Swap& sw : swap_plan(s.letters, s.target)) sol.actions.push_back(sw);
  sol.actions.push_back(Identify{s.target});
  sol.answer = s.target;
  return sol;
}

}  // namespace

Solution solve_closed_form(GameId game, const EngineState& state) {
  Solution sol;
  switch (game) {
    case GameId::shape_match_2d: {
      const auto& s = std::get<Rot2DState>(state);
      spin_to(s.angle, s.target_angle, sol.actions);
      sol.optimal = true;
      return sol;
    }
    case GameId::shape_match_3d: {
      const auto& s = std::get<Rot3DState>(state);
      spin_to(s.angles, s.target, sol.actions);
      sol.optimal = true;
      return sol;
    }
    case GameId::mental_rotation_2d: return mental_rotation_2d(std::get<Rot2DState>(state));
    case GameId::mental_rotation_3d: return mental_rotation_3d(std::get<Rot3DState>(state));
    case GameId::jigsaw: return jigsaw_expert(std::get<JigsawState>(state));
    case GameId::char_recognition: return charrec_expert(std::get<CharRecState>(state));
    case GameId::anagram: {
      Solution out = anagram_expert(std::get<AnagramState>(state));
      out.optimal = true;
      return out;
    }
    default:
      throw PuzzleError(ErrorKind::invalid_argument,
                        "no closed-form expert for " + std::string(game_name(game)));
  }
}

Solution solve(GameId game, const EngineState& state, std::uint64_t budget) {
  if (!state_matches(game, state)) {
    throw PuzzleError(ErrorKind::invalid_argument,
                      "state does not belong to game " + std::string(game_name(game)));
  }
  SearchResult result;
  switch (game) {
    case GameId::sokoban:
    case GameId::bloxorz:
    case GameId::rush_hour: result = solve_bfs(game, state, budget); break;
    case GameId::tangram:
    case GameId::tangram_certificate:
      result = solve_exact_cover(game, std::get<TangramState>(state), budget);
      if (game == GameId::tangram_certificate && result.status == SearchStatus::unsolvable) {
        return result.solution;
      }
      break;
    default: return solve_closed_form(game, state);
  }
  if (result.status == SearchStatus::budget_exceeded) {
    throw PuzzleError(ErrorKind::sampling_exhausted,
                      "search budget exhausted for " + std::string(game_name(game)));
  }
  if (result.status == SearchStatus::unsolvable) {
    throw PuzzleError(ErrorKind::invalid_argument,
                      "instance has no solution for " + std::string(game_name(game)));
  }
  return result.solution;
}

}  // namespace puzzles
