#include <algorithm>
#include <bit>

#include "puzzles/solvers.hpp"

namespace puzzles {

namespace {

// Open-addressing index from compact keys to node ids.
template <class Key>
class NodeIndex {
 public:
  NodeIndex() : slots_(1024, -1), mask_(1023) {}

  /// Returns true if the key was new (and records `id` for it).
  template <class Nodes>
  bool insert(const Key& key, std::int32_t id, const Nodes& nodes) {
    if (static_cast<std::size_t>(count_ + 1) * 2 > slots_.size()) grow(nodes);
    std::size_t i = key.hash() & mask_;
    while (slots_[i] >= 0) {
      if (nodes[static_cast<std::size_t>(slots_[i])].key == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = id;
    ++count_;
    return true;
  }

 private:
  template <class Nodes>
  void grow(const Nodes& nodes) {
    std::vector<std::int32_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, -1);
    mask_ = slots_.size() - 1;
    for (std::int32_t id : old) {
      if (id < 0) continue;
      std::size_t i = nodes[static_cast<std::size_t>(id)].key.hash() & mask_;
      while (slots_[i] >= 0) i = (i + 1) & mask_;
      slots_[i] = id;
    }
  }

  std::vector<std::int32_t> slots_;
  std::size_t mask_;
  std::int64_t count_ = 0;
};

struct BfsRun {
  SearchStatus status = SearchStatus::unsolvable;
  std::vector<std::uint16_t> path;
  std::uint64_t expansions = 0;
};

template <class Key, class Expand, class Goal>
BfsRun breadth_first(const Key& start, Expand&& expand, Goal&& goal, std::uint64_t budget) {
  struct Node {
    Key key;
    std::int32_t parent;
    std::uint16_t action;
  };
  BfsRun run;
  if (goal(start)) {
    run.status = SearchStatus::solved;
    return run;
  }
  std::vector<Node> nodes;
  nodes.reserve(4096);
  NodeIndex<Key> index;
  nodes.push_back({start, -1, 0});
  index.insert(start, 0, nodes);

  std::int32_t found = -1;
  for (std::size_t head = 0; head < nodes.size() && found < 0; ++head) {
    if (run.expansions >= budget) {
      run.status = SearchStatus::budget_exceeded;
      return run;
    }
    ++run.expansions;
    const Key current = nodes[head].key;
    expand(current, [&](const Key& child, std::uint16_t action) {
      if (found >= 0) return;
      const auto id = static_cast<std::int32_t>(nodes.size());
      if (!index.insert(child, id, nodes)) return;
      nodes.push_back({child, static_cast<std::int32_t>(head), action});
      if (goal(child)) found = id;
    });
  }
  if (found < 0) return run;
  run.status = SearchStatus::solved;
  for (std::int32_t id = found; nodes[static_cast<std::size_t>(id)].parent >= 0;
       id = nodes[static_cast<std::size_t>(id)].parent) {
    run.path.push_back(nodes[static_cast<std::size_t>(id)].action);
  }
  std::reverse(run.path.begin(), run.path.end());
  return run;
}

// Neighbour table over a row-major board: -1 when off the board.
struct Neighbours {
  std::vector<std::array<int, 4>> next;

  Neighbours(int width, int height) : next(static_cast<std::size_t>(width * height)) {
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        for (int d = 0; d < 4; ++d) {
          const int nr = r + kDirRow[d];
          const int nc = c + kDirCol[d];
          next[static_cast<std::size_t>(r * width + c)][static_cast<std::size_t>(d)] =
              (nr < 0 || nc < 0 || nr >= height || nc >= width) ? -1 : nr * width + nc;
        }
      }
    }
  }
  int operator()(int cell, int d) const {
    return next[static_cast<std::size_t>(cell)][static_cast<std::size_t>(d)];
  }
};

// ---------------------------------------------------------------------------

struct SokobanKey {
  std::uint64_t boxes;
  std::uint32_t player;
  bool operator==(const SokobanKey&) const = default;
  std::uint64_t hash() const { return mix64(boxes * 0x9e3779b97f4a7c15ULL ^ player); }
};

SearchResult solve_sokoban(const SokobanState& s, std::uint64_t budget) {
  const Neighbours nb(s.width, s.height);
  const std::uint64_t walls = s.walls;
  const std::uint64_t goals = s.goals;
  auto expand = [&](const SokobanKey& k, auto&& emit) {
    for (int d = 0; d < 4; ++d) {
      const int t = nb(static_cast<int>(k.player), d);
      if (t < 0 || ((walls >> t) & 1U)) continue;
      std::uint64_t boxes = k.boxes;
      if ((boxes >> t) & 1U) {
        const int beyond = nb(t, d);
        if (beyond < 0 || (((walls | boxes) >> beyond) & 1U)) continue;
        boxes = (boxes & ~(std::uint64_t{1} << t)) | (std::uint64_t{1} << beyond);
      }
      emit(SokobanKey{boxes, static_cast<std::uint32_t>(t)}, static_cast<std::uint16_t>(d));
    }
  };
  auto goal = [&](const SokobanKey& k) { return k.boxes == goals; };
  const BfsRun run =
      breadth_first(SokobanKey{s.boxes, static_cast<std::uint32_t>(s.player)}, expand, goal, budget);
  SearchResult out;
  out.status = run.status;
  out.solution.expansions = run.expansions;
  out.solution.optimal = run.status == SearchStatus::solved;
  for (auto a : run.path) out.solution.actions.push_back(Move{static_cast<Dir>(a)});
  return out;
}

// ---------------------------------------------------------------------------

struct BloxorzKey {
  std::uint64_t broken;
  std::uint32_t pose;  // orientation * 64 + anchor cell
  bool operator==(const BloxorzKey&) const = default;
  std::uint64_t hash() const { return mix64(broken ^ (std::uint64_t{pose} << 56) ^ pose); }
};

SearchResult solve_bloxorz(const BloxorzState& s, std::uint64_t budget) {
  std::uint64_t present = 0;
  std::uint64_t fragile = 0;
  std::uint64_t broken = 0;
  for (int i = 0; i < s.width * s.height; ++i) {
    const Tile t = s.tiles[static_cast<std::size_t>(i)];
    if (t == Tile::solid || t == Tile::fragile) present |= std::uint64_t{1} << i;
    if (t == Tile::fragile) fragile |= std::uint64_t{1} << i;
    if (t == Tile::broken) broken |= std::uint64_t{1} << i;
  }
  const int w = s.width;
  const int h = s.height;
  auto cells_mask = [&](const Block& b, std::uint64_t& mask) {
    for (const auto& c : b.cells()) {
      if (c[0] < 0 || c[1] < 0 || c[0] >= h || c[1] >= w) return false;
      mask |= std::uint64_t{1} << (c[0] * w + c[1]);
    }
    return true;
  };
  auto decode = [&](std::uint32_t pose) {
    const int cell = static_cast<int>(pose % 64);
    return Block{cell / w, cell % w, static_cast<Orientation>(pose / 64)};
  };
  auto encode = [&](const Block& b) {
    return static_cast<std::uint32_t>(static_cast<int>(b.orientation) * 64 + b.row * w + b.col);
  };
  auto expand = [&](const BloxorzKey& k, auto&& emit) {
    const Block current = decode(k.pose);
    std::uint64_t before = 0;
    cells_mask(current, before);
    for (int d = 0; d < 4; ++d) {
      const Block next = roll(current, static_cast<Dir>(d));
      std::uint64_t after = 0;
      if (!cells_mask(next, after)) continue;
      if ((after & present) != after || (after & k.broken) != 0) continue;
      const std::uint64_t left = before & ~after & fragile;
      emit(BloxorzKey{k.broken | left, encode(next)}, static_cast<std::uint16_t>(d));
    }
  };
  const Block goal_block{s.goal_row, s.goal_col, Orientation::standing};
  const std::uint32_t goal_pose = encode(goal_block);
  auto goal = [&](const BloxorzKey& k) { return k.pose == goal_pose; };
  const BfsRun run = breadth_first(BloxorzKey{broken, encode(s.block)}, expand, goal, budget);
  SearchResult out;
  out.status = run.status;
  out.solution.expansions = run.expansions;
  out.solution.optimal = run.status == SearchStatus::solved;
  for (auto a : run.path) out.solution.actions.push_back(Move{static_cast<Dir>(a)});
  return out;
}

// ---------------------------------------------------------------------------

struct RushKey {
  std::uint64_t positions;  // 3 bits of moving coordinate per vehicle
  bool operator==(const RushKey&) const = default;
  std::uint64_t hash() const { return mix64(positions); }
};

SearchResult solve_rush_hour(const RushHourState& s, std::uint64_t budget) {
  const auto& vs = s.vehicles;
  const int n = static_cast<int>(vs.size());
  RushKey start{0};
  for (int i = 0; i < n; ++i) {
    const auto& v = vs[static_cast<std::size_t>(i)];
    const std::uint64_t pos = static_cast<std::uint64_t>(v.horizontal ? v.col : v.row);
    start.positions |= pos << (3 * i);
  }
  auto pos_of = [](const RushKey& k, int i) { return static_cast<int>((k.positions >> (3 * i)) & 7U); };
  auto cell_bit = [](int r, int c) { return std::uint64_t{1} << (r * kRushHourSize + c); };
  auto footprint = [&](int i, int pos) {
    const auto& v = vs[static_cast<std::size_t>(i)];
    std::uint64_t m = 0;
    for (int k = 0; k < v.length; ++k) m |= v.horizontal ? cell_bit(v.row, pos + k) : cell_bit(pos + k, v.col);
    return m;
  };
  auto expand = [&](const RushKey& k, auto&& emit) {
    std::uint64_t occupied = 0;
    for (int i = 0; i < n; ++i) occupied |= footprint(i, pos_of(k, i));
    for (int i = 0; i < n; ++i) {
      const auto& v = vs[static_cast<std::size_t>(i)];
      const int pos = pos_of(k, i);
      const Dir back = v.horizontal ? Dir::left : Dir::up;
      const Dir fwd = v.horizontal ? Dir::right : Dir::down;
      // up/left before down/right, matching the fixed direction order.
      for (Dir d : {back, fwd}) {
        const int sign = d == back ? -1 : 1;
        for (int dist = 1; dist < kRushHourSize; ++dist) {
          const int lead = sign < 0 ? pos - dist : pos + v.length - 1 + dist;
          if (lead < 0 || lead >= kRushHourSize) break;
          const std::uint64_t bit = v.horizontal ? cell_bit(v.row, lead) : cell_bit(lead, v.col);
          if (occupied & bit) break;
          const int moved = pos + sign * dist;
          RushKey child{(k.positions & ~(std::uint64_t{7} << (3 * i))) |
                        (static_cast<std::uint64_t>(moved) << (3 * i))};
          emit(child, static_cast<std::uint16_t>((i << 8) | (static_cast<int>(d) << 4) | dist));
        }
      }
    }
  };
  auto goal = [&](const RushKey& k) { return pos_of(k, 0) + vs[0].length == kRushHourSize; };
  const BfsRun run = breadth_first(start, expand, goal, budget);
  SearchResult out;
  out.status = run.status;
  out.solution.expansions = run.expansions;
  out.solution.optimal = run.status == SearchStatus::solved;
  for (auto a : run.path) {
    out.solution.actions.push_back(Slide{vs[static_cast<std::size_t>(a >> 8)].letter,
                                         static_cast<Dir>((a >> 4) & 0xF), a & 0xF});
  }
  return out;
}

}  // namespace

SearchResult solve_bfs(GameId game, const EngineState& state, std::uint64_t budget) {
  switch (game) {
    case GameId::sokoban: return solve_sokoban(std::get<SokobanState>(state), budget);
    case GameId::bloxorz: return solve_bloxorz(std::get<BloxorzState>(state), budget);
    case GameId::rush_hour: return solve_rush_hour(std::get<RushHourState>(state), budget);
    default:
      throw PuzzleError(ErrorKind::invalid_argument,
                        "breadth-first search does not handle " + std::string(game_name(game)));
  }
}

}  // namespace puzzles
