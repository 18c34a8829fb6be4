#include <algorithm>

#include "puzzles/sliding.hpp"

namespace puzzles {

const Vehicle* RushHourState::find(char letter) const {
  for (const auto& v : vehicles) {
    if (v.letter == letter) return &v;
  }
  return nullptr;
}

std::array<char, kRushHourSize * kRushHourSize> RushHourState::occupancy() const {
  std::array<char, kRushHourSize * kRushHourSize> grid;
  grid.fill('.');
  for (const auto& v : vehicles) {
    for (int k = 0; k < v.length; ++k) {
      const int r = v.horizontal ? v.row : v.row + k;
      const int c = v.horizontal ? v.col + k : v.col;
      grid[static_cast<std::size_t>(r * kRushHourSize + c)] = v.letter;
    }
  }
  return grid;
}

void RushHourState::validate() const {
  auto fail = [](const char* what) { throw PuzzleError(ErrorKind::invalid_argument, what); };
  if (vehicles.empty() || vehicles.front().letter != 'A') fail("vehicle A must come first");
  const Vehicle& a = vehicles.front();
  if (!a.horizontal || a.length != 2 || a.row != exit_row) fail("vehicle A must be horizontal on the exit row");
  std::array<int, kRushHourSize * kRushHourSize> count{};
  char previous = 0;
  for (const auto& v : vehicles) {
    if (v.letter <= previous) fail("vehicles must be sorted by unique letter");
    previous = v.letter;
    if (v.length != 2 && v.length != 3) fail("vehicle length");
    const int end_row = v.horizontal ? v.row : v.row + v.length - 1;
    const int end_col = v.horizontal ? v.col + v.length - 1 : v.col;
    if (v.row < 0 || v.col < 0 || end_row >= kRushHourSize || end_col >= kRushHourSize) {
      fail("vehicle outside board");
    }
    for (int k = 0; k < v.length; ++k) {
      const int r = v.horizontal ? v.row : v.row + k;
      const int c = v.horizontal ? v.col + k : v.col;
      if (++count[static_cast<std::size_t>(r * kRushHourSize + c)] > 1) fail("vehicles overlap");
    }
  }
}

Result<RushHourState> rushhour_step(const RushHourState& state, char letter, Dir dir,
                                    int distance) {
  auto it = std::find_if(state.vehicles.begin(), state.vehicles.end(),
                         [&](const Vehicle& v) { return v.letter == letter; });
  if (it == state.vehicles.end()) return Error::illegal("unknown_vehicle");
  if (distance < 1) return Error::illegal("bad_distance");
  const bool horizontal_move = dir == Dir::left || dir == Dir::right;
  if (horizontal_move != it->horizontal) return Error::illegal("wrong_axis");

  const auto grid = state.occupancy();
  const int d = static_cast<int>(dir);
  // Lead cell: the end of the vehicle facing the direction of travel.
  int r = it->row;
  int c = it->col;
  if (dir == Dir::down) r += it->length - 1;
  if (dir == Dir::right) c += it->length - 1;
  for (int step = 0; step < distance; ++step) {
    r += kDirRow[d];
    c += kDirCol[d];
    if (r < 0 || c < 0 || r >= kRushHourSize || c >= kRushHourSize) return Error::illegal("off_board");
    if (grid[static_cast<std::size_t>(r * kRushHourSize + c)] != '.') return Error::illegal("blocked");
  }
  RushHourState next = state;
  auto& moved = next.vehicles[static_cast<std::size_t>(it - state.vehicles.begin())];
  moved.row += kDirRow[d] * distance;
  moved.col += kDirCol[d] * distance;
  return next;
}

bool rushhour_is_goal(const RushHourState& state) {
  const Vehicle* a = state.find('A');
  return a != nullptr && a->col + a->length == kRushHourSize;
}

std::vector<char> blocking_vehicles(const RushHourState& state) {
  std::vector<char> out;
  const Vehicle* a = state.find('A');
  if (a == nullptr) return out;
  for (const auto& v : state.vehicles) {
    if (v.letter == 'A') continue;
    for (int c = a->col + a->length; c < kRushHourSize; ++c) {
      if (v.covers(state.exit_row, c)) {
        out.push_back(v.letter);
        break;
      }
    }
  }
  return out;
}

}  // namespace puzzles
