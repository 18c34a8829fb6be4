#include "puzzles/difficulty.hpp"

#include <charconv>

namespace puzzles {

namespace {

constexpr ParamSpec kSokoban[] = {
    {"size", 5, 8, 6, "board width and height in cells"},
    {"boxes", 1, 3, 2, "number of boxes (and goals)"},
    {"min_moves", 2, 14, 8, "minimum optimal solution length"},
    {"wall_percent", 0, 20, 10, "chance that an interior cell is a wall"},
};
constexpr ParamSpec kBloxorz[] = {
    {"size", 5, 8, 6, "board width and height in cells"},
    {"fragile_percent", 0, 20, 10, "chance that a tile is fragile"},
    {"min_moves", 2, 14, 8, "minimum optimal solution length"},
};
constexpr ParamSpec kRushHour[] = {
    {"vehicles", 3, 11, 7, "vehicles including car A"},
    {"min_moves", 1, 9, 5, "minimum optimal number of slides"},
};
constexpr ParamSpec kTangram[] = {
    {"pieces", 2, 7, 7, "pieces used, taken from the start of the classical set"},
};
constexpr ParamSpec kJigsaw[] = {
    {"min_k", 2, 3, 2, "smallest grid side"},
    {"max_k", 2, 3, 3, "largest grid side"},
};
constexpr ParamSpec kAnagram[] = {
    {"min_length", 6, 10, 6, "shortest word"},
    {"max_length", 6, 10, 10, "longest word"},
    {"min_swaps", 5, 9, 5, "minimum swaps between scramble and word"},
};
constexpr ParamSpec kRot2D[] = {
    {"cells", 4, 6, 5, "polyomino cell count"},
};
constexpr ParamSpec kRot3D[] = {
    {"min_voxels", 7, 11, 7, "smallest polycube"},
    {"max_voxels", 7, 11, 11, "largest polycube"},
};

struct MinMax {
  std::string_view low;
  std::string_view high;
};
constexpr MinMax kPairs[] = {{"min_k", "max_k"}, {"min_length", "max_length"},
                             {"min_voxels", "max_voxels"}};

int find_param(GameId game, std::string_view name) {
  const auto specs = param_specs(game);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::span<const ParamSpec> param_specs(GameId game) {
  switch (game) {
    case GameId::sokoban: return kSokoban;
    case GameId::bloxorz: return kBloxorz;
    case GameId::rush_hour: return kRushHour;
    case GameId::tangram:
    case GameId::tangram_certificate: return kTangram;
    case GameId::jigsaw: return kJigsaw;
    case GameId::anagram: return kAnagram;
    case GameId::char_recognition: return {};
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d: return kRot2D;
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d: return kRot3D;
  }
  return {};
}

Difficulty::Difficulty(GameId game) : game_(game) {
  for (const auto& spec : param_specs(game)) values_.push_back(spec.fallback);
}

Difficulty Difficulty::defaults(GameId game) { return Difficulty(game); }

int Difficulty::operator[](std::string_view name) const {
  const int i = find_param(game_, name);
  if (i < 0) {
    throw PuzzleError(ErrorKind::invalid_argument, "unknown parameter " + std::string(game_name(game_)) +
                                                       "." + std::string(name));
  }
  return values_[static_cast<std::size_t>(i)];
}

std::optional<Error> Difficulty::check() const {
  for (const auto& pair : kPairs) {
    const int lo = find_param(game_, pair.low);
    const int hi = find_param(game_, pair.high);
    if (lo < 0 || hi < 0) continue;
    if (values_[static_cast<std::size_t>(lo)] > values_[static_cast<std::size_t>(hi)]) {
      return Error{ErrorKind::invalid_argument,
                   std::string(game_name(game_)) + "." + std::string(pair.low) + " exceeds " +
                       std::string(pair.high),
                   std::nullopt};
    }
  }
  return std::nullopt;
}

Result<Difficulty> Difficulty::with(std::string_view name, int value) const {
  const int i = find_param(game_, name);
  if (i < 0) {
    return Error{ErrorKind::invalid_argument,
                 "unknown parameter " + std::string(game_name(game_)) + "." + std::string(name),
                 std::nullopt};
  }
  const ParamSpec& spec = param_specs(game_)[static_cast<std::size_t>(i)];
  if (value < spec.min || value > spec.max) {
    return Error{ErrorKind::invalid_argument,
                 std::string(game_name(game_)) + "." + std::string(name) + " must be in [" +
                     std::to_string(spec.min) + "," + std::to_string(spec.max) + "]",
                 std::nullopt};
  }
  Difficulty next = *this;
  next.values_[static_cast<std::size_t>(i)] = value;
  if (auto err = next.check()) return *err;
  return next;
}

std::vector<std::pair<std::string, int>> Difficulty::entries() const {
  std::vector<std::pair<std::string, int>> out;
  const auto specs = param_specs(game_);
  for (std::size_t i = 0; i < specs.size(); ++i) out.emplace_back(std::string(specs[i].name), values_[i]);
  return out;
}

std::string Difficulty::describe() const {
  std::string out;
  for (const auto& [name, value] : entries()) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out.empty() ? "default" : out;
}

DifficultyTable::DifficultyTable() {
  for (GameId g : kAllGames) records_.emplace(g, Difficulty::defaults(g));
}

const Difficulty& DifficultyTable::operator[](GameId game) const { return records_.at(game); }

std::optional<Error> DifficultyTable::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  const auto dot = key.find('.');
  if (dot == std::string_view::npos) {
    return Error{ErrorKind::invalid_argument, "expected game.param, got '" + std::string(key) + "'",
                 std::nullopt};
  }
  const auto game = parse_game(key.substr(0, dot));
  if (!game) {
    return Error{ErrorKind::invalid_argument, "unknown game '" + std::string(key.substr(0, dot)) + "'",
                 std::nullopt};
  }
  int number = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
  if (ec != std::errc{} || end != value.data() + value.size() || value.empty()) {
    return Error{ErrorKind::invalid_argument,
                 "value for " + std::string(key) + " must be an integer", std::nullopt};
  }
  auto next = records_.at(*game).with(key.substr(dot + 1), number);
  if (!next) return next.error();
  records_.at(*game) = std::move(next).value();
  return std::nullopt;
}

std::optional<Error> DifficultyTable::load(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    const std::size_t offset = start;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) return Error::parse("expected game.param = value", offset);
    if (auto err = set(line.substr(0, eq), line.substr(eq + 1))) {
      err->kind = ErrorKind::parse_error;
      err->offset = offset;
      return err;
    }
  }
  return std::nullopt;
}

}  // namespace puzzles
