#pragma once

// Per-game difficulty parameters, their legal ranges, and the flat
// `game.param = value` configuration format.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "puzzles/core.hpp"

namespace puzzles {

struct ParamSpec {
  std::string_view name;
  int min;
  int max;
  int fallback;
  std::string_view help;
};

/// Parameters of `game` in declaration order (empty for games without knobs).
std::span<const ParamSpec> param_specs(GameId game);

class Difficulty {
 public:
  /// The default record for `game`.
  static Difficulty defaults(GameId game);

  GameId game() const { return game_; }
  /// Throws PuzzleError(invalid_argument) for an unknown name.
  int operator[](std::string_view name) const;
  /// Copy with one parameter replaced; errors on unknown names, out-of-range
  /// values, or inconsistent min/max pairs.
  Result<Difficulty> with(std::string_view name, int value) const;
  /// Name/value pairs in declaration order.
  std::vector<std::pair<std::string, int>> entries() const;
  /// "name=value name=value" in declaration order ("default" when empty).
  std::string describe() const;

  bool operator==(const Difficulty&) const = default;

 private:
  explicit Difficulty(GameId game);
  std::optional<Error> check() const;

  GameId game_;
  std::vector<int> values_;
};

/// One difficulty record per game, starting from the defaults.
class DifficultyTable {
 public:
  DifficultyTable();

  const Difficulty& operator[](GameId game) const;
  /// Applies `key` (of the form game.param) = `value`.
  std::optional<Error> set(std::string_view key, std::string_view value);
  /// Applies every `game.param = value` line; blank lines and lines starting
  /// with '#' are ignored. Errors carry the byte offset of the offending line.
  std::optional<Error> load(std::string_view text);

 private:
  std::map<GameId, Difficulty> records_;
};

}  // namespace puzzles
