#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace puzzles {

/// Version tag written into every dataset record and manifest.
inline constexpr int kSchemaVersion = 1;

enum class GameId : std::uint8_t {
  sokoban,
  bloxorz,
  rush_hour,
  tangram,
  tangram_certificate,
  jigsaw,
  anagram,
  char_recognition,
  shape_match_2d,
  mental_rotation_2d,
  shape_match_3d,
  mental_rotation_3d,
};

inline constexpr std::array<GameId, 12> kAllGames = {
    GameId::sokoban,          GameId::bloxorz,
    GameId::rush_hour,        GameId::tangram,
    GameId::tangram_certificate, GameId::jigsaw,
    GameId::anagram,          GameId::char_recognition,
    GameId::shape_match_2d,   GameId::mental_rotation_2d,
    GameId::shape_match_3d,   GameId::mental_rotation_3d,
};

std::string_view game_name(GameId game);
std::optional<GameId> parse_game(std::string_view name);

/// Yes/no games: the response is a bare answer, not an action.
bool is_certificate(GameId game);
/// Games whose episode carries a response r (certificates and identify games).
bool needs_answer(GameId game);

struct Seed {
  std::uint64_t value = 0;
  auto operator<=>(const Seed&) const = default;
};

enum class ErrorKind {
  parse_error,
  illegal_action,
  sampling_exhausted,
  replay_mismatch,
  alignment_error,
  invalid_argument,
  io_error,
};

std::string_view error_kind_name(ErrorKind kind);

struct Error {
  ErrorKind kind = ErrorKind::invalid_argument;
  std::string message;
  std::optional<std::size_t> offset;  // byte offset for parse errors

  static Error illegal(std::string reason) {
    return {ErrorKind::illegal_action, std::move(reason), std::nullopt};
  }
  static Error parse(std::string message, std::size_t offset) {
    return {ErrorKind::parse_error, std::move(message), offset};
  }
};

/// Thrown for errors that abort a run (sampling exhaustion, I/O, replay divergence).
class PuzzleError : public std::runtime_error {
 public:
  explicit PuzzleError(Error error)
      : std::runtime_error(std::string(error_kind_name(error.kind)) + ": " + error.message),
        error_(std::move(error)) {}
  PuzzleError(ErrorKind kind, std::string message)
      : PuzzleError(Error{kind, std::move(message), std::nullopt}) {}

  const Error& error() const noexcept { return error_; }
  ErrorKind kind() const noexcept { return error_.kind; }

 private:
  Error error_;
};

/// Value or Error. Used for every fallible pure operation (parsing, stepping).
template <class T>
class [[nodiscard]] Result {
 public:
  Result(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Result(Error error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const noexcept { return data_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw PuzzleError(error());
    return std::get<0>(data_);
  }
  T&& value() && {
    if (!ok()) throw PuzzleError(error());
    return std::get<0>(std::move(data_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Error& error() const { return std::get<1>(data_); }

 private:
  std::variant<T, Error> data_;
};

/// Stable 64-bit mixer (splitmix64 finalizer).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random source. The engine is std::mt19937_64 (fully specified
/// by the standard); bounded draws are done here because the standard
/// distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for (seed, game): distinct games never share a stream.
  static Rng for_instance(GameId game, Seed seed);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool coin() { return (next() >> 63) != 0; }
  /// True with probability percent/100.
  bool percent(int percent) { return static_cast<int>(below(100)) < percent; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace puzzles
