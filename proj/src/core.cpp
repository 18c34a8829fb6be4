#include "puzzles/core.hpp"

namespace puzzles {

namespace {

constexpr std::array<std::string_view, 12> kGameNames = {
    "sokoban",        "bloxorz",            "rush_hour",      "tangram",
    "tangram_certificate", "jigsaw",        "anagram",        "char_recognition",
    "shape_match_2d", "mental_rotation_2d", "shape_match_3d", "mental_rotation_3d",
};

}  // namespace

std::string_view game_name(GameId game) { return kGameNames[static_cast<std::size_t>(game)]; }

std::optional<GameId> parse_game(std::string_view name) {
  for (std::size_t i = 0; i < kGameNames.size(); ++i) {
    if (kGameNames[i] == name) return static_cast<GameId>(i);
  }
  return std::nullopt;
}

bool is_certificate(GameId game) {
  return game == GameId::tangram_certificate || game == GameId::mental_rotation_2d ||
         game == GameId::mental_rotation_3d;
}

bool needs_answer(GameId game) {
  return is_certificate(game) || game == GameId::anagram || game == GameId::char_recognition;
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::illegal_action: return "illegal_action";
    case ErrorKind::sampling_exhausted: return "sampling_exhausted";
    case ErrorKind::replay_mismatch: return "replay_mismatch";
    case ErrorKind::alignment_error: return "alignment_error";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::io_error: return "io_error";
  }
  return "unknown";
}

Rng Rng::for_instance(GameId game, Seed seed) {
  // Game tag is hashed from the name so reordering the enum never moves streams.
  std::uint64_t tag = 0xcbf29ce484222325ULL;
  for (char c : game_name(game)) {
    tag = (tag ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  return Rng(mix64(mix64(seed.value) ^ tag));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range; unbiased and portable.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

}  // namespace puzzles
