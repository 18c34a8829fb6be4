#pragma once

// Episode assembly, interleaved transcripts and bulk JSONL export.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puzzles/cot.hpp"
#include "puzzles/instance.hpp"

namespace puzzles {

enum class StateMode { none, json, image_ref };

std::string_view state_mode_name(StateMode mode);
std::optional<StateMode> parse_state_mode(std::string_view name);

struct Episode {
  Instance instance;
  std::string prompt;
  std::vector<Action> actions;
  std::optional<std::string> answer;
  std::vector<EngineState> states;  // s1..sN, states[i] follows actions[i]
  std::uint64_t expansions = 0;
};

/// Replays `solution` from the instance's initial state. Throws
/// PuzzleError(replay_mismatch) when an action is rejected or the replay does
/// not reach the outcome the solution claims.
Episode build_episode(const Instance& instance, const Solution& solution);

struct TranscriptOptions {
  StateMode mode = StateMode::none;
  int image_size = 64;
  bool final_state = true;
  /// Keep at most this many state blocks, chosen uniformly from the seed.
  std::optional<int> max_state_blocks;
};

/// One rendered frame headed for disk, referenced from a state block.
struct FrameRef {
  int step = 0;  // 0 is the initial state
  std::string path;  // relative to the dataset root
};

struct Transcript {
  std::string prompt;
  std::string initial_state;  // JSON or image path; empty in mode none
  std::vector<std::string> actions;
  std::vector<std::optional<std::string>> states;  // parallel to actions
  std::optional<std::string> answer;
  std::vector<FrameRef> frames;

  /// `<action>a</action><image>s</image>...` followed by the bare answer.
  std::string body() const;
};

/// Indices of the state blocks kept for an episode of `count` actions.
std::vector<int> kept_state_blocks(const Episode& episode, int count, const TranscriptOptions& options);

/// Builds the transcript. In image_ref mode the block contents are relative
/// frame paths under `images/<game>/`; frames are listed, not rendered.
Transcript make_transcript(const Episode& episode, const TranscriptOptions& options);

/// The state a frame reference points at (0 is the initial state).
const EngineState& state_at(const Episode& episode, int step);

std::string sha256_hex(const std::vector<std::uint8_t>& bytes);

struct ExportOptions {
  std::vector<GameId> games;
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_end = 200;  // exclusive
  DifficultyTable difficulty;
  TranscriptOptions transcript;
  int jobs = 1;
  Resources resources;
  /// States whose JSON description is longer than this are counted, not dropped.
  std::size_t char_budget = kDefaultCharBudget;
};

struct GameManifest {
  GameId game = GameId::sokoban;
  std::string file;
  std::uint64_t records = 0;
  std::uint64_t images = 0;
  std::uint64_t over_char_budget = 0;  // states s0..sN above the budget
};

struct Manifest {
  std::vector<GameManifest> games;
  std::string json;  // exactly what was written to manifest.json
};

/// The JSONL line (without the terminator) for one seed, rendering and
/// writing its frames under `root` when the mode is image_ref. Written frame
/// paths are appended to `written`; states over the character budget are
/// added to `over_budget`.
std::string export_record(GameId game, Seed seed, const ExportOptions& options,
                          const std::filesystem::path& root,
                          std::vector<std::filesystem::path>* written = nullptr,
                          std::uint64_t* over_budget = nullptr);

/// Writes `<game>.jsonl` per game, `images/` when needed, and finally
/// `manifest.json`. On any error everything this call created is removed
/// before the error propagates.
Manifest write_dataset(const ExportOptions& options, const std::filesystem::path& out_dir);

}  // namespace puzzles
