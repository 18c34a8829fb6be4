#pragma once

// Strict transcript parsing, engine replay and solve-rate reports.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puzzles/instance.hpp"

namespace puzzles {

enum class Failure { parse_error, illegal_action, wrong_answer, not_at_goal, step_limit };
inline constexpr std::array<Failure, 5> kAllFailures = {Failure::parse_error, Failure::illegal_action,
                                                        Failure::wrong_answer, Failure::not_at_goal,
                                                        Failure::step_limit};

std::string_view failure_name(Failure failure);

struct Verdict {
  bool solved = false;
  std::optional<Failure> failure;
  std::optional<int> failing_step;  // 1-based action number
  std::string detail;
};

struct ExtractedTranscript {
  std::vector<std::string> actions;   // trimmed action texts
  std::vector<std::size_t> offsets;   // byte offset of each action's content
  std::optional<std::string> answer;  // trimmed trailing text, if any
};

/// Splits `<action>` blocks and the trailing answer; `<image>` contents are
/// skipped unread. Errors (parse_error, with offset) on unclosed, nested or
/// stray delimiters and on text between blocks.
Result<ExtractedTranscript> extract_actions(std::string_view transcript);

/// Actions allowed per transcript: four times the expert length, at least 64.
int step_limit(const Instance& instance);

/// Replays one transcript against its instance.
Verdict judge(const Instance& instance, std::string_view transcript);

struct GameReport {
  GameId game = GameId::sokoban;
  int instances = 0;
  int solved = 0;
  std::array<int, kAllFailures.size()> failures{};

  double solve_rate() const { return instances == 0 ? 0.0 : static_cast<double>(solved) / instances; }
};

struct EvalReport {
  std::vector<GameReport> games;  // in first-seen order

  /// Unweighted mean of the per-game solve rates.
  double average() const;
  std::string to_json() const;
  std::string table() const;
};

/// Throws PuzzleError(alignment_error) when the counts differ.
EvalReport evaluate(const std::vector<std::string>& transcripts, const std::vector<Instance>& instances);

}  // namespace puzzles
