#include "puzzles/eval.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace puzzles {

std::string_view failure_name(Failure failure) {
  switch (failure) {
    case Failure::parse_error: return "parse_error";
    case Failure::illegal_action: return "illegal_action";
    case Failure::wrong_answer: return "wrong_answer";
    case Failure::not_at_goal: return "not_at_goal";
    case Failure::step_limit: return "step_limit";
  }
  return "parse_error";
}

namespace {

constexpr std::string_view kActionOpen = "<action>";
constexpr std::string_view kActionClose = "</action>";
constexpr std::string_view kImageOpen = "<image>";
constexpr std::string_view kImageClose = "</image>";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Error parse_failure(std::string message, std::size_t offset) {
  return Error{ErrorKind::parse_error, std::move(message), offset};
}

Verdict fail(Failure f, std::optional<int> step, std::string detail) {
  return Verdict{false, f, step, std::move(detail)};
}

bool answer_correct(const Instance& instance, const EngineState& state, const std::string& answer) {
  if (instance.game == GameId::anagram) {
    const auto& s = std::get<AnagramState>(state);
    return s.dictionary != nullptr && sorted_letters(answer) == sorted_letters(s.letters) &&
           s.dictionary->contains(answer);
  }
  return instance.ground_truth.answer == answer;
}

}  // namespace

Result<ExtractedTranscript> extract_actions(std::string_view text) {
  ExtractedTranscript out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) return out;
    const std::string_view rest = text.substr(pos);
    if (rest.starts_with(kActionOpen)) {
      const std::size_t begin = pos + kActionOpen.size();
      const std::size_t end = text.find(kActionClose, begin);
      if (end == std::string_view::npos) return parse_failure("unclosed <action>", pos);
      const std::string_view content = text.substr(begin, end - begin);
      if (const auto lt = content.find('<'); lt != std::string_view::npos) {
        return parse_failure("delimiter inside <action>", begin + lt);
      }
      std::size_t lead = 0;
      while (lead < content.size() && is_space(content[lead])) ++lead;
      out.actions.emplace_back(trim(content));
      out.offsets.push_back(begin + lead);
      pos = end + kActionClose.size();
    } else if (rest.starts_with(kImageOpen)) {
      const std::size_t end = text.find(kImageClose, pos + kImageOpen.size());
      if (end == std::string_view::npos) return parse_failure("unclosed <image>", pos);
      pos = end + kImageClose.size();
    } else {
      const std::string_view tail = text.substr(pos);
      if (const auto lt = tail.find('<'); lt != std::string_view::npos) {
        return parse_failure("unexpected text or delimiter", pos + (lt == 0 ? 0 : lt));
      }
      out.answer = std::string(trim(tail));
      return out;
    }
  }
}

int step_limit(const Instance& instance) {
  return std::max(64, 4 * static_cast<int>(instance.ground_truth.actions.size()));
}

Verdict judge(const Instance& instance, std::string_view transcript) {
  const GameId game = instance.game;
  auto extracted = extract_actions(transcript);
  if (!extracted) {
    const auto& e = extracted.error();
    return fail(Failure::parse_error, std::nullopt,
                e.message + " at offset " + std::to_string(e.offset.value_or(0)));
  }
  const auto& ex = *extracted;
  std::vector<Action> actions;
  for (std::size_t i = 0; i < ex.actions.size(); ++i) {
    auto a = parse_action(game, ex.actions[i]);
    if (!a) {
      return fail(Failure::parse_error, static_cast<int>(i + 1),
                  "cannot parse '" + ex.actions[i] + "' at offset " + std::to_string(ex.offsets[i]));
    }
    actions.push_back(*a);
  }
  const int limit = step_limit(instance);
  if (static_cast<int>(actions.size()) > limit) {
    return fail(Failure::step_limit, limit + 1, "more than " + std::to_string(limit) + " actions");
  }

  EngineState state = instance.initial;
  bool reached = is_goal(game, state);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    auto next = step(game, state, actions[i]);
    if (!next) return fail(Failure::illegal_action, static_cast<int>(i + 1), next.error().message);
    state = std::move(next).value();
    reached = reached || is_goal(game, state);
  }

  if (is_certificate(game)) {
    if (!ex.answer || ex.answer->empty()) return fail(Failure::wrong_answer, std::nullopt, "missing answer");
    if (!answer_correct(instance, state, *ex.answer)) {
      return fail(Failure::wrong_answer, std::nullopt, "answered '" + *ex.answer + "'");
    }
    return Verdict{true, std::nullopt, std::nullopt, {}};
  }
  if (ex.answer && !ex.answer->empty() && needs_answer(game) && !answer_correct(instance, state, *ex.answer)) {
    return fail(Failure::wrong_answer, std::nullopt, "answered '" + *ex.answer + "'");
  }
  if (ex.answer && !ex.answer->empty() && !needs_answer(game)) {
    return fail(Failure::parse_error, std::nullopt, "unexpected trailing text");
  }
  if (!reached) return fail(Failure::not_at_goal, std::nullopt, "goal never reached");
  return Verdict{true, std::nullopt, std::nullopt, {}};
}

double EvalReport::average() const {
  if (games.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& g : games) sum += g.solve_rate();
  return sum / static_cast<double>(games.size());
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json per_game = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kAllFailures.size(); ++i) failures[std::string(failure_name(kAllFailures[i]))] = g.failures[i];
    per_game.push_back({{"game", game_name(g.game)},
                        {"instances", g.instances},
                        {"solved", g.solved},
                        {"solve_rate", g.solve_rate()},
                        {"failures", failures}});
  }
  j["games"] = per_game;
  j["average"] = average();
  return j.dump(2) + "\n";
}

std::string EvalReport::table() const {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %9s %7s %7s %6s %8s %7s %7s %6s\n", "game", "instances", "solved", "rate",
                "parse", "illegal", "answer", "goal", "limit");
  out += line;
  for (const auto& g : games) {
    std::snprintf(line, sizeof line, "%-20s %9d %7d %7.4f %6d %8d %7d %7d %6d\n",
                  std::string(game_name(g.game)).c_str(), g.instances, g.solved, g.solve_rate(), g.failures[0],
                  g.failures[1], g.failures[2], g.failures[3], g.failures[4]);
    out += line;
  }
  std::snprintf(line, sizeof line, "%-20s %9s %7s %7.4f\n", "average", "", "", average());
  out += line;
  return out;
}

EvalReport evaluate(const std::vector<std::string>& transcripts, const std::vector<Instance>& instances) {
  if (transcripts.size() != instances.size()) {
    throw PuzzleError(ErrorKind::alignment_error, std::to_string(transcripts.size()) + " transcripts for " +
                                                      std::to_string(instances.size()) + " instances");
  }
  EvalReport report;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const GameId game = instances[i].game;
    auto it = std::find_if(report.games.begin(), report.games.end(),
                           [&](const GameReport& g) { return g.game == game; });
    if (it == report.games.end()) {
      report.games.push_back(GameReport{game, 0, 0, {}});
      it = std::prev(report.games.end());
    }
    const Verdict v = judge(instances[i], transcripts[i]);
    ++it->instances;
    if (v.solved) {
      ++it->solved;
    } else {
      ++it->failures[static_cast<std::size_t>(*v.failure)];
    }
  }
  return report;
}

}  // namespace puzzles
