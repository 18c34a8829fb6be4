// puzzlectl: sample, solve, render, export, evaluate and summarize puzzles.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "puzzles/cot.hpp"
#include "puzzles/dataset.hpp"
#include "puzzles/eval.hpp"
#include "puzzles/raster.hpp"

namespace {

using namespace puzzles;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string games = "all";
  std::string seeds = "0..200";
  std::string state_mode = "none";
  int size = 64;
  int render_size = kNativeSize;
  std::string out;
  int jobs = 1;
  std::string config;
  std::vector<std::string> sets;
  std::string transcripts;
  int step = 0;
  std::string dictionary;
  bool no_final_state = false;
  int max_state_blocks = 0;
  bool all_steps = false;
  std::size_t char_budget = kDefaultCharBudget;
};

std::vector<GameId> parse_games(const std::string& text) {
  if (text == "all") return {kAllGames.begin(), kAllGames.end()};
  std::vector<GameId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto g = parse_game(item);
    if (!g) throw UsageError("unknown game '" + item + "'");
    if (std::find(out.begin(), out.end(), *g) == out.end()) out.push_back(*g);
  }
  if (out.empty()) throw UsageError("no games selected");
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_seeds(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw UsageError("bad seed range '" + text + "' (expected A..B)");
    }
    return v;
  };
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v + 1};
  }
  const auto lo = number(std::string_view(text).substr(0, dots));
  const auto hi = number(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw UsageError("bad seed range '" + text + "' (B < A)");
  return {lo, hi};
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw PuzzleError(ErrorKind::io_error, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Context {
  std::vector<GameId> games;
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_end = 0;
  DifficultyTable difficulty;
  Resources resources;
};

Context make_context(const Options& o) {
  Context c;
  c.games = parse_games(o.games);
  std::tie(c.seed_begin, c.seed_end) = parse_seeds(o.seeds);
  if (!o.config.empty()) {
    if (auto err = c.difficulty.load(read_text(o.config))) throw PuzzleError(*err);
  }
  for (const auto& s : o.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects game.param=value, got '" + s + "'");
    if (auto err = c.difficulty.set(s.substr(0, eq), s.substr(eq + 1))) throw UsageError(err->message);
  }
  if (!o.dictionary.empty()) c.resources.dictionary = Dictionary::from_file(o.dictionary);
  return c;
}

void print_header(const std::string& command, const Options& o, const Context& c) {
  std::cerr << "puzzlectl " << command << " --games ";
  for (std::size_t i = 0; i < c.games.size(); ++i) std::cerr << (i ? "," : "") << game_name(c.games[i]);
  std::cerr << " --seeds " << c.seed_begin << ".." << c.seed_end;
  if (command == "export" || command == "render") std::cerr << " --size " << o.size;
  if (command == "export") std::cerr << " --state-mode " << o.state_mode << " --jobs " << o.jobs << " --char-budget " << o.char_budget;
  if (!o.dictionary.empty()) std::cerr << " --dictionary " << o.dictionary;
  std::cerr << "\n";
  for (GameId g : c.games) std::cerr << "  " << game_name(g) << ": " << c.difficulty[g].describe() << "\n";
}

ordered_json actions_json(const std::vector<Action>& actions) {
  ordered_json j = ordered_json::array();
  for (const auto& a : actions) j.push_back(render_action(a));
  return j;
}

int run_sample(const Options& o) {
  const Context c = make_context(o);
  print_header("sample", o, c);
  for (GameId g : c.games) {
    for (std::uint64_t s = c.seed_begin; s < c.seed_end; ++s) {
      const Instance inst = sample(g, Seed{s}, c.difficulty[g], c.resources);
      ordered_json j;
      j["game"] = game_name(g);
      j["seed"] = s;
      j["solvable"] = inst.solvable;
      j["expert_length"] = inst.ground_truth.actions.size();
      j["prompt"] = prompt(g, inst.initial);
      j["state"] = ordered_json::parse(emit_state_json(g, inst.initial, 0));
      std::cout << j.dump() << "\n";
    }
  }
  return kExitOk;
}

int run_solve(const Options& o) {
  const Context c = make_context(o);
  print_header("solve", o, c);
  for (GameId g : c.games) {
    for (std::uint64_t s = c.seed_begin; s < c.seed_end; ++s) {
      const Instance inst = sample(g, Seed{s}, c.difficulty[g], c.resources);
      const Solution sol = solve(g, inst.initial);
      ordered_json j;
      j["game"] = game_name(g);
      j["seed"] = s;
      j["actions"] = actions_json(sol.actions);
      j["answer"] = sol.answer ? ordered_json(*sol.answer) : ordered_json(nullptr);
      j["optimal"] = sol.optimal;
      j["expansions"] = sol.expansions;
      std::cout << j.dump() << "\n";
    }
  }
  return kExitOk;
}

int run_render(Options o) {
  o.size = o.render_size;
  const Context c = make_context(o);
  if (!valid_frame_size(o.size)) throw UsageError("--size must be 256, 128 or 64");
  print_header("render", o, c);
  const std::filesystem::path out = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  const bool single =
      !o.all_steps && c.games.size() == 1 && c.seed_end - c.seed_begin == 1 && out.extension() == ".png";
  if (!single) std::filesystem::create_directories(out);
  for (GameId g : c.games) {
    for (std::uint64_t s = c.seed_begin; s < c.seed_end; ++s) {
      const Instance inst = sample(g, Seed{s}, c.difficulty[g], c.resources);
      const Episode e = build_episode(inst, inst.ground_truth);
      const int last = static_cast<int>(e.actions.size());
      if (!o.all_steps && (o.step < 0 || o.step > last)) {
        throw UsageError("--step " + std::to_string(o.step) + " outside 0.." + std::to_string(last));
      }
      const int from = o.all_steps ? 0 : o.step;
      const int to = o.all_steps ? last : o.step;
      for (int k = from; k <= to; ++k) {
        char name[96];
        std::snprintf(name, sizeof name, "%s_%llu_%03d.png", std::string(game_name(g)).c_str(),
                      static_cast<unsigned long long>(s), k);
        const auto path = single ? out : out / name;
        write_file(path.string(), encode_png(render(g, state_at(e, k), o.size)));
        std::cerr << "wrote " << path.string() << "\n";
      }
    }
  }
  return kExitOk;
}

int run_export(const Options& o) {
  const Context c = make_context(o);
  if (o.out.empty()) throw UsageError("export needs --out DIR");
  const auto mode = parse_state_mode(o.state_mode);
  if (!mode) throw UsageError("--state-mode must be none, json or image_ref");
  if (*mode == StateMode::image_ref && !valid_frame_size(o.size)) throw UsageError("--size must be 256, 128 or 64");
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  print_header("export", o, c);
  ExportOptions e;
  e.games = c.games;
  e.seed_begin = c.seed_begin;
  e.seed_end = c.seed_end;
  e.difficulty = c.difficulty;
  e.transcript.mode = *mode;
  e.transcript.image_size = o.size;
  e.transcript.final_state = !o.no_final_state;
  if (o.max_state_blocks > 0) e.transcript.max_state_blocks = o.max_state_blocks;
  e.jobs = o.jobs;
  e.char_budget = o.char_budget;
  e.resources = c.resources;
  const Manifest m = write_dataset(e, o.out);
  for (const auto& g : m.games) {
    std::cerr << "  " << g.file << ": " << g.records << " records, " << g.images << " images\n";
    if (g.over_char_budget > 0) {
      std::cerr << "  warning: " << g.over_char_budget << " " << game_name(g.game) << " states exceed "
                << o.char_budget << " characters\n";
    }
  }
  return kExitOk;
}

int run_eval(const Options& o) {
  Context c = make_context(o);
  if (o.transcripts.empty()) throw UsageError("eval needs --transcripts FILE");
  print_header("eval", o, c);
  const std::string text = read_text(o.transcripts);
  std::vector<Instance> instances;
  std::vector<std::string> transcripts;
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const std::exception& ex) {
      throw PuzzleError(ErrorKind::parse_error, o.transcripts + ":" + std::to_string(number) + ": " + ex.what());
    }
    if (!j.contains("seed") || !j.contains("transcript")) {
      throw PuzzleError(ErrorKind::parse_error,
                        o.transcripts + ":" + std::to_string(number) + ": needs seed and transcript");
    }
    GameId game;
    if (j.contains("game")) {
      const auto g = parse_game(j["game"].get<std::string>());
      if (!g) throw PuzzleError(ErrorKind::parse_error, "unknown game in line " + std::to_string(number));
      game = *g;
    } else if (c.games.size() == 1) {
      game = c.games.front();
    } else {
      throw UsageError("transcripts without a game field need a single --game");
    }
    if (std::find(c.games.begin(), c.games.end(), game) == c.games.end()) continue;
    const Seed seed{j["seed"].get<std::uint64_t>()};
    Difficulty difficulty = c.difficulty[game];
    if (j.contains("difficulty")) {
      for (const auto& [name, value] : j["difficulty"].items()) {
        auto next = difficulty.with(name, value.get<int>());
        if (!next) throw PuzzleError(ErrorKind::parse_error, "line " + std::to_string(number) + ": " + next.error().message);
        difficulty = *next;
      }
    }
    instances.push_back(sample(game, seed, difficulty, c.resources));
    transcripts.push_back(j["transcript"].get<std::string>());
  }
  const EvalReport report = evaluate(transcripts, instances);
  std::cerr << report.table();
  if (o.out.empty()) {
    std::cout << report.to_json();
  } else {
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    f << report.to_json();
    if (!f) throw PuzzleError(ErrorKind::io_error, "cannot write " + o.out);
    std::cerr << "wrote " << o.out << "\n";
  }
  return kExitOk;
}

int run_stats(const Options& o) {
  const Context c = make_context(o);
  print_header("stats", o, c);
  ordered_json all = ordered_json::array();
  std::fprintf(stderr, "%-20s %5s %6s %6s %6s %6s %9s %9s %6s\n", "game", "n", "len_min", "mean", "median", "max",
               "chars_mean", "chars_max", "over");
  for (GameId g : c.games) {
    std::vector<int> lengths;
    std::vector<std::size_t> chars;
    for (std::uint64_t s = c.seed_begin; s < c.seed_end; ++s) {
      const Instance inst = sample(g, Seed{s}, c.difficulty[g], c.resources);
      const Episode e = build_episode(inst, inst.ground_truth);
      lengths.push_back(static_cast<int>(e.actions.size()));
      chars.push_back(char_budget(emit_state_json(g, inst.initial, 0)));
      for (std::size_t i = 0; i < e.states.size(); ++i) {
        chars.push_back(char_budget(emit_state_json(g, e.states[i], static_cast<int>(i + 1))));
      }
    }
    if (lengths.empty()) continue;
    std::vector<int> sorted = lengths;
    std::sort(sorted.begin(), sorted.end());
    double mean = 0;
    for (int l : lengths) mean += l;
    mean /= static_cast<double>(lengths.size());
    double chars_mean = 0;
    std::size_t chars_max = 0;
    std::size_t over = 0;
    for (auto n : chars) {
      chars_mean += static_cast<double>(n);
      chars_max = std::max(chars_max, n);
      over += n > kDefaultCharBudget ? 1 : 0;
    }
    chars_mean /= static_cast<double>(chars.size());
    const int median = sorted[sorted.size() / 2];
    std::fprintf(stderr, "%-20s %5zu %6d %6.2f %6d %6d %9.1f %9zu %6zu\n", std::string(game_name(g)).c_str(),
                 lengths.size(), sorted.front(), mean, median, sorted.back(), chars_mean, chars_max, over);
    std::map<int, int> histogram;
    for (int l : lengths) ++histogram[l];
    ordered_json hist = ordered_json::object();
    for (const auto& [l, n] : histogram) hist[std::to_string(l)] = n;
    all.push_back({{"game", game_name(g)},
                   {"instances", lengths.size()},
                   {"length_min", sorted.front()},
                   {"length_mean", mean},
                   {"length_median", median},
                   {"length_max", sorted.back()},
                   {"length_histogram", hist},
                   {"chars_mean", chars_mean},
                   {"chars_max", chars_max},
                   {"states_over_budget", over},
                   {"char_budget", kDefaultCharBudget}});
  }
  std::cout << all.dump(2) << "\n";
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::replay_mismatch: return kExitInternal;
    default: return kExitData;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial puzzle generation, solving, rendering, export and evaluation"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--game,--games", o.games, "Comma-separated game ids or 'all'");
    sub->add_option("--seeds", o.seeds, "Half-open seed range A..B, or a single seed");
    sub->add_option("--config", o.config, "Difficulty file of game.param = value lines");
    sub->add_option("--set", o.sets, "Difficulty override game.param=value (repeatable)");
    sub->add_option("--dictionary", o.dictionary, "Word list replacing the bundled dictionary");
  };
  auto* sample_cmd = app.add_subcommand("sample", "Print instance summaries as JSONL");
  common(sample_cmd);
  auto* solve_cmd = app.add_subcommand("solve", "Print expert solutions as JSONL");
  common(solve_cmd);
  auto* render_cmd = app.add_subcommand("render", "Write PNG frames of an expert episode");
  common(render_cmd);
  render_cmd->add_option("--seed", o.seeds, "Seed (alias of --seeds)");
  render_cmd->add_option("--step", o.step, "Expert step to render (0 is the initial state)");
  render_cmd->add_flag("--all-steps", o.all_steps, "Render every state of the expert episode");
  render_cmd->add_option("--size", o.render_size, "Frame size: 256, 128 or 64");
  render_cmd->add_option("--out", o.out, "Output file (.png) or directory");
  auto* export_cmd = app.add_subcommand("export", "Write a JSONL dataset with manifest");
  common(export_cmd);
  export_cmd->add_option("--state-mode", o.state_mode, "none, json or image_ref");
  export_cmd->add_option("--size", o.size, "Frame size for image_ref: 256, 128 or 64");
  export_cmd->add_option("--out", o.out, "Output directory")->required();
  export_cmd->add_option("--jobs", o.jobs, "Worker threads");
  export_cmd->add_flag("--no-final-state", o.no_final_state, "Omit the state block after the last action");
  export_cmd->add_option("--max-state-blocks", o.max_state_blocks, "Subsample state blocks to at most N");
  export_cmd->add_option("--char-budget", o.char_budget, "Warn about state descriptions longer than this");
  auto* eval_cmd = app.add_subcommand("eval", "Score transcripts by replay");
  common(eval_cmd);
  eval_cmd->add_option("--transcripts", o.transcripts, "JSONL of {seed, transcript[, game]}")->required();
  eval_cmd->add_option("--out", o.out, "Report JSON path (default: standard output)");
  auto* stats_cmd = app.add_subcommand("stats", "Solution-length and state-size distributions");
  common(stats_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sample_cmd->parsed()) return run_sample(o);
    if (solve_cmd->parsed()) return run_solve(o);
    if (render_cmd->parsed()) return run_render(o);
    if (export_cmd->parsed()) return run_export(o);
    if (eval_cmd->parsed()) return run_eval(o);
    if (stats_cmd->parsed()) return run_stats(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PuzzleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
