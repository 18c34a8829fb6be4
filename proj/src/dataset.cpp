#include "puzzles/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include <openssl/evp.h>

#include "json.hpp"

#include "puzzles/cot.hpp"
#include "puzzles/raster.hpp"

namespace puzzles {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string_view state_mode_name(StateMode mode) {
  switch (mode) {
    case StateMode::none: return "none";
    case StateMode::json: return "json";
    case StateMode::image_ref: return "image_ref";
  }
  return "none";
}

std::optional<StateMode> parse_state_mode(std::string_view name) {
  for (StateMode m : {StateMode::none, StateMode::json, StateMode::image_ref}) {
    if (state_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

PuzzleError mismatch(const Instance& instance, const std::string& what) {
  return PuzzleError(ErrorKind::replay_mismatch, std::string(game_name(instance.game)) + " seed " +
                                                     std::to_string(instance.seed.value) + ": " + what);
}

std::string frame_path(GameId game, Seed seed, int step) {
  char name[64];
  std::snprintf(name, sizeof name, "%08llu_%03d.png", static_cast<unsigned long long>(seed.value), step);
  return "images/" + std::string(game_name(game)) + "/" + name;
}

}  // namespace

Episode build_episode(const Instance& instance, const Solution& solution) {
  Episode e;
  e.instance = instance;
  e.prompt = prompt(instance.game, instance.initial);
  e.actions = solution.actions;
  e.answer = solution.answer;
  e.expansions = solution.expansions;
  EngineState current = instance.initial;
  for (std::size_t i = 0; i < solution.actions.size(); ++i) {
    auto next = step(instance.game, current, solution.actions[i]);
    if (!next) {
      throw mismatch(instance, "action " + std::to_string(i + 1) + " " + render_action(solution.actions[i]) +
                                   " rejected: " + next.error().message);
    }
    current = std::move(next).value();
    e.states.push_back(current);
  }
  const bool wants_goal = !is_certificate(instance.game) || solution.answer == std::optional<std::string>("yes");
  if (wants_goal && !is_goal(instance.game, current)) throw mismatch(instance, "replay does not reach the goal");
  if (needs_answer(instance.game) && !solution.answer) throw mismatch(instance, "missing answer");
  if (instance.ground_truth.answer != solution.answer && is_certificate(instance.game)) {
    throw mismatch(instance, "answer differs from ground truth");
  }
  return e;
}

const EngineState& state_at(const Episode& episode, int step) {
  if (step == 0) return episode.instance.initial;
  return episode.states.at(static_cast<std::size_t>(step - 1));
}

std::string Transcript::body() const {
  std::string out;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    out += "<action>";
    out += actions[i];
    out += "</action>";
    if (states[i]) {
      out += "<image>";
      out += *states[i];
      out += "</image>";
    }
  }
  if (answer) out += *answer;
  return out;
}

std::vector<int> kept_state_blocks(const Episode& episode, int count, const TranscriptOptions& options) {
  std::vector<int> keep;
  if (options.mode == StateMode::none) return keep;
  for (int i = 0; i < count; ++i) {
    if (i == count - 1 && !options.final_state) break;
    keep.push_back(i);
  }
  if (options.max_state_blocks && static_cast<int>(keep.size()) > *options.max_state_blocks) {
    Rng rng = Rng::for_instance(episode.instance.game, Seed{mix64(episode.instance.seed.value ^ 0x5afe5afeULL)});
    rng.shuffle(keep);
    keep.resize(static_cast<std::size_t>(std::max(0, *options.max_state_blocks)));
    std::sort(keep.begin(), keep.end());
  }
  return keep;
}

Transcript make_transcript(const Episode& episode, const TranscriptOptions& options) {
  if (options.mode == StateMode::image_ref && !valid_frame_size(options.image_size)) {
    throw PuzzleError(ErrorKind::invalid_argument, "image size must be 256, 128 or 64");
  }
  const GameId game = episode.instance.game;
  const Seed seed = episode.instance.seed;
  Transcript t;
  t.prompt = episode.prompt;
  t.answer = episode.answer;
  const int n = static_cast<int>(episode.actions.size());
  for (const auto& a : episode.actions) t.actions.push_back(render_action(a));
  t.states.assign(static_cast<std::size_t>(n), std::nullopt);

  auto describe = [&](int step) -> std::string {
    if (options.mode == StateMode::json) return emit_state_json(game, state_at(episode, step), step);
    t.frames.push_back({step, frame_path(game, seed, step)});
    return t.frames.back().path;
  };
  if (options.mode != StateMode::none) t.initial_state = describe(0);
  for (int i : kept_state_blocks(episode, n, options)) t.states[static_cast<std::size_t>(i)] = describe(i + 1);
  return t;
}

std::string sha256_hex(const std::vector<std::uint8_t>& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

namespace {

ordered_json difficulty_json(const Difficulty& d) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : d.entries()) j[name] = value;
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw PuzzleError(ErrorKind::io_error, "cannot write " + path.string());
}

}  // namespace

std::string export_record(GameId game, Seed seed, const ExportOptions& options, const fs::path& root,
                          std::vector<fs::path>* written, std::uint64_t* over_budget) {
  const Difficulty& difficulty = options.difficulty[game];
  const Instance instance = sample(game, seed, difficulty, options.resources);
  const Episode episode = build_episode(instance, instance.ground_truth);
  const Transcript t = make_transcript(episode, options.transcript);
  if (over_budget != nullptr) {
    for (int i = 0; i <= static_cast<int>(episode.actions.size()); ++i) {
      if (char_budget(emit_state_json(game, state_at(episode, i), i)) > options.char_budget) ++*over_budget;
    }
  }

  ordered_json images = ordered_json::array();
  for (const auto& f : t.frames) {
    const auto png = encode_png(render(game, state_at(episode, f.step), options.transcript.image_size));
    write_file((root / f.path).string(), png);
    if (written != nullptr) written->push_back(root / f.path);
    images.push_back({{"path", f.path}, {"sha256", sha256_hex(png)}});
  }

  ordered_json actions = ordered_json::array();
  for (const auto& a : t.actions) actions.push_back(a);
  ordered_json record;
  record["schema_version"] = kSchemaVersion;
  record["game"] = game_name(game);
  record["seed"] = seed.value;
  record["difficulty"] = difficulty_json(difficulty);
  record["prompt"] = t.prompt;
  record["actions"] = actions;
  record["answer"] = t.answer ? ordered_json(*t.answer) : ordered_json(nullptr);
  record["state_mode"] = state_mode_name(options.transcript.mode);
  if (options.transcript.mode != StateMode::none) record["initial_state"] = t.initial_state;
  record["transcript"] = t.body();
  record["images"] = images;
  record["solver_stats"] = {{"expansions", episode.expansions}, {"optimal", instance.ground_truth.optimal}};
  return record.dump();
}

Manifest write_dataset(const ExportOptions& options, const fs::path& out_dir) {
  const bool images = options.transcript.mode == StateMode::image_ref;
  if (images && !valid_frame_size(options.transcript.image_size)) {
    throw PuzzleError(ErrorKind::invalid_argument, "image size must be 256, 128 or 64");
  }
  if (options.seed_end < options.seed_begin) {
    throw PuzzleError(ErrorKind::invalid_argument, "empty or reversed seed range");
  }
  std::vector<fs::path> created_dirs;
  std::vector<fs::path> created_files;
  std::vector<std::vector<fs::path>> written_frames;
  auto make_dir = [&](const fs::path& p) {
    std::vector<fs::path> missing;
    for (fs::path q = p; !q.empty() && !fs::exists(q); q = q.parent_path()) {
      missing.push_back(q);
      if (q == q.parent_path()) break;
    }
    fs::create_directories(p);
    created_dirs.insert(created_dirs.end(), missing.rbegin(), missing.rend());
  };
  auto make_file = [&](const fs::path& p, const std::string& text) {
    if (!fs::exists(p)) created_files.push_back(p);
    write_text(p, text);
  };

  try {
    make_dir(out_dir);
    Manifest manifest;
    ordered_json games = ordered_json::array();
    for (GameId game : options.games) {
      if (images) make_dir(out_dir / "images" / game_name(game));
      const std::uint64_t count = options.seed_end - options.seed_begin;
      const auto jobs = static_cast<std::uint64_t>(std::clamp<std::uint64_t>(
          static_cast<std::uint64_t>(std::max(1, options.jobs)), 1, std::max<std::uint64_t>(1, count)));
      std::vector<std::vector<std::string>> chunks(jobs);
      const std::size_t first = written_frames.size();
      written_frames.resize(first + jobs);
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::uint64_t> over(jobs, 0);
      auto work = [&](std::uint64_t w) {
        const std::uint64_t lo = options.seed_begin + count * w / jobs;
        const std::uint64_t hi = options.seed_begin + count * (w + 1) / jobs;
        try {
          for (std::uint64_t s = lo; s < hi; ++s) {
            chunks[w].push_back(export_record(game, Seed{s}, options, out_dir, &written_frames[first + w], &over[w]));
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> threads;
        for (std::uint64_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
      }
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }

      GameManifest gm{game, std::string(game_name(game)) + ".jsonl", count, 0, 0};
      std::string text;
      for (std::uint64_t w = 0; w < jobs; ++w) {
        for (const auto& line : chunks[w]) {
          text += line;
          text += '\n';
        }
        gm.images += written_frames[first + w].size();
        gm.over_char_budget += over[w];
      }
      make_file(out_dir / gm.file, text);
      games.push_back({{"game", game_name(game)},
                       {"file", gm.file},
                       {"records", gm.records},
                       {"images", gm.images},
                       {"states_over_char_budget", gm.over_char_budget},
                       {"seed_begin", options.seed_begin},
                       {"seed_end", options.seed_end},
                       {"difficulty", difficulty_json(options.difficulty[game])}});
      manifest.games.push_back(gm);
    }
    ordered_json m;
    m["schema_version"] = kSchemaVersion;
    m["palette_version"] = kPaletteVersion;
    m["state_mode"] = state_mode_name(options.transcript.mode);
    m["image_size"] = images ? ordered_json(options.transcript.image_size) : ordered_json(nullptr);
    m["final_state"] = options.transcript.final_state;
    m["max_state_blocks"] =
        options.transcript.max_state_blocks ? ordered_json(*options.transcript.max_state_blocks) : ordered_json(nullptr);
    m["char_budget"] = options.char_budget;
    m["seed_begin"] = options.seed_begin;
    m["seed_end"] = options.seed_end;
    m["games"] = games;
    manifest.json = m.dump(2) + "\n";
    make_file(out_dir / "manifest.json", manifest.json);
    return manifest;
  } catch (...) {
    std::error_code ec;
    for (const auto& f : created_files) fs::remove(f, ec);
    for (auto it = created_dirs.rbegin(); it != created_dirs.rend(); ++it) fs::remove_all(*it, ec);
    for (const auto& frames : written_frames) {
      for (const auto& f : frames) fs::remove(f, ec);
    }
    throw;
  }
}

}  // namespace puzzles
