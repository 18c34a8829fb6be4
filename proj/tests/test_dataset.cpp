#include <filesystem>
#include <set>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "listings.hpp"
#include "puzzles/cot.hpp"
#include "puzzles/dataset.hpp"
#include "puzzles/eval.hpp"

using namespace puzzles;
namespace fs = std::filesystem;

namespace {

Episode episode_for(GameId g, std::uint64_t seed) {
  const auto inst = sample(g, Seed{seed}, Difficulty::defaults(g));
  return build_episode(inst, inst.ground_truth);
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("puzzles_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) out[fs::relative(entry.path(), root).string()] = listing::read_file(entry.path().string());
  }
  return out;
}

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("dataset") {
  TEST_CASE("sha256 known answers") {
    CHECK(sha256_hex(bytes_of("abc")) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex({}) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  }

  TEST_CASE("episodes hold one state per action") {
    for (GameId g : kAllGames) {
      const Episode e = episode_for(g, 2);
      CHECK(e.states.size() == e.actions.size());
      CHECK(&state_at(e, 0) == &e.instance.initial);
      EngineState s = e.instance.initial;
      for (std::size_t i = 0; i < e.actions.size(); ++i) {
        s = step(g, s, e.actions[i]).value();
        CHECK(s == e.states[i]);
      }
    }
  }

  TEST_CASE("replaying a wrong solution is a replay mismatch") {
    const auto inst = sample(GameId::sokoban, Seed{0}, Difficulty::defaults(GameId::sokoban));
    Solution bad = inst.ground_truth;
    bad.actions.pop_back();
    CHECK_THROWS_AS(build_episode(inst, bad), PuzzleError);
    try {
      (void)build_episode(inst, bad);
    } catch (const PuzzleError& e) {
      CHECK(e.kind() == ErrorKind::replay_mismatch);
    }
    const auto cert = sample(GameId::mental_rotation_2d, Seed{0}, Difficulty::defaults(GameId::mental_rotation_2d));
    Solution flipped = cert.ground_truth;
    flipped.answer = cert.ground_truth.answer == std::optional<std::string>("yes") ? "no" : "yes";
    flipped.actions.clear();
    CHECK_THROWS_AS(build_episode(cert, flipped), PuzzleError);
  }

  TEST_CASE("mode none has no state blocks") {
    for (GameId g : kAllGames) {
      const Transcript t = make_transcript(episode_for(g, 4), {});
      CHECK(t.body().find("<image>") == std::string::npos);
      CHECK(t.frames.empty());
      CHECK(t.initial_state.empty());
    }
  }

  TEST_CASE("json mode interleaves each action with the state it produced") {
    for (GameId g : kAllGames) {
      const Episode e = episode_for(g, 6);
      TranscriptOptions o;
      o.mode = StateMode::json;
      const Transcript t = make_transcript(e, o);
      CHECK(t.initial_state == emit_state_json(g, e.instance.initial, 0));
      std::string expected;
      for (std::size_t i = 0; i < e.actions.size(); ++i) {
        expected += "<action>" + render_action(e.actions[i]) + "</action>";
        expected += "<image>" + emit_state_json(g, e.states[i], static_cast<int>(i + 1)) + "</image>";
      }
      if (e.answer) expected += *e.answer;
      CHECK(t.body() == expected);
    }
  }

  TEST_CASE("negative certificates are a bare answer") {
    int seen = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Episode e = episode_for(GameId::tangram_certificate, seed);
      if (e.answer != std::optional<std::string>("no")) continue;
      ++seen;
      TranscriptOptions o;
      o.mode = StateMode::image_ref;
      const Transcript t = make_transcript(e, o);
      CHECK(t.body() == "no");
      REQUIRE(t.frames.size() == 1);
      CHECK(t.frames[0].step == 0);
    }
    CHECK(seen > 0);
  }

  TEST_CASE("final state block can be dropped") {
    const Episode e = episode_for(GameId::sokoban, 1);
    TranscriptOptions o;
    o.mode = StateMode::json;
    o.final_state = false;
    const Transcript t = make_transcript(e, o);
    REQUIRE(!t.states.empty());
    CHECK_FALSE(t.states.back().has_value());
    for (std::size_t i = 0; i + 1 < t.states.size(); ++i) CHECK(t.states[i].has_value());
  }

  TEST_CASE("state block subsampling is bounded, sorted and seeded") {
    const Episode e = episode_for(GameId::shape_match_3d, 9);
    const int n = static_cast<int>(e.actions.size());
    REQUIRE(n > 4);
    TranscriptOptions o;
    o.mode = StateMode::json;
    o.max_state_blocks = 3;
    const auto keep = kept_state_blocks(e, n, o);
    CHECK(keep.size() == 3);
    CHECK(std::is_sorted(keep.begin(), keep.end()));
    CHECK(std::set<int>(keep.begin(), keep.end()).size() == 3);
    CHECK(keep == kept_state_blocks(e, n, o));
    const Transcript t = make_transcript(e, o);
    CHECK(std::count_if(t.states.begin(), t.states.end(), [](const auto& s) { return s.has_value(); }) == 3);
    o.max_state_blocks = 100;
    CHECK(kept_state_blocks(e, n, o).size() == static_cast<std::size_t>(n));
  }

  TEST_CASE("image references name the frames on disk") {
    const Episode e = episode_for(GameId::sokoban, 12);
    TranscriptOptions o;
    o.mode = StateMode::image_ref;
    const Transcript t = make_transcript(e, o);
    CHECK(t.initial_state == "images/sokoban/00000012_000.png");
    CHECK(t.frames.size() == e.actions.size() + 1);
    CHECK(t.frames.back().path == "images/sokoban/00000012_" +
                                      std::string(e.actions.size() < 10 ? "00" : "0") + std::to_string(e.actions.size()) + ".png");
    o.image_size = 100;
    CHECK_THROWS_AS(make_transcript(e, o), PuzzleError);
  }

  TEST_CASE("written datasets are complete, consistent and deterministic") {
    const fs::path a = scratch("a");
    const fs::path b = scratch("b");
    ExportOptions o;
    o.games = {GameId::sokoban, GameId::mental_rotation_2d, GameId::tangram};
    o.seed_begin = 10;
    o.seed_end = 22;
    o.transcript.mode = StateMode::image_ref;
    o.transcript.max_state_blocks = 4;
    o.jobs = 1;
    const Manifest ma = write_dataset(o, a);
    o.jobs = 3;
    const Manifest mb = write_dataset(o, b);
    const auto files_a = snapshot(a);
    CHECK(files_a == snapshot(b));
    CHECK(ma.json == mb.json);
    CHECK(ma.json == files_a.at("manifest.json"));

    std::set<std::string> referenced;
    for (const auto& gm : ma.games) {
      const std::string text = files_a.at(gm.file);
      std::uint64_t lines = 0;
      std::uint64_t images = 0;
      std::size_t start = 0;
      while (start < text.size()) {
        const auto end = text.find('\n', start);
        const auto j = nlohmann::json::parse(text.substr(start, end - start));
        start = end + 1;
        ++lines;
        CHECK(j["schema_version"] == kSchemaVersion);
        CHECK(j["game"] == std::string(game_name(gm.game)));
        CHECK(j["seed"] == 9 + lines);
        for (const auto& img : j["images"]) {
          const std::string path = img["path"];
          REQUIRE(files_a.count(path) == 1);
          CHECK(sha256_hex(bytes_of(files_a.at(path))) == img["sha256"]);
          referenced.insert(path);
          ++images;
        }
        CHECK(j["images"].size() <= 5);
      }
      CHECK(lines == 12);
      CHECK(gm.records == 12);
      CHECK(gm.images == images);
    }
    std::set<std::string> on_disk;
    for (const auto& [path, _] : files_a) {
      if (path.rfind("images/", 0) == 0) on_disk.insert(path);
    }
    CHECK(on_disk == referenced);

    const auto manifest = nlohmann::json::parse(ma.json);
    CHECK(manifest["image_size"] == 64);
    CHECK(manifest["state_mode"] == "image_ref");
    CHECK(manifest["games"].size() == 3);
    CHECK(manifest["games"][2]["states_over_char_budget"].get<int>() > 0);
    CHECK(manifest["games"][0]["states_over_char_budget"] == 0);
    fs::remove_all(a);
    fs::remove_all(b);
  }

  TEST_CASE("a failed export leaves nothing behind") {
    const fs::path root = scratch("fail");
    fs::create_directories(root / "rush_hour.jsonl");  // blocks the second game's output file
    ExportOptions o;
    o.games = {GameId::sokoban, GameId::rush_hour};
    o.seed_begin = 0;
    o.seed_end = 3;
    o.transcript.mode = StateMode::image_ref;
    CHECK_THROWS_AS(write_dataset(o, root), PuzzleError);
    std::vector<std::string> left;
    for (const auto& entry : fs::recursive_directory_iterator(root)) left.push_back(fs::relative(entry.path(), root).string());
    CHECK(left == std::vector<std::string>{"rush_hour.jsonl"});
    fs::remove_all(root);
  }

  TEST_CASE("exported transcripts replay to solved verdicts") {
    for (GameId g : kAllGames) {
      for (StateMode mode : {StateMode::none, StateMode::json, StateMode::image_ref}) {
        const Episode e = episode_for(g, 31);
        TranscriptOptions o;
        o.mode = mode;
        CHECK(judge(e.instance, make_transcript(e, o).body()).solved);
      }
    }
  }
}
