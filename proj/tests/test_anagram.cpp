#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "puzzles/instance.hpp"

using namespace puzzles;

TEST_SUITE("anagram") {
  TEST_CASE("tca to cat in two swaps") {
    CHECK(oracle::anagram_swaps("tca", "cat") == 2);
    CHECK(min_swaps("tca", "cat").value() == 2);
    AnagramState s{"tca", "cat", std::nullopt, Dictionary::from_text("cat\n")};
    s = anagram_apply(s, Swap{0, 1}).value();
    CHECK(s.letters == "cta");
    s = anagram_apply(s, Swap{1, 2}).value();
    CHECK(s.letters == "cat");
    s = anagram_apply(s, Identify{"cat"}).value();
    CHECK(anagram_is_goal(s));
  }

  TEST_CASE("min_swaps base cases") {
    CHECK(min_swaps("word", "word").value() == 0);
    CHECK(min_swaps("ab", "ba").value() == 1);
    CHECK_FALSE(min_swaps("abc", "abd").ok());
  }

  TEST_CASE("min_swaps agrees with permutation BFS, including repeated letters") {
    Rng rng(11);
    const std::string alphabet = "aabbcde";
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(6));
      std::string target;
      for (int i = 0; i < n; ++i) target += alphabet[rng.below(alphabet.size())];
      std::vector<char> letters(target.begin(), target.end());
      rng.shuffle(letters);
      const std::string scrambled(letters.begin(), letters.end());
      CAPTURE(scrambled);
      CAPTURE(target);
      CHECK(min_swaps(scrambled, target).value() == oracle::anagram_swaps(scrambled, target));
      const auto plan = swap_plan(scrambled, target);
      CHECK(static_cast<int>(plan.size()) == oracle::anagram_swaps(scrambled, target));
      std::string s = scrambled;
      for (const auto& sw : plan) {
        CHECK(sw.i < sw.j);
        std::swap(s[static_cast<std::size_t>(sw.i)], s[static_cast<std::size_t>(sw.j)]);
      }
      CHECK(s == target);
    }
  }

  TEST_CASE("distinct letters: swaps equal length minus cycles") {
    std::string s = "abcdefg";
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<char> v(s.begin(), s.end());
      rng.shuffle(v);
      const std::string p(v.begin(), v.end());
      std::vector<bool> seen(7, false);
      int cycles = 0;
      for (int i = 0; i < 7; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)] - 'a') seen[static_cast<std::size_t>(j)] = true;
      }
      CHECK(min_swaps(p, s).value() == 7 - cycles);
    }
  }

  TEST_CASE("swap bounds and identity") {
    AnagramState s{"abc", "abc", std::nullopt, Dictionary::from_text("abc\n")};
    CHECK(anagram_apply(s, Swap{0, 0}).value() == s);
    CHECK_FALSE(anagram_apply(s, Swap{0, 3}).ok());
    CHECK_FALSE(anagram_apply(s, Swap{-1, 1}).ok());
  }

  TEST_CASE("any dictionary anagram is accepted") {
    const auto dict = Dictionary::from_text("listen\nsilent\nenlist\nother\n");
    AnagramState s{"tnelis", "listen", std::nullopt, dict};
    CHECK(anagram_is_goal(anagram_apply(s, Identify{"silent"}).value()));
    CHECK(anagram_is_goal(anagram_apply(s, Identify{"enlist"}).value()));
    CHECK_FALSE(anagram_is_goal(anagram_apply(s, Identify{"tinsel"}).value()));  // not in the dictionary
    CHECK_FALSE(anagram_is_goal(anagram_apply(s, Identify{"other"}).value()));
  }

  TEST_CASE("n_valid equals a dictionary scan") {
    const auto dict = Dictionary::bundled();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto inst = sample(GameId::anagram, Seed{seed}, Difficulty::defaults(GameId::anagram));
      const auto& s = std::get<AnagramState>(inst.initial);
      int scan = 0;
      for (const auto& w : dict->words_of_length(s.letters.size())) scan += sorted_letters(w) == sorted_letters(s.letters) ? 1 : 0;
      CHECK(dict->anagram_count(s.letters) == scan);
      CHECK(scan >= 1);
    }
  }

  TEST_CASE("dictionary filtering") {
    const auto d = Dictionary::from_text("ok\ncat\nCat\nthirteenletters\nab-c\ndog\n");
    CHECK(d->size() == 2);
    CHECK(d->contains("cat"));
    CHECK_FALSE(d->contains("ok"));
  }
}
