#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "puzzles/action.hpp"

namespace puzzles {

/// Read-only lowercase word list indexed by sorted letters.
class Dictionary {
 public:
  /// Newline-separated lowercase words; entries outside [a-z]{3,12} are skipped.
  static std::shared_ptr<const Dictionary> from_text(std::string_view text);
  static std::shared_ptr<const Dictionary> from_file(const std::string& path);
  /// The bundled word list.
  static std::shared_ptr<const Dictionary> bundled();

  bool contains(std::string_view word) const;
  /// Number of dictionary words using exactly these letters.
  int anagram_count(std::string_view letters) const;
  /// Words (ascending) of the given length.
  const std::vector<std::string>& words_of_length(std::size_t length) const;
  std::size_t size() const { return size_; }

 private:
  std::unordered_map<std::string, std::vector<std::string>> by_letters_;
  std::vector<std::vector<std::string>> by_length_;
  std::size_t size_ = 0;
};

std::string sorted_letters(std::string_view word);

struct AnagramState {
  std::string letters;
  std::string target;  // hidden
  std::optional<std::string> identified;
  std::shared_ptr<const Dictionary> dictionary;

  bool operator==(const AnagramState& o) const {
    return letters == o.letters && target == o.target && identified == o.identified &&
           dictionary == o.dictionary;
  }
};

Result<AnagramState> anagram_apply(const AnagramState& state, const Action& action);
/// The submitted word is in the dictionary and uses exactly the letters.
bool anagram_is_goal(const AnagramState& state);

/// Minimum transpositions turning `scrambled` into `target`, minimized over
/// assignments of repeated letters. Error when the letter multisets differ.
Result<int> min_swaps(std::string_view scrambled, std::string_view target);

/// Swap sequence of length min_swaps realizing the rearrangement (i < j per pair).
std::vector<Swap> swap_plan(std::string_view scrambled, std::string_view target);

}  // namespace puzzles
