#include "puzzles/anagram.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace puzzles {

namespace detail {
extern const std::string_view kEmbeddedWords;
}

std::string sorted_letters(std::string_view word) {
  std::string s(word);
  std::sort(s.begin(), s.end());
  return s;
}

std::shared_ptr<const Dictionary> Dictionary::from_text(std::string_view text) {
  auto dict = std::make_shared<Dictionary>();
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.size() < 3 || line.size() > 12) continue;
    if (!std::all_of(line.begin(), line.end(), [](char c) { return c >= 'a' && c <= 'z'; })) continue;
    auto& bucket = dict->by_letters_[sorted_letters(line)];
    if (std::find(bucket.begin(), bucket.end(), line) != bucket.end()) continue;
    bucket.emplace_back(line);
    if (dict->by_length_.size() <= line.size()) dict->by_length_.resize(line.size() + 1);
    dict->by_length_[line.size()].emplace_back(line);
    ++dict->size_;
  }
  for (auto& words : dict->by_length_) std::sort(words.begin(), words.end());
  return dict;
}

std::shared_ptr<const Dictionary> Dictionary::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PuzzleError(ErrorKind::io_error, "cannot read dictionary " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str());
}

std::shared_ptr<const Dictionary> Dictionary::bundled() {
  static const std::shared_ptr<const Dictionary> dict = from_text(detail::kEmbeddedWords);
  return dict;
}

bool Dictionary::contains(std::string_view word) const {
  auto it = by_letters_.find(sorted_letters(word));
  if (it == by_letters_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), word) != it->second.end();
}

int Dictionary::anagram_count(std::string_view letters) const {
  auto it = by_letters_.find(sorted_letters(letters));
  return it == by_letters_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& Dictionary::words_of_length(std::size_t length) const {
  static const std::vector<std::string> empty;
  return length < by_length_.size() ? by_length_[length] : empty;
}

Result<AnagramState> anagram_apply(const AnagramState& state, const Action& action) {
  if (const auto* swap = std::get_if<Swap>(&action)) {
    const int n = static_cast<int>(state.letters.size());
    if (swap->i < 0 || swap->j < 0 || swap->i >= n || swap->j >= n) {
      return Error::illegal("index_out_of_range");
    }
    AnagramState next = state;
    std::swap(next.letters[static_cast<std::size_t>(swap->i)],
              next.letters[static_cast<std::size_t>(swap->j)]);
    return next;
  }
  if (const auto* id = std::get_if<Identify>(&action)) {
    AnagramState next = state;
    next.identified = id->text;
    return next;
  }
  return Error::illegal("unsupported_action");
}

bool anagram_is_goal(const AnagramState& state) {
  if (!state.identified || !state.dictionary) return false;
  return sorted_letters(*state.identified) == sorted_letters(state.letters) &&
         state.dictionary->contains(*state.identified);
}

namespace {

int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

// Exhaustive search over assignments of equal letters. Positions already
// holding their target letter stay fixed: a fixed point is a 1-cycle and
// keeping it never lowers the cycle count.
std::vector<int> best_assignment(std::string_view from, std::string_view to) {
  const std::size_t n = from.size();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (from[p] == to[p]) {
      perm[p] = static_cast<int>(p);
      used[p] = true;
    }
  }
  std::vector<int> best;
  int best_cycles = -1;
  std::vector<int> current = perm;
  auto search = [&](auto&& self, std::size_t p) -> void {
    while (p < n && current[p] >= 0) ++p;
    if (p == n) {
      const int cycles = cycle_count(current);
      if (cycles > best_cycles) {
        best_cycles = cycles;
        best = current;
      }
      return;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q] || to[q] != from[p]) continue;
      used[q] = true;
      current[p] = static_cast<int>(q);
      self(self, p + 1);
      current[p] = -1;
      used[q] = false;
    }
  };
  search(search, 0);
  return best;
}

}  // namespace

Result<int> min_swaps(std::string_view scrambled, std::string_view target) {
  if (sorted_letters(scrambled) != sorted_letters(target)) {
    return Error{ErrorKind::invalid_argument, "letter multisets differ", std::nullopt};
  }
  const auto perm = best_assignment(scrambled, target);
  return static_cast<int>(scrambled.size()) - cycle_count(perm);
}

std::vector<Swap> swap_plan(std::string_view scrambled, std::string_view target) {
  if (sorted_letters(scrambled) != sorted_letters(target)) {
    throw PuzzleError(ErrorKind::invalid_argument, "letter multisets differ");
  }
  std::vector<int> dest = best_assignment(scrambled, target);
  std::vector<Swap> plan;
  for (std::size_t i = 0; i < dest.size(); ++i) {
    while (dest[i] != static_cast<int>(i)) {
      const auto j = static_cast<std::size_t>(dest[i]);
      plan.push_back({static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))});
      dest[i] = dest[j];
      dest[j] = static_cast<int>(j);
    }
  }
  return plan;
}

}  // namespace puzzles
