#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Aho-Corasick automaton over 32-bit symbols. Children are kept in sorted
/// arrays; transitions follow failure links on demand.
class AhoCorasick {
 public:
  using State = std::uint32_t;

  AhoCorasick() = default;
  explicit AhoCorasick(const std::vector<InputString>& words);

  std::size_t state_count() const { return fail_.size(); }

  State step(State u, Symbol c) const;

  /// Calls f(end, len) for every occurrence of a word in text[lo, hi); `end`
  /// is the cut just after the occurrence. Cost O((hi - lo) log sigma + #occ).
  template <class F>
  void scan(const InputString& text, std::size_t lo, std::size_t hi, F&& f) const {
    State u = 0;
    for (std::size_t p = lo; p < hi; ++p) {
      u = step(u, text[p]);
      for (State v = word_len_[u] ? u : out_[u]; v != kNone; v = out_[v]) f(p + 1, word_len_[v]);
    }
  }

  static constexpr State kNone = ~State{0};

 private:
  State child(State u, Symbol c) const;

  std::vector<std::uint32_t> kid_begin_;
  std::vector<std::pair<Symbol, State>> kids_;
  std::vector<State> fail_;
  std::vector<State> out_;  // nearest proper suffix state that ends a word
  std::vector<std::uint32_t> word_len_;  // 0 if no word ends here
};

/// Pairs (j, i) of cuts with text[j, i) a dictionary word, for occurrences
/// inside text[lo, hi).
std::vector<std::pair<std::size_t, std::size_t>> enumerate_window_matches(
    const AhoCorasick& ac, const InputString& text, std::size_t lo, std::size_t hi);

}  // namespace hre
