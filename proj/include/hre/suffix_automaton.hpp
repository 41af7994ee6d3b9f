#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Suffix automaton of s. Its suffix-link tree is the suffix tree of
/// reverse(s); link-tree edges are labeled by walking s leftwards.
class SuffixAutomaton {
 public:
  using State = std::int32_t;
  static constexpr State kNone = -1;

  explicit SuffixAutomaton(const InputString& s);

  std::size_t state_count() const { return len_.size(); }
  std::size_t len(State u) const { return static_cast<std::size_t>(len_[u]); }
  State link(State u) const { return link_[u]; }
  /// End index (0-based, inclusive) of the first occurrence of u's strings.
  std::size_t firstpos(State u) const { return static_cast<std::size_t>(firstpos_[u]); }
  /// State whose longest string is s[0, i), for 1 <= i <= n; 0 for i = 0.
  State prefix_state(std::size_t i) const { return prefix_[i]; }

  /// States sorted by len, root first.
  const std::vector<State>& by_len() const { return by_len_; }

  /// A position in the suffix tree of reverse(s): on the edge into `node`, at
  /// string depth `depth` (len(link(node)) < depth <= len(node)), or the root.
  struct Pos {
    State node = 0;
    std::size_t depth = 0;
  };

  /// Extends `p` by one symbol. Returns false if reverse(s) has no such
  /// continuation.
  bool descend(Pos& p, Symbol c) const;

 private:
  State tree_child(State u, Symbol c) const;

  InputString s_;
  std::vector<std::int32_t> len_, link_, firstpos_;
  std::vector<State> prefix_, by_len_;
  std::vector<std::uint32_t> kid_begin_;
  std::vector<std::pair<Symbol, State>> kids_;  // link-tree children, sorted by key
};

}  // namespace hre
