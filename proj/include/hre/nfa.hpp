#pragma once

#include <cstdint>
#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Thompson automaton. One start, one accept; ε-edges stored separately from
/// symbol edges. Each state has at most one symbol edge.
struct Nfa {
  using State = std::uint32_t;
  static constexpr State kNone = ~State{0};

  std::size_t states = 0;
  State start = 0;
  State accept = 0;
  std::vector<Symbol> label;  // label[s] valid iff next[s] != kNone
  std::vector<State> next;
  // ε adjacency in CSR form
  std::vector<std::uint32_t> eps_begin;
  std::vector<State> eps_to;

  std::size_t edge_count() const;
};

Nfa thompson_compile(const Regex& r);

/// ε-closure set simulation, O(n * states).
bool nfa_match(const Nfa& nfa, const InputString& s);

/// Convenience: compile and match.
bool nfa_match(const Regex& r, const InputString& s);

}  // namespace hre
