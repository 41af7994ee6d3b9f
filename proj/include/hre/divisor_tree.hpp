#pragma once

#include <cstdint>
#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n);

/// Divisors of N in a tree rooted at N: parent(s) = s * p for the smallest
/// prime p whose exponent in N exceeds its exponent in s.
struct DivisorTree {
  std::size_t N = 0;
  std::vector<std::size_t> divisors;  // top-down order: every parent precedes its children
  std::vector<std::int32_t> parent;   // index into divisors, -1 for the root

  std::int32_t index_of(std::size_t d) const;
};

DivisorTree divisors_tree(std::size_t N);

struct Run {
  Symbol sym;
  std::size_t count;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Residue tables of a run sequence for one divisor s: for j < s, the min
/// and max run length over runs at positions congruent to j, and their common
/// symbol; `clash` is set when two such runs disagree on the symbol.
struct ResidueTable {
  std::vector<std::size_t> alpha, beta;
  std::vector<Symbol> sym;
  bool clash = false;
};

/// Tables for every divisor, aligned with tree.divisors. The root is read
/// off the runs; each other node is folded from its parent.
std::vector<ResidueTable> alpha_beta_tables(const std::vector<Run>& runs, const DivisorTree& tree);

}  // namespace hre
