#pragma once

#include <cstdint>
#include <vector>

#include "hre/aho_corasick.hpp"
#include "hre/index_set.hpp"
#include "hre/trie.hpp"
#include "hre/wordbreak.hpp"

namespace hre {

/// Words with q <= |w| < 2q and everything a jump query on them needs.
struct Bucket {
  std::size_t q = 0;
  std::vector<InputString> words;
  AhoCorasick ac;             // forward words
  MarkedTrie trie;            // reversed words
  Packing packing;
  std::vector<IndexSet> block_depths;  // S_B over [0, 2q): marked depths on root..r_B
};

/// round(sqrt((m/q) log2 q)), at least 1; log2 q is taken as 1 for q = 1.
std::size_t lambda_for(std::size_t q, std::size_t m);

/// Auto method choice: q2 iff q <= ceil((m log2 q)^(1/3)), same q = 1 surrogate.
bool prefer_q2(std::size_t q, std::size_t m);

/// Buckets for powers of two q <= min(n, m); empty buckets are omitted.
/// `dict` must be normalized for a text of length n. A nonzero `lambda`
/// replaces lambda_for in every bucket (tests use it to force blocks).
std::vector<Bucket> split_buckets(const std::vector<InputString>& dict, std::size_t n,
                                  bool parallel = true, std::size_t lambda = 0);

/// For every bucket b and cut i in [1, n]: the trie node v(q, i) spelling
/// reverse(s[j..i]) for the minimal 1-based j such that s[j..i] is a suffix
/// of a word of the bucket; -1 when no non-empty such suffix exists.
struct MatchStats {
  std::vector<std::vector<std::int32_t>> node;  // [bucket][i], i in [0, n]

  std::int32_t v(std::size_t b, std::size_t i) const { return node[b][i]; }
  /// 1-based start j(q, i), or 0 for none.
  std::size_t j(const std::vector<Bucket>& buckets, std::size_t b, std::size_t i) const {
    auto u = node[b][i];
    return u < 0 ? 0 : i - buckets[b].trie.depth(u) + 1;
  }
};

/// Rows are filled only for buckets with wanted[b] set (all buckets when
/// `wanted` is empty); other rows stay -1.
MatchStats compute_match_stats(const InputString& text, const std::vector<Bucket>& buckets,
                               bool parallel = true, const std::vector<char>& wanted = {});

enum class JumpMethod { Q2, Sumset, Auto };

/// Answers the jump query (q, x, S) of bucket b. S is a set over [0, n]; only
/// members in [x - 2q + 1, x] are used. Result is a set over [0, n].
IndexSet jump_query(const InputString& text, const std::vector<Bucket>& buckets,
                    const MatchStats& stats, std::size_t b, std::size_t x, const IndexSet& S,
                    JumpMethod method, std::size_t m);

struct FastOptions {
  JumpMethod method = JumpMethod::Auto;
  bool parallel = true;  // OpenMP over buckets during preprocessing
};

/// Partitionable prefixes via jump queries. The instance is normalized
/// internally.
WordBreakResult wordbreak_fast(const WordBreakInstance& inst, const FastOptions& opt = {});

}  // namespace hre
