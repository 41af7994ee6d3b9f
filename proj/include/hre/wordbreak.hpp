#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hre/index_set.hpp"
#include "hre/regex.hpp"

namespace hre {

/// A text s and a dictionary D. Positions are cut indices: i stands for the
/// prefix s[1..i], so 0 is the empty prefix and n the whole text.
struct WordBreakInstance {
  InputString text;
  std::vector<InputString> dict;
};

/// Dedups the dictionary, drops empty words and words longer than the text.
/// Word order is sorted afterwards.
WordBreakInstance normalize(WordBreakInstance inst);

/// Sum of word lengths.
std::size_t dictionary_size(const std::vector<InputString>& dict);

struct WordBreakResult {
  bool answer = false;
  IndexSet T;  // partitionable prefixes, over [0, n]
};

/// O(nm) dynamic program. Empty text yields true.
WordBreakResult wordbreak_dp(const WordBreakInstance& inst);

/// Words of `dict` with q <= |w| < 2q.
std::vector<InputString> bucket_words(const std::vector<InputString>& dict, std::size_t q);

/// { i : x < i <= min(x+2q, n), some j in S has s[j+1..i] in D_q }, by double
/// loop. S is a set over [0, n].
IndexSet jump_bruteforce(const WordBreakInstance& inst, std::size_t q, std::size_t x,
                         const IndexSet& S);

/// The regex +( | ( w_1, w_2, ... ) ) with each word a concatenation (one-symbol
/// words stay leaves). Requires a non-empty dictionary of non-empty words.
Regex dictionary_regex(const std::vector<InputString>& dict);

/// Inverse of dictionary_regex for any regex of the shape +(|(...)) whose
/// union children are leaves or concatenations of leaves. Empty otherwise.
std::optional<std::vector<InputString>> extract_dictionary(const Regex& r);

/// .wbi format:
///   wbi 1
///   text: <space-separated ids | "quoted ascii">
///   word: <same>
///   ...
WordBreakInstance read_wbi(std::istream& in);
WordBreakInstance read_wbi_file(const std::string& path);
void write_wbi(std::ostream& out, const WordBreakInstance& inst);

}  // namespace hre
