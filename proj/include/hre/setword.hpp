#pragma once

#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Union of branches (S_0 S_1 ... S_l) or (S_0 S_1 ... S_l)^+ over symbol
/// sets, plus single symbols.
struct SetWordGroups {
  struct Group {
    bool repeat = false;
    std::vector<std::vector<Symbol>> blocks;  // each sorted, deduplicated, non-empty
  };
  std::vector<Group> groups;
  std::vector<Symbol> singles;  // sorted, deduplicated
};

/// Requires infer_type(r) to be a subsequence of |+o| without inner +.
/// Throws std::invalid_argument otherwise.
SetWordGroups compile_setword_groups(const Regex& r);

enum class SetLookup { Hash, Sorted };

/// Membership for non-empty s. Only block counts dividing |s| are examined;
/// position-class symbol sets are computed once per block count.
bool match_setword_groups(const SetWordGroups& g, const InputString& s,
                          SetLookup lookup = SetLookup::Hash);

}  // namespace hre
