#pragma once

#include <variant>
#include <vector>

#include "hre/divisor_tree.hpp"
#include "hre/regex.hpp"
#include "hre/structure.hpp"

namespace hre {

/// Maximal same-symbol runs of a non-empty string.
std::vector<Run> rle_encode_text(const InputString& s);
InputString rle_expand(const std::vector<Run>& runs);

/// Run of a concatenation of sigma and sigma^+ factors: exactly `count`
/// copies, or at least `count` when some factor in the run carried a +.
struct PatternRun {
  Symbol sym;
  bool at_least;
  std::size_t count;
  friend bool operator==(const PatternRun&, const PatternRun&) = default;
};
using PatternRle = std::vector<PatternRun>;

/// Groups maximal same-symbol factor prefixes. Each factor must hold exactly
/// one symbol.
PatternRle rle_encode_pattern(const std::vector<Structure::Factor>& factors);

struct RleGroups {
  struct Group {
    bool repeat = false;
    PatternRle pattern;
  };
  std::vector<Group> groups;
  std::vector<Symbol> singles;
};

/// Requires infer_type(r) to be a subsequence of |+o+ without inner |.
RleGroups compile_rle_groups(const Regex& r);

struct Reject {};
struct TrivialAnswer {
  bool matched;
};
struct Rotated {
  PatternRle pattern;
  std::vector<Run> text;
};

/// For a repeated pattern whose first and last runs share a symbol: either
/// decides the group outright or rotates the trailing run of both text and
/// pattern to the front so that copies of the pattern no longer merge.
std::variant<Rotated, Reject, TrivialAnswer> normalize_rotation(const PatternRle& pattern,
                                                                const std::vector<Run>& text);

/// Membership for non-empty s.
bool match_rle_groups(const RleGroups& g, const InputString& s);

}  // namespace hre
