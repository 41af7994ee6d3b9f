#pragma once

#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// A regex of type embedded in |+o| or |+o+, read as a union of branches.
/// Each branch is an optionally repeated concatenation of factors; a factor
/// is a symbol set (inner |) or a single symbol, possibly under an inner +.
struct Structure {
  struct Factor {
    std::vector<Symbol> syms;  // one symbol unless it came from an inner |
    bool plus = false;
  };
  struct Branch {
    bool repeat = false;
    std::vector<Factor> factors;
  };
  std::vector<Branch> branches;
  std::vector<Symbol> singles;  // bare leaves at branch level
};

/// Reads r against `tmpl` using the leftmost embedding of infer_type(r).
/// Throws std::invalid_argument if the type does not embed or the tree does
/// not fit the roles.
Structure extract_structure(const Regex& r, const TypeSeq& tmpl);

}  // namespace hre
