#pragma once

#include <string>

#include "hre/classifier.hpp"
#include "hre/regex.hpp"

namespace hre {

enum class EngineChoice { Auto, SetWord, Rle, Nfa };

EngineChoice parse_engine_choice(const std::string& name);  // throws std::invalid_argument

struct MatchOutcome {
  bool matched = false;
  Engine engine = Engine::Nfa;
  Classification classification;
  bool decided_by_empty = false;  // answered from describes_empty alone
};

/// Decides s in L(r). Auto routes by the membership classification: the
/// regex is first rewritten to its simplified type, then handed to the
/// matching engine. Forced engines throw std::invalid_argument when the
/// simplified type does not fit them. The empty string is always answered
/// by describes_empty.
MatchOutcome match_regex(const Regex& r, const InputString& s, EngineChoice choice = EngineChoice::Auto);

}  // namespace hre
