#include "hre/match.hpp"

#include <stdexcept>

#include "hre/nfa.hpp"
#include "hre/rle.hpp"
#include "hre/setword.hpp"
#include "hre/wordbreak_fast.hpp"

namespace hre {

EngineChoice parse_engine_choice(const std::string& name) {
  if (name == "auto") return EngineChoice::Auto;
  if (name == "setword") return EngineChoice::SetWord;
  if (name == "rle") return EngineChoice::Rle;
  if (name == "nfa") return EngineChoice::Nfa;
  throw std::invalid_argument("unknown engine '" + name + "' (auto|setword|rle|nfa)");
}

MatchOutcome match_regex(const Regex& r, const InputString& s, EngineChoice choice) {
  MatchOutcome out;
  out.classification = classify_membership(infer_type(r));
  const auto& cls = out.classification;

  Engine engine = cls.engine;
  switch (choice) {
    case EngineChoice::Auto: break;
    case EngineChoice::Nfa: engine = Engine::Nfa; break;
    case EngineChoice::SetWord:
      if (!is_subsequence(cls.simplified, setword_type()))
        throw std::invalid_argument("setword engine needs a type within |+o|, got " +
                                    cls.simplified.str());
      engine = Engine::SetWord;
      break;
    case EngineChoice::Rle:
      if (!is_subsequence(cls.simplified, rle_type()))
        throw std::invalid_argument("rle engine needs a type within |+o+, got " + cls.simplified.str());
      engine = Engine::Rle;
      break;
  }
  out.engine = engine;

  if (s.empty()) {
    out.matched = describes_empty(r);
    out.decided_by_empty = true;
    return out;
  }
  if (engine == Engine::Nfa) {
    out.matched = nfa_match(r, s);
    return out;
  }

  auto t = transform_regex(r, simplify_type(cls.original), false);
  const Regex& simple = std::get<Regex>(t);
  switch (engine) {
    case Engine::SetWord: out.matched = match_setword_groups(compile_setword_groups(simple), s); break;
    case Engine::Rle: out.matched = match_rle_groups(compile_rle_groups(simple), s); break;
    case Engine::WordBreak: {
      auto dict = extract_dictionary(simple);
      if (!dict) throw std::logic_error("word break regex without dictionary shape");
      out.matched = wordbreak_fast({s, *dict}).answer;
      break;
    }
    case Engine::Nfa: break;
  }
  return out;
}

}  // namespace hre
