#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Membership simplification rules, in the order they are tried.
enum class Rule {
  CollapseRepeat,    // pp -> p
  DropInnerPlus,     // +|+ -> +|
  PrefixStarToPlus,  // r* -> r+ for a prefix r over {+,|}
};

struct RuleStep {
  Rule rule;
  std::size_t pos;  // 0-based index of the first entry the rule rewrites
  friend bool operator==(const RuleStep&, const RuleStep&) = default;
};

std::string describe(const RuleStep& step);

struct Simplification {
  TypeSeq original;
  TypeSeq simplified;
  std::vector<RuleStep> trail;
};

/// Applies the membership rules to a fixpoint. Each round applies the first
/// rule (in enum order) that fires, at its leftmost position.
Simplification simplify_type(const TypeSeq& t);

/// Replays one rule on a type. Throws std::invalid_argument if it does not apply.
TypeSeq apply_rule(const TypeSeq& t, const RuleStep& step);

/// Order-preserving embedding test.
bool is_subsequence(const TypeSeq& a, const TypeSeq& b);

/// The two maximal almost-linear types and Word Break.
const TypeSeq& setword_type();   // |+o|
const TypeSeq& rle_type();       // |+o+
const TypeSeq& wordbreak_type(); // +|o

enum class Verdict { Trivial, AlmostLinear, WordBreak, Hard };
enum class Engine { Nfa, SetWord, Rle, WordBreak };

std::string to_string(Verdict v);
std::string to_string(Engine e);

/// One step of a hardness derivation: `to` has a linear-time reduction from
/// `from`. Kinds mirror the four sufficient conditions plus simplification
/// equivalence.
enum class ReductionKind { Prefix, InsertUnion, StarToPlusStar, PrependPlus, Simplify };

struct ReductionStep {
  TypeSeq from;
  TypeSeq to;
  ReductionKind kind;
};

struct HardnessWitness {
  TypeSeq core;
  std::vector<ReductionStep> chain;  // core -> ... -> queried type
};

struct Classification {
  TypeSeq original;
  TypeSeq simplified;
  std::vector<RuleStep> trail;
  Verdict verdict = Verdict::Trivial;
  Engine engine = Engine::Nfa;
  std::optional<HardnessWitness> witness;  // set for Hard
};

Classification classify_membership(const TypeSeq& t);

/// Core hard types for membership.
const std::vector<TypeSeq>& membership_core_types();

/// Searches backwards from t through the reduction rules (and simplification
/// equivalence) for a core hard type. Empty if none is reachable.
std::optional<HardnessWitness> find_membership_hardness(const TypeSeq& t);

/// True iff `step.to` is obtained from `step.from` by the named rule.
bool valid_membership_reduction(const ReductionStep& step);

// ---- pattern matching ----

enum class PmRule {
  CollapseRepeat,  // pp -> p
  DropPrefixPlus,  // remove prefix +
  UnionPlusPrefix, // prefix |+ -> |
};

struct PmRuleStep {
  PmRule rule;
  std::size_t pos;
};

enum class PmVerdict { Linear, NearLinear, Hard };
enum class PmAlgorithm { None, Dictionary, Superset, ConcatPlus };

std::string to_string(PmVerdict v);
std::string to_string(PmAlgorithm a);

struct PmClassification {
  TypeSeq original;
  TypeSeq simplified;
  std::vector<PmRuleStep> trail;
  PmVerdict verdict = PmVerdict::Hard;
  PmAlgorithm algorithm = PmAlgorithm::None;
  std::optional<HardnessWitness> witness;
};

PmClassification classify_pattern_matching(const TypeSeq& t);
const std::vector<TypeSeq>& pattern_matching_core_types();
std::optional<HardnessWitness> find_pattern_matching_hardness(const TypeSeq& t);
bool valid_pattern_matching_reduction(const ReductionStep& step);
TypeSeq simplify_pattern_matching_type(const TypeSeq& t, std::vector<PmRuleStep>* trail = nullptr);

// ---- regex transformation ----

/// Returned when the input string alone decides membership.
struct AnswerNow {
  bool matched;
};

/// Rewrites r along `s.trail` so that its type becomes `s.simplified`.
/// The language is preserved except that a fired prefix-star rule removes
/// the empty string; when `input_empty` is set that case is answered
/// directly instead. Throws std::invalid_argument if infer_type(r) differs
/// from s.original.
std::variant<Regex, AnswerNow> transform_regex(const Regex& r, const Simplification& s,
                                               bool input_empty);

/// Copies the reachable part of r into a fresh arena.
Regex compact(const Regex& r);

}  // namespace hre
