#include "hre/classifier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hre {

namespace {

TypeSeq T(std::string_view s) { return parse_type(s); }

bool has_prefix(const TypeSeq& t, const TypeSeq& p) {
  return p.size() <= t.size() && std::equal(p.ops().begin(), p.ops().end(), t.ops().begin());
}

TypeSeq erase_at(const TypeSeq& t, std::size_t i) {
  auto ops = t.ops();
  ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(i));
  return TypeSeq(std::move(ops));
}

std::optional<RuleStep> next_rule(const TypeSeq& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return RuleStep{Rule::CollapseRepeat, i};
  for (std::size_t i = 0; i + 2 < t.size(); ++i)
    if (t[i] == Op::Plus && t[i + 1] == Op::Union && t[i + 2] == Op::Plus)
      return RuleStep{Rule::DropInnerPlus, i};
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == Op::Plus || t[i] == Op::Union) continue;
    if (t[i] == Op::Star) return RuleStep{Rule::PrefixStarToPlus, i};
    break;
  }
  return std::nullopt;
}

// Backward search from `target` through predecessor types until a core type
// is reached. Predecessors are generated by `preds`; BFS gives a shortest chain.
template <class Preds>
std::optional<HardnessWitness> search_core(const TypeSeq& target, const std::vector<TypeSeq>& cores,
                                           Preds preds) {
  auto is_core = [&](const TypeSeq& u) {
    return std::find(cores.begin(), cores.end(), u) != cores.end();
  };
  // parent[u] = (type u reduces to, kind): u is an easier-or-equal predecessor.
  std::map<TypeSeq, std::optional<std::pair<TypeSeq, ReductionKind>>> seen;
  std::deque<TypeSeq> queue{target};
  seen[target] = std::nullopt;
  while (!queue.empty()) {
    TypeSeq u = queue.front();
    queue.pop_front();
    if (is_core(u)) {
      HardnessWitness w{u, {}};
      TypeSeq cur = u;
      while (seen[cur]) {
        auto [next, kind] = *seen[cur];
        w.chain.push_back({cur, next, kind});
        cur = next;
      }
      return w;
    }
    for (auto& [p, kind] : preds(u)) {
      if (p.empty() || seen.count(p)) continue;
      seen[p] = std::make_pair(u, kind);
      queue.push_back(p);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<TypeSeq, ReductionKind>> prefix_and_union_preds(const TypeSeq& u) {
  std::vector<std::pair<TypeSeq, ReductionKind>> out;
  for (std::size_t len = 1; len < u.size(); ++len)
    out.emplace_back(TypeSeq({u.ops().begin(), u.ops().begin() + static_cast<std::ptrdiff_t>(len)}),
                     ReductionKind::Prefix);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] == Op::Union) out.emplace_back(erase_at(u, i), ReductionKind::InsertUnion);
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    if (u[i] == Op::Plus && u[i + 1] == Op::Star)
      out.emplace_back(erase_at(u, i), ReductionKind::StarToPlusStar);
  return out;
}

bool inserted_one(const TypeSeq& from, const TypeSeq& to, Op op) {
  if (to.size() != from.size() + 1) return false;
  for (std::size_t i = 0; i < to.size(); ++i)
    if (to[i] == op && erase_at(to, i) == from) return true;
  return false;
}

bool star_to_plus_star(const TypeSeq& from, const TypeSeq& to) {
  if (to.size() != from.size() + 1) return false;
  for (std::size_t i = 0; i + 1 < to.size(); ++i)
    if (to[i] == Op::Plus && to[i + 1] == Op::Star && erase_at(to, i) == from) return true;
  return false;
}

Regex::NodeId copy_subtree(const Regex& src, Regex::NodeId id, Regex& dst) {
  const auto& n = src.node(id);
  if (n.leaf) return dst.add_leaf(n.sym);
  std::vector<Regex::NodeId> kids;
  kids.reserve(n.kids.size());
  for (auto k : n.kids) kids.push_back(copy_subtree(src, k, dst));
  return dst.add_inner(n.op, std::move(kids));
}

// Removes every inner node at `level` (1-based), attaching its children to
// its parent in order.
Regex::NodeId splice_copy(const Regex& src, Regex::NodeId id, std::size_t lvl, std::size_t level,
                          Regex& dst) {
  const auto& n = src.node(id);
  if (n.leaf) return dst.add_leaf(n.sym);
  std::vector<Regex::NodeId> kids;
  for (auto k : n.kids) {
    const auto& c = src.node(k);
    if (lvl + 1 == level && !c.leaf) {
      for (auto g : c.kids) kids.push_back(splice_copy(src, g, lvl + 2, level, dst));
    } else {
      kids.push_back(splice_copy(src, k, lvl + 1, level, dst));
    }
  }
  return dst.add_inner(n.op, std::move(kids));
}

Regex::NodeId relabel_copy(const Regex& src, Regex::NodeId id, std::size_t lvl, std::size_t level,
                           Op op, Regex& dst) {
  const auto& n = src.node(id);
  if (n.leaf) return dst.add_leaf(n.sym);
  std::vector<Regex::NodeId> kids;
  for (auto k : n.kids) kids.push_back(relabel_copy(src, k, lvl + 1, level, op, dst));
  return dst.add_inner(lvl == level ? op : n.op, std::move(kids));
}

Regex splice_level(const Regex& r, std::size_t level) {
  Regex out;
  // level >= 2 always: rules never delete the top entry.
  out.set_root(splice_copy(r, r.root(), 1, level, out));
  return out;
}

Regex relabel_level(const Regex& r, std::size_t level, Op op) {
  Regex out;
  out.set_root(relabel_copy(r, r.root(), 1, level, op, out));
  return out;
}

}  // namespace

std::string describe(const RuleStep& step) {
  switch (step.rule) {
    case Rule::CollapseRepeat: return "R1 pp->p @" + std::to_string(step.pos + 1);
    case Rule::DropInnerPlus: return "R2 +|+->+| @" + std::to_string(step.pos + 1);
    case Rule::PrefixStarToPlus: return "R3 r*->r+ @" + std::to_string(step.pos + 1);
  }
  return "?";
}

TypeSeq apply_rule(const TypeSeq& t, const RuleStep& step) {
  std::size_t i = step.pos;
  switch (step.rule) {
    case Rule::CollapseRepeat:
      if (i + 1 < t.size() && t[i] == t[i + 1]) return erase_at(t, i + 1);
      break;
    case Rule::DropInnerPlus:
      if (i + 2 < t.size() && t[i] == Op::Plus && t[i + 1] == Op::Union && t[i + 2] == Op::Plus)
        return erase_at(t, i + 2);
      break;
    case Rule::PrefixStarToPlus: {
      bool prefix_ok = i < t.size() && t[i] == Op::Star;
      for (std::size_t k = 0; prefix_ok && k < i; ++k)
        prefix_ok = t[k] == Op::Plus || t[k] == Op::Union;
      if (prefix_ok) {
        auto ops = t.ops();
        ops[i] = Op::Plus;
        return TypeSeq(std::move(ops));
      }
      break;
    }
  }
  throw std::invalid_argument("rule " + describe(step) + " does not apply to " + t.str());
}

Simplification simplify_type(const TypeSeq& t) {
  Simplification s{t, t, {}};
  while (auto step = next_rule(s.simplified)) {
    s.simplified = apply_rule(s.simplified, *step);
    s.trail.push_back(*step);
  }
  return s;
}

bool is_subsequence(const TypeSeq& a, const TypeSeq& b) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < b.size() && j < a.size(); ++i)
    if (a[j] == b[i]) ++j;
  return j == a.size();
}

const TypeSeq& setword_type() {
  static const TypeSeq t = T("|+o|");
  return t;
}
const TypeSeq& rle_type() {
  static const TypeSeq t = T("|+o+");
  return t;
}
const TypeSeq& wordbreak_type() {
  static const TypeSeq t = T("+|o");
  return t;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::AlmostLinear: return "AlmostLinear";
    case Verdict::WordBreak: return "WordBreak";
    case Verdict::Hard: return "Hard";
  }
  return "?";
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Nfa: return "nfa";
    case Engine::SetWord: return "setword";
    case Engine::Rle: return "rle";
    case Engine::WordBreak: return "wordbreak";
  }
  return "?";
}

const std::vector<TypeSeq>& membership_core_types() {
  static const std::vector<TypeSeq> cores = {T("o*"),  T("o|o"),  T("o+o"),  T("o|+"),
                                             T("o+|"), T("+|o+"), T("+|o|"), T("|+|o")};
  return cores;
}

std::optional<HardnessWitness> find_membership_hardness(const TypeSeq& t) {
  return search_core(t, membership_core_types(), [](const TypeSeq& u) {
    auto out = prefix_and_union_preds(u);
    if (u.size() >= 2 && u[0] == Op::Plus && u[1] == Op::Concat)
      out.emplace_back(erase_at(u, 0), ReductionKind::PrependPlus);
    auto simple = simplify_type(u).simplified;
    if (simple != u) out.emplace_back(simple, ReductionKind::Simplify);
    return out;
  });
}

bool valid_membership_reduction(const ReductionStep& s) {
  switch (s.kind) {
    case ReductionKind::Prefix: return s.from.size() < s.to.size() && has_prefix(s.to, s.from);
    case ReductionKind::InsertUnion: return inserted_one(s.from, s.to, Op::Union);
    case ReductionKind::StarToPlusStar: return star_to_plus_star(s.from, s.to);
    case ReductionKind::PrependPlus:
      return !s.from.empty() && s.from[0] == Op::Concat && inserted_one(s.from, s.to, Op::Plus) &&
             s.to[0] == Op::Plus && erase_at(s.to, 0) == s.from;
    case ReductionKind::Simplify: return simplify_type(s.to).simplified == s.from;
  }
  return false;
}

Classification classify_membership(const TypeSeq& t) {
  auto s = simplify_type(t);
  Classification c;
  c.original = t;
  c.simplified = s.simplified;
  c.trail = s.trail;
  const TypeSeq& u = c.simplified;
  bool in_setword = is_subsequence(u, setword_type());
  bool in_rle = is_subsequence(u, rle_type());
  bool has_concat = std::find(u.ops().begin(), u.ops().end(), Op::Concat) != u.ops().end();
  if (u.empty() || (u.size() == 1 && !has_concat)) {
    c.verdict = Verdict::Trivial;
    c.engine = Engine::Nfa;
  } else if (in_setword || in_rle) {
    c.verdict = Verdict::AlmostLinear;
    if (in_rle && (!in_setword || has_concat))
      c.engine = Engine::Rle;
    else
      c.engine = Engine::SetWord;
  } else if (u == wordbreak_type()) {
    c.verdict = Verdict::WordBreak;
    c.engine = Engine::WordBreak;
  } else {
    c.verdict = Verdict::Hard;
    c.engine = Engine::Nfa;
    c.witness = find_membership_hardness(u);
  }
  return c;
}

// ---- pattern matching ----

std::string to_string(PmVerdict v) {
  switch (v) {
    case PmVerdict::Linear: return "Linear";
    case PmVerdict::NearLinear: return "NearLinear";
    case PmVerdict::Hard: return "Hard";
  }
  return "?";
}

std::string to_string(PmAlgorithm a) {
  switch (a) {
    case PmAlgorithm::None: return "none";
    case PmAlgorithm::Dictionary: return "dictionary matching";
    case PmAlgorithm::Superset: return "superset matching";
    case PmAlgorithm::ConcatPlus: return "concat-plus matching";
  }
  return "?";
}

TypeSeq simplify_pattern_matching_type(const TypeSeq& t, std::vector<PmRuleStep>* trail) {
  TypeSeq u = t;
  for (;;) {
    std::optional<PmRuleStep> step;
    for (std::size_t i = 0; i + 1 < u.size() && !step; ++i)
      if (u[i] == u[i + 1]) step = PmRuleStep{PmRule::CollapseRepeat, i};
    if (!step && !u.empty() && u[0] == Op::Plus) step = PmRuleStep{PmRule::DropPrefixPlus, 0};
    if (!step && u.size() >= 2 && u[0] == Op::Union && u[1] == Op::Plus)
      step = PmRuleStep{PmRule::UnionPlusPrefix, 0};
    if (!step) return u;
    switch (step->rule) {
      case PmRule::CollapseRepeat: u = erase_at(u, step->pos + 1); break;
      case PmRule::DropPrefixPlus: u = erase_at(u, 0); break;
      case PmRule::UnionPlusPrefix: u = erase_at(u, 1); break;
    }
    if (trail) trail->push_back(*step);
  }
}

const std::vector<TypeSeq>& pattern_matching_core_types() {
  static const std::vector<TypeSeq> cores = {T("o*"),  T("o|o"), T("o+o"), T("o|+"),
                                             T("o+|"), T("|o|"), T("|o+")};
  return cores;
}

std::optional<HardnessWitness> find_pattern_matching_hardness(const TypeSeq& t) {
  return search_core(t, pattern_matching_core_types(), [](const TypeSeq& u) {
    auto out = prefix_and_union_preds(u);
    auto simple = simplify_pattern_matching_type(u);
    if (simple != u) out.emplace_back(simple, ReductionKind::Simplify);
    return out;
  });
}

bool valid_pattern_matching_reduction(const ReductionStep& s) {
  switch (s.kind) {
    case ReductionKind::Prefix: return s.from.size() < s.to.size() && has_prefix(s.to, s.from);
    case ReductionKind::InsertUnion: return inserted_one(s.from, s.to, Op::Union);
    case ReductionKind::StarToPlusStar: return star_to_plus_star(s.from, s.to);
    case ReductionKind::PrependPlus: return false;
    case ReductionKind::Simplify: return simplify_pattern_matching_type(s.to) == s.from;
  }
  return false;
}

PmClassification classify_pattern_matching(const TypeSeq& t) {
  PmClassification c;
  c.original = t;
  c.simplified = simplify_pattern_matching_type(t, &c.trail);
  const TypeSeq& u = c.simplified;
  if (has_prefix(u, T("*")) || has_prefix(u, T("|*"))) {
    c.verdict = PmVerdict::Linear;
  } else if (is_subsequence(u, T("|o"))) {
    c.verdict = PmVerdict::NearLinear;
    c.algorithm = PmAlgorithm::Dictionary;
  } else if (is_subsequence(u, T("o|"))) {
    c.verdict = PmVerdict::NearLinear;
    c.algorithm = PmAlgorithm::Superset;
  } else if (is_subsequence(u, T("o+"))) {
    c.verdict = PmVerdict::NearLinear;
    c.algorithm = PmAlgorithm::ConcatPlus;
  } else {
    c.verdict = PmVerdict::Hard;
    c.witness = find_pattern_matching_hardness(u);
  }
  return c;
}

// ---- regex transformation ----

Regex compact(const Regex& r) {
  Regex out;
  if (!r.empty()) out.set_root(copy_subtree(r, r.root(), out));
  return out;
}

std::variant<Regex, AnswerNow> transform_regex(const Regex& r, const Simplification& s,
                                               bool input_empty) {
  if (infer_type(r) != s.original)
    throw std::invalid_argument("regex type " + infer_type(r).str() + " does not match " +
                                s.original.str());
  Regex cur = compact(r);
  TypeSeq type = s.original;
  for (const RuleStep& step : s.trail) {
    switch (step.rule) {
      case Rule::CollapseRepeat: cur = splice_level(cur, step.pos + 2); break;
      case Rule::DropInnerPlus: cur = splice_level(cur, step.pos + 3); break;
      case Rule::PrefixStarToPlus:
        if (input_empty) return AnswerNow{describes_empty(cur)};
        cur = relabel_level(cur, step.pos + 1, Op::Plus);
        break;
    }
    type = apply_rule(type, step);
  }
  return cur;
}

}  // namespace hre
