// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// fails. `hre_acceptance 3 5` runs a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hre/bench.hpp"
#include "hre/classifier.hpp"
#include "hre/generators.hpp"
#include "hre/match.hpp"
#include "hre/nfa.hpp"
#include "hre/rle.hpp"
#include "hre/setword.hpp"
#include "hre/trie.hpp"
#include "hre/wordbreak.hpp"
#include "hre/wordbreak_fast.hpp"
#include "support/oracle.hpp"

using namespace hre;

namespace {

// Pinned budgets and tolerances.
constexpr double kBudget1 = 180.0;
constexpr double kBudget2 = 60.0;
constexpr double kBudget7 = 600.0;
constexpr double kMaxSlope = 0.5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

InputString substring_or_random(const InputString& text, std::size_t len, Symbol sigma,
                                std::mt19937_64& rng, double p_sub) {
  if (len <= text.size() && std::uniform_real_distribution<double>(0, 1)(rng) < p_sub) {
    std::size_t at = rng() % (text.size() - len + 1);
    return InputString(text.begin() + static_cast<std::ptrdiff_t>(at),
                       text.begin() + static_cast<std::ptrdiff_t>(at + len));
  }
  return oracle::random_string(len, sigma, rng);
}

// ---- 1 -------------------------------------------------------------------

Outcome word_break_correctness() {
  Outcome o;
  double t0 = now();
  std::mt19937_64 rng(1001);
  const Symbol sigmas[] = {2, 4, 26};
  std::size_t random_count = 0, yes = 0, mismatches = 0;
  for (int it = 0; it < 10000; ++it) {
    Symbol sigma = sigmas[it % 3];
    WordBreakInstance inst;
    std::size_t n = rng() % 2001;
    inst.text = oracle::random_string(n, sigma, rng);
    std::size_t target = 1 + rng() % 2000;
    std::size_t max_len = std::size_t{1} << (1 + rng() % 11);
    // a planted segmentation on some instances, so that yes-answers occur
    if (n > 0 && rng() % 3 == 0) {
      std::size_t at = 0;
      while (at < n) {
        std::size_t len = std::min<std::size_t>(n - at, 1 + rng() % std::min<std::size_t>(max_len, 12));
        if (dictionary_size(inst.dict) + len > target) break;
        inst.dict.emplace_back(inst.text.begin() + static_cast<std::ptrdiff_t>(at),
                               inst.text.begin() + static_cast<std::ptrdiff_t>(at + len));
        at += len;
      }
    }
    for (;;) {
      std::size_t len = 1 + rng() % max_len;
      if (dictionary_size(inst.dict) + len > target) break;
      inst.dict.push_back(substring_or_random(inst.text, len, sigma, rng, 0.7));
    }
    auto want = wordbreak_dp(normalize(inst));
    auto got = wordbreak_fast(inst, {JumpMethod::Auto, true});
    bool ok = got.answer == want.answer && got.T == want.T;
    if (it % 10 == 0) {
      // the forced methods on a tenth of the instances
      ok = ok && wordbreak_fast(inst, {JumpMethod::Q2, false}).T == want.T;
      ok = ok && wordbreak_fast(inst, {JumpMethod::Sumset, false}).T == want.T;
    }
    mismatches += !ok;
    yes += want.answer;
    ++random_count;
  }
  std::size_t clique_count = 0, clique_yes = 0, clique_bad = 0;
  const double probs[] = {0.3, 0.5, 0.8};
  for (std::uint64_t seed = 0; seed < 210; ++seed) {
    std::size_t n = 4 + seed % 9;
    auto g = random_graph(n, probs[seed % 3], seed);
    auto inst = gen_clique_wordbreak(g, 4);
    bool truth = brute_force_clique(g, 4);
    bool dp = wordbreak_dp(normalize(inst)).answer;
    bool fast = wordbreak_fast(inst, {JumpMethod::Auto, true}).answer;
    clique_bad += dp != truth || fast != truth;
    clique_yes += truth;
    ++clique_count;
  }
  double secs = now() - t0;
  o.pass = mismatches == 0 && clique_bad == 0 && secs < kBudget1;
  o.detail = std::to_string(random_count) + " random (" + std::to_string(yes) + " yes), " +
             std::to_string(mismatches) + " mismatches; " + std::to_string(clique_count) +
             " clique (" + std::to_string(clique_yes) + " yes), " + std::to_string(clique_bad) +
             " mismatches; " + fmt("%.1fs", secs) + " of " + fmt("%.0fs", kBudget1);
  return o;
}

// ---- 2 -------------------------------------------------------------------

Outcome jump_query_equivalence() {
  Outcome o;
  double t0 = now();
  std::mt19937_64 rng(2002);
  std::size_t queries = 0, bad = 0, instances = 0, with_blocks = 0;
  for (std::size_t q : {1, 2, 4, 8}) {
    std::size_t count = q == 8 ? 16 : 400;
    for (std::size_t c = 0; c < count; ++c) {
      WordBreakInstance inst;
      std::size_t n = q == 8 ? 16 + rng() % 7 : q + rng() % (33 - q);
      inst.text = oracle::random_string(n, 2, rng);
      std::size_t k = 1 + rng() % 5;
      for (std::size_t w = 0; w < k; ++w) {
        std::size_t len = q + rng() % std::min(q, n - q + 1);
        inst.dict.push_back(substring_or_random(inst.text, len, 2, rng, 0.8));
      }
      inst = normalize(inst);
      // natural lambda, then forced small lambdas so that blocks exist
      std::size_t lambda = c % 4 == 0 ? 0 : c % 4;
      auto buckets = split_buckets(inst.dict, n, false, lambda);
      std::size_t b = 0;
      while (b < buckets.size() && buckets[b].q != q) ++b;
      if (b == buckets.size()) continue;
      ++instances;
      with_blocks += !buckets[b].packing.blocks.empty();
      auto stats = compute_match_stats(inst.text, buckets, false);
      std::size_t m = dictionary_size(inst.dict);
      for (std::size_t x = 0; x <= n; ++x) {
        std::size_t lo = x + 1 >= 2 * q ? x + 1 - 2 * q : 0;
        std::size_t width = x - lo + 1;
        for (std::size_t mask = 0; mask < (std::size_t{1} << width); ++mask) {
          IndexSet S(n + 1);
          for (std::size_t k2 = 0; k2 < width; ++k2)
            if (mask >> k2 & 1) S.insert(lo + k2);
          auto want = jump_bruteforce(inst, q, x, S);
          auto a = jump_query(inst.text, buckets, stats, b, x, S, JumpMethod::Q2, m);
          auto s = jump_query(inst.text, buckets, stats, b, x, S, JumpMethod::Sumset, m);
          bad += !(a == want) || !(s == want);
          ++queries;
        }
      }
    }
  }
  double secs = now() - t0;
  o.pass = bad == 0 && secs < kBudget2 && with_blocks > 0;
  o.detail = std::to_string(instances) + " instances (" + std::to_string(with_blocks) +
             " with blocks), " + std::to_string(queries) + " (x, S) queries, " +
             std::to_string(bad) + " mismatches; " + fmt("%.1fs", secs) + " of " +
             fmt("%.0fs", kBudget2);
  return o;
}

// ---- 3 -------------------------------------------------------------------

// Returns an empty string when every invariant holds.
std::string check_packing(const MarkedTrie& t, const Packing& p, std::size_t lambda) {
  std::vector<int> owner(t.size(), -1);
  for (std::size_t id = 0; id < p.blocks.size(); ++id) {
    const auto& b = p.blocks[id];
    if (b.empty()) return "empty block";
    if (!t.marked(b.front()) || !t.marked(b.back())) return "unmarked endpoint";
    std::size_t marked = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      auto u = static_cast<std::size_t>(b[k]);
      if (k > 0 && t.parent(b[k]) != b[k - 1]) return "not a downward path";
      if (owner[u] >= 0) return "blocks overlap";
      owner[u] = static_cast<int>(id);
      marked += t.marked(b[k]);
      if (p.block_of[u] != static_cast<int>(id)) return "block_of disagrees";
    }
    if (marked != lambda) return "block holds " + std::to_string(marked) + " marked nodes";
    if (p.root_of[static_cast<std::size_t>(b.front())] != static_cast<int>(id)) return "root_of disagrees";
  }
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (owner[u] < 0 && p.block_of[u] >= 0) return "block_of marks an unpacked node";
    bool top = owner[u] >= 0 && p.blocks[static_cast<std::size_t>(owner[u])].front() ==
                                    static_cast<MarkedTrie::NodeId>(u);
    if (!top && p.root_of[u] >= 0) return "root_of on a non-top node";
  }
  // residual search: a path of unpacked nodes from a marked node up to a
  // marked ancestor that holds lambda marked nodes would be a further block
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (owner[v] >= 0 || !t.marked(static_cast<MarkedTrie::NodeId>(v))) continue;
    std::size_t seen = 0;
    for (auto u = static_cast<MarkedTrie::NodeId>(v); u != MarkedTrie::kNone; u = u == 0 ? MarkedTrie::kNone : t.parent(u)) {
      if (owner[static_cast<std::size_t>(u)] >= 0) break;
      seen += t.marked(u);
      if (seen >= lambda) return "residual path with " + std::to_string(lambda) + " marked nodes";
    }
  }
  return {};
}

Outcome packing_invariants() {
  Outcome o;
  std::mt19937_64 rng(3003);
  std::size_t checked = 0, blocks = 0;
  std::string first_error;
  for (int it = 0; it < 1000; ++it) {
    MarkedTrie t;
    std::size_t nodes = 1 + rng() % 200;
    double p_mark = 0.15 + 0.7 * std::uniform_real_distribution<double>(0, 1)(rng);
    std::vector<Symbol> next_sym(1, 1);
    // biased towards deep tries
    for (std::size_t k = 1; k < nodes; ++k) {
      auto parent = static_cast<MarkedTrie::NodeId>(rng() % 3 == 0 ? rng() % k : k - 1 - rng() % std::min<std::size_t>(k, 3));
      bool mark = std::uniform_real_distribution<double>(0, 1)(rng) < p_mark;
      t.add_child(parent, next_sym[static_cast<std::size_t>(parent)]++, mark);
      next_sym.push_back(1);
    }
    t.finalize();
    for (std::size_t lambda : {1, 2, 3, 5}) {
      auto p = lambda_packing(t, lambda);
      auto err = check_packing(t, p, lambda);
      if (!err.empty() && first_error.empty())
        first_error = err + " (trie " + std::to_string(it) + ", lambda " + std::to_string(lambda) + ")";
      blocks += p.blocks.size();
      ++checked;
    }
  }
  o.pass = first_error.empty();
  o.detail = std::to_string(checked) + " (trie, lambda) pairs, " + std::to_string(blocks) + " blocks" +
             (first_error.empty() ? "" : "; first failure: " + first_error);
  return o;
}

// ---- 4 -------------------------------------------------------------------

std::vector<TypeSeq> subtypes(const TypeSeq& t) {
  std::set<TypeSeq> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << t.size()); ++mask) {
    std::vector<Op> ops;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mask >> i & 1) ops.push_back(t[i]);
    out.insert(TypeSeq(ops));
  }
  return {out.begin(), out.end()};
}

Outcome almost_linear_engines() {
  Outcome o;
  std::mt19937_64 rng(4004);
  std::ostringstream detail;
  bool ok = true;
  for (int family = 0; family < 2; ++family) {
    const TypeSeq& top = family == 0 ? setword_type() : rle_type();
    std::size_t pairs = 0, matched = 0, bad = 0, max_n = 0, max_m = 0, sum_n = 0;
    auto subs = subtypes(top);
    for (const auto& t : subs) {
      for (int k = 0; k < 460; ++k) {
        oracle::RegexShape shape;
        shape.alphabet = static_cast<Symbol>(2 + rng() % 2);
        shape.max_fanout = 1 + rng() % 12;
        shape.leaf_prob = 0.3;
        Regex r = oracle::random_regex(t, rng, shape);
        if (r.leaf_count() > 500) continue;
        InputString s;
        switch (rng() % 3) {
          case 0: s = oracle::random_string(1 + rng() % (rng() % 2 ? 40 : 500), shape.alphabet, rng); break;
          case 1: s = oracle::sample_member(r, rng, 1 + rng() % 200); break;
          default:
            s = oracle::sample_member(r, rng, 1 + rng() % 200);
            if (!s.empty()) s[rng() % s.size()] = static_cast<Symbol>(1 + rng() % shape.alphabet);
        }
        if (s.empty() || s.size() > 500) continue;
        bool want = nfa_match(r, s);
        bool got = family == 0 ? match_setword_groups(compile_setword_groups(r), s, k % 2 ? SetLookup::Sorted : SetLookup::Hash)
                               : match_rle_groups(compile_rle_groups(r), s);
        bad += got != want;
        matched += want;
        max_n = std::max(max_n, s.size());
        max_m = std::max(max_m, r.leaf_count());
        sum_n += s.size();
        ++pairs;
      }
    }
    ok = ok && bad == 0 && pairs >= 5000;
    detail << (family ? "; " : "") << top.pretty() << ": " << subs.size() << " sub-types, " << pairs
           << " pairs (" << matched << " members, mean n " << sum_n / std::max<std::size_t>(pairs, 1)
           << ", max n " << max_n << ", max m " << max_m << "), " << bad << " mismatches";
  }
  o.pass = ok;
  o.detail = detail.str();
  return o;
}

// ---- 5 -------------------------------------------------------------------

// Independent rewriting: every type reachable by the simplification rules,
// applied anywhere in any order.
std::set<TypeSeq> membership_rewrites(const TypeSeq& t) {
  std::set<TypeSeq> seen{t};
  std::deque<TypeSeq> todo{t};
  while (!todo.empty()) {
    auto u = todo.front().ops();
    todo.pop_front();
    std::vector<std::vector<Op>> next;
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
      if (u[i] == u[i + 1]) {
        auto v = u;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        next.push_back(v);
      }
    for (std::size_t i = 0; i + 2 < u.size(); ++i)
      if (u[i] == Op::Plus && u[i + 1] == Op::Union && u[i + 2] == Op::Plus) {
        auto v = u;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i + 2));
        next.push_back(v);
      }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == Op::Star) {
        auto v = u;
        v[i] = Op::Plus;
        next.push_back(v);
      }
      if (u[i] != Op::Plus && u[i] != Op::Union) break;
    }
    for (auto& v : next) {
      TypeSeq tv(v);
      if (seen.insert(tv).second) todo.push_back(tv);
    }
  }
  return seen;
}

std::set<TypeSeq> pm_rewrites(const TypeSeq& t) {
  std::set<TypeSeq> seen{t};
  std::deque<TypeSeq> todo{t};
  while (!todo.empty()) {
    auto u = todo.front().ops();
    todo.pop_front();
    std::vector<std::vector<Op>> next;
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
      if (u[i] == u[i + 1]) {
        auto v = u;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        next.push_back(v);
      }
    if (!u.empty() && u[0] == Op::Plus) next.emplace_back(u.begin() + 1, u.end());
    if (u.size() >= 2 && u[0] == Op::Union && u[1] == Op::Plus) {
      auto v = u;
      v.erase(v.begin() + 1);
      next.push_back(v);
    }
    for (auto& v : next) {
      TypeSeq tv(v);
      if (seen.insert(tv).second) todo.push_back(tv);
    }
  }
  return seen;
}

bool is_subseq(const TypeSeq& a, const TypeSeq& b) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < b.size() && j < a.size(); ++i) j += a[j] == b[i];
  return j == a.size();
}

// One step of the hardness rules, checked from scratch.
bool valid_step(const ReductionStep& s, bool pm) {
  const auto& f = s.from.ops();
  const auto& t = s.to.ops();
  switch (s.kind) {
    case ReductionKind::Prefix:
      return f.size() < t.size() && std::equal(f.begin(), f.end(), t.begin());
    case ReductionKind::InsertUnion:
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != Op::Union) continue;
        auto v = t;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        if (v == f) return true;
      }
      return false;
    case ReductionKind::StarToPlusStar:
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != Op::Star) continue;
        auto v = f;
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), Op::Plus);
        if (v == t) return true;
      }
      return false;
    case ReductionKind::PrependPlus:
      return !pm && !f.empty() && f[0] == Op::Concat && t.size() == f.size() + 1 && t[0] == Op::Plus &&
             std::equal(f.begin(), f.end(), t.begin() + 1);
    case ReductionKind::Simplify:
      return pm ? pm_rewrites(s.to).count(s.from) > 0 : membership_rewrites(s.to).count(s.from) > 0;
  }
  return false;
}

bool chain_ok(const HardnessWitness& w, const TypeSeq& target, const std::vector<TypeSeq>& cores, bool pm) {
  if (std::find(cores.begin(), cores.end(), w.core) == cores.end()) return false;
  TypeSeq cur = w.core;
  for (const auto& st : w.chain) {
    if (st.from != cur || !valid_step(st, pm)) return false;
    cur = st.to;
  }
  return cur == target;
}

Outcome classifier_check() {
  Outcome o;
  const std::vector<TypeSeq> cores = {
      parse_type("o*"),  parse_type("o|o"),  parse_type("o+o"),  parse_type("o|+"),
      parse_type("o+|"), parse_type("+|o+"), parse_type("+|o|"), parse_type("|+|o")};
  const std::vector<TypeSeq> pm_cores = {parse_type("o*"),  parse_type("o|o"), parse_type("o+o"),
                                         parse_type("o|+"), parse_type("o+|"), parse_type("|o|"),
                                         parse_type("|o+")};
  std::size_t types = 0;
  std::map<std::string, std::size_t> tally, pm_tally;
  std::string first_error;
  auto fail = [&](const TypeSeq& t, const std::string& why) {
    if (first_error.empty()) first_error = "\"" + t.str() + "\": " + why;
  };
  for (const auto& t : oracle::all_types(4)) {
    if (t.empty()) continue;
    ++types;
    Classification c;
    try {
      c = classify_membership(t);
    } catch (const std::exception& e) {
      fail(t, std::string("threw ") + e.what());
      continue;
    }
    // the trail replays to a type that no rule can rewrite further
    TypeSeq cur = t;
    for (const auto& st : c.trail) cur = apply_rule(cur, st);
    if (cur != c.simplified) fail(t, "trail does not replay");
    if (!membership_rewrites(t).count(c.simplified)) fail(t, "simplified type not reachable");
    if (membership_rewrites(c.simplified).size() != 1) fail(t, "simplified type is not a fixpoint");

    auto again = classify_membership(c.simplified);
    if (again.verdict != c.verdict || again.engine != c.engine) fail(t, "unstable under simplification");

    const auto& u = c.simplified;
    bool almost = is_subseq(u, parse_type("|+o|")) || is_subseq(u, parse_type("|+o+"));
    bool degenerate = u.size() <= 1 && (u.empty() || u[0] != Op::Concat);
    bool wb = u == parse_type("+|o");
    switch (c.verdict) {
      case Verdict::Trivial:
        if (!almost || !degenerate) fail(t, "Trivial outside the degenerate almost-linear types");
        break;
      case Verdict::AlmostLinear:
        if (!almost || degenerate) fail(t, "AlmostLinear mislabel");
        if (c.engine == Engine::SetWord && !is_subseq(u, parse_type("|+o|"))) fail(t, "setword engine on a non-subtype");
        if (c.engine == Engine::Rle && !is_subseq(u, parse_type("|+o+"))) fail(t, "rle engine on a non-subtype");
        break;
      case Verdict::WordBreak:
        if (!wb) fail(t, "WordBreak mislabel");
        break;
      case Verdict::Hard:
        if (almost || wb) fail(t, "Hard mislabel");
        if (!c.witness || !chain_ok(*c.witness, u, cores, false)) fail(t, "no valid reduction chain to a core type");
        break;
    }
    if (almost != (c.verdict == Verdict::AlmostLinear || c.verdict == Verdict::Trivial)) fail(t, "almost-linear set mismatch");
    if (wb != (c.verdict == Verdict::WordBreak)) fail(t, "WordBreak set mismatch");
    ++tally[to_string(c.verdict)];

    auto p = classify_pattern_matching(t);
    auto pr = pm_rewrites(t);
    if (!pr.count(p.simplified)) fail(t, "pattern-matching simplified type not reachable");
    if (pm_rewrites(p.simplified).size() != 1) fail(t, "pattern-matching simplified type is not a fixpoint");
    auto p2 = classify_pattern_matching(p.simplified);
    if (p2.verdict != p.verdict || p2.algorithm != p.algorithm) fail(t, "pattern-matching verdict unstable");
    const auto& v = p.simplified;
    bool linear = !v.empty() && (v[0] == Op::Star || (v.size() >= 2 && v[0] == Op::Union && v[1] == Op::Star));
    bool near = !linear && (is_subseq(v, parse_type("|o")) || is_subseq(v, parse_type("o|")) ||
                            is_subseq(v, parse_type("o+")));
    PmVerdict want = linear ? PmVerdict::Linear : near ? PmVerdict::NearLinear : PmVerdict::Hard;
    if (p.verdict != want) fail(t, "pattern-matching verdict " + to_string(p.verdict));
    if (p.verdict == PmVerdict::Hard && (!p.witness || !chain_ok(*p.witness, v, pm_cores, true)))
      fail(t, "no valid pattern-matching reduction chain");
    ++pm_tally[to_string(p.verdict)];
  }
  for (const auto& c : cores)
    if (classify_membership(c).verdict != Verdict::Hard) fail(c, "core type not Hard");
  for (const auto& c : pm_cores)
    if (classify_pattern_matching(c).verdict != PmVerdict::Hard) fail(c, "pattern-matching core not Hard");

  std::ostringstream d;
  d << types << " types; membership";
  for (const auto& [k, n] : tally) d << ' ' << k << '=' << n;
  d << "; pattern matching";
  for (const auto& [k, n] : pm_tally) d << ' ' << k << '=' << n;
  if (!first_error.empty()) d << "; first failure: " << first_error;
  o.pass = first_error.empty() && types == 340;
  o.detail = d.str();
  return o;
}

// ---- 6 -------------------------------------------------------------------

Outcome reduction_ground_truth() {
  Outcome o;
  std::ostringstream d;
  bool ok = true;
  for (auto v : {OvVariant::PipePipe, OvVariant::PipePlus, OvVariant::Outer}) {
    std::size_t yes = 0, bad = 0, wrong_type = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      std::mt19937_64 rng(seed * 7919 + 6006);
      std::size_t na = 1 + rng() % 30, nb = 1 + rng() % 30, dim = 1 + rng() % 8;
      double p_one = 0.5 + 0.1 * static_cast<double>(rng() % 5);
      auto inst = random_ov(na, nb, dim, p_one, seed);
      auto red = gen_ov_instance(inst, v);
      wrong_type += infer_type(red.regex) != variant_type(v);
      bool truth = brute_force_ov(inst);
      bad += nfa_match(red.regex, red.text) != truth;
      yes += truth;
    }
    ok = ok && bad == 0 && wrong_type == 0;
    d << (v == OvVariant::PipePipe ? "" : "; ") << to_string(v) << " (" << variant_type(v).pretty()
      << "): 200 seeds, " << yes << " orthogonal, " << bad << " mismatches, " << wrong_type << " type errors";
  }
  o.pass = ok;
  o.detail = d.str();
  return o;
}

// ---- 7 -------------------------------------------------------------------

Outcome scaling() {
  Outcome o;
  double t0 = now();
  const std::size_t n = std::size_t{1} << 17;
  const std::size_t period = 8;
  std::vector<double> ms, t_auto, t_sum;
  bool answers_ok = true;
  std::ostringstream d;
  for (std::size_t m = std::size_t{1} << 10; m <= (std::size_t{1} << 19); m *= 2) {
    auto inst = scaling_instance(n, m, period);
    bool want = n % period == 0;
    bool a = false, s = false;
    double ta = median_seconds(3, [&] { a = wordbreak_fast(inst, {JumpMethod::Auto, true}).answer; });
    double ts = median_seconds(3, [&] { s = wordbreak_fast(inst, {JumpMethod::Sumset, true}).answer; });
    answers_ok = answers_ok && a == want && s == want;
    ms.push_back(static_cast<double>(dictionary_size(inst.dict)));
    t_auto.push_back(ta);
    t_sum.push_back(ts);
  }
  double slope_auto = loglog_slope(ms, t_auto);
  double slope_sum = loglog_slope(ms, t_sum);
  double secs = now() - t0;
  o.pass = answers_ok && slope_auto <= kMaxSlope && slope_auto < slope_sum && secs < kBudget7;
  d << "n=2^17, m=2^10..2^19 (period " << period << "): slope auto " << fmt("%.3f", slope_auto)
    << ", forced sumset " << fmt("%.3f", slope_sum) << " (limit " << fmt("%.2f", kMaxSlope)
    << "); time at max m " << fmt("%.3fs", t_auto.back()) << " vs " << fmt("%.3fs", t_sum.back())
    << (answers_ok ? "" : "; WRONG ANSWER") << "; " << fmt("%.1fs", secs) << " of " << fmt("%.0fs", kBudget7);
  o.detail = d.str();
  return o;
}

// ---- 8 -------------------------------------------------------------------

Outcome matching_statistics() {
  Outcome o;
  std::mt19937_64 rng(8008);
  std::size_t cells = 0, bad = 0, defined = 0;
  for (int it = 0; it < 1000; ++it) {
    Symbol sigma = static_cast<Symbol>(2 + rng() % 3);
    std::size_t n = 1 + rng() % 300;
    WordBreakInstance inst;
    inst.text = oracle::random_string(n, sigma, rng);
    std::size_t k = 1 + rng() % 12;
    for (std::size_t w = 0; w < k; ++w) {
      std::size_t len = 1 + rng() % std::min<std::size_t>(n, 1 + (rng() % 2 ? 8 : 64));
      inst.dict.push_back(substring_or_random(inst.text, len, sigma, rng, 0.6));
    }
    inst = normalize(inst);
    auto buckets = split_buckets(inst.dict, n, false);
    auto ms = compute_match_stats(inst.text, buckets, it % 2 == 0);
    const auto& s = inst.text;
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      const auto& bk = buckets[b];
      for (std::size_t i = 1; i <= n; ++i) {
        // longest l with s[i-l+1..i] a suffix of some word of the bucket
        std::size_t best = 0;
        for (const auto& w : bk.words)
          for (std::size_t l = std::min(w.size(), i); l > best; --l)
            if (std::equal(w.end() - static_cast<std::ptrdiff_t>(l), w.end(),
                           s.begin() + static_cast<std::ptrdiff_t>(i - l))) {
              best = l;
              break;
            }
        std::size_t want_j = best ? i - best + 1 : 0;
        bool ok = ms.j(buckets, b, i) == want_j;
        auto v = ms.v(b, i);
        if (best == 0) {
          ok = ok && v < 0;
        } else if (v < 0 || bk.trie.depth(v) != best) {
          ok = false;
        } else {
          // the root-to-v path spells s[j..i] right to left
          std::size_t p = i - best;
          for (auto u = v; u != 0; u = bk.trie.parent(u)) ok = ok && bk.trie.label(u) == s[p++];
        }
        bad += !ok;
        defined += best > 0;
        ++cells;
      }
    }
  }
  o.pass = bad == 0;
  o.detail = "1000 instances, " + std::to_string(cells) + " (q, i) cells (" + std::to_string(defined) +
             " defined), " + std::to_string(bad) + " mismatches";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"word break: fast equals dp", word_break_correctness},
      {"jump queries: q2, sumset, brute force coincide", jump_query_equivalence},
      {"lambda-packing invariants", packing_invariants},
      {"almost-linear engines equal the NFA", almost_linear_engines},
      {"classifier over all types of length <= 4", classifier_check},
      {"OV reductions equal brute force", reduction_ground_truth},
      {"scaling slope of the fast engine", scaling},
      {"matching statistics equal the double loop", matching_statistics},
  };
  std::set<int> only;
  for (int a = 1; a < argc; ++a) only.insert(std::atoi(argv[a]));
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    int id = static_cast<int>(k + 1);
    if (!only.empty() && !only.count(id)) continue;
    double t0 = now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << "  " << criteria[k].first << "  [" << o.detail
              << "] " << fmt("%.1fs", now() - t0) << std::endl;
  }
  return all ? 0 : 1;
}
