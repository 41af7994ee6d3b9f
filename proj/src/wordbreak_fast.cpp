#include "hre/wordbreak_fast.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "hre/suffix_automaton.hpp"

namespace hre {

namespace {

double log2_or_one(std::size_t q) { return q <= 1 ? 1.0 : std::log2(static_cast<double>(q)); }

std::int64_t sx(std::size_t v) { return static_cast<std::int64_t>(v); }

Bucket build_bucket(std::size_t q, std::vector<InputString> words, std::size_t lambda) {
  Bucket b;
  b.q = q;
  b.words = std::move(words);
  b.ac = AhoCorasick(b.words);
  std::vector<InputString> rev = b.words;
  for (auto& w : rev) std::reverse(w.begin(), w.end());
  b.trie = MarkedTrie(rev);
  b.packing = lambda_packing(b.trie, lambda);
  for (const auto& block : b.packing.blocks) {
    IndexSet depths(2 * q);
    for (auto u = block.front(); u > 0; u = b.trie.parent(u))
      if (b.trie.marked(u)) depths.insert(b.trie.depth(u));
    b.block_depths.push_back(std::move(depths));
  }
  return b;
}

// S restricted to [x - 2q + 1, x], translated by -(x - 2q + 1) into [0, 2q).
IndexSet window_of(const IndexSet& S, std::int64_t base, std::size_t x, std::size_t q) {
  if (base >= 0) {
    auto w = S.slice(static_cast<std::size_t>(base), x + 1);
    IndexSet out(2 * q);
    out |= w;
    return out;
  }
  IndexSet out(2 * q);
  or_shifted(out, S.slice(0, x + 1), static_cast<std::size_t>(-base));
  return out;
}

template <class Report>
void query_q2(const InputString& text, const Bucket& bk, std::size_t x, const IndexSet& S,
              Report&& report) {
  std::size_t q = bk.q, n = text.size();
  std::size_t lo = x + 1 >= 2 * q ? x + 1 - 2 * q : 0;
  std::size_t hi = std::min(n, x + 2 * q);
  bk.ac.scan(text, lo, hi, [&](std::size_t i, std::size_t len) {
    std::size_t j = i - len;
    if (i > x && j <= x && S.contains(j)) report(i);
  });
}

template <class Report>
void query_sumset(const InputString& text, const Bucket& bk, const std::vector<std::int32_t>& vrow,
                  std::size_t x, const IndexSet& S, Report&& report) {
  std::size_t q = bk.q, n = text.size();
  std::int64_t base = sx(x) - sx(2 * q) + 1;
  std::vector<IndexSet> sums;
  sums.reserve(bk.block_depths.size());
  if (!bk.block_depths.empty()) {
    IndexSet win = window_of(S, base, x, q);
    for (const auto& sb : bk.block_depths) sums.push_back(bool_sumset(win, sb));
  }
  const auto& trie = bk.trie;
  const auto& root_of = bk.packing.root_of;
  std::size_t hi = std::min(n, x + 2 * q);
  for (std::size_t i = x + 1; i <= hi; ++i) {
    auto v = vrow[i];
    if (v < 0) continue;
    for (auto u = trie.lma(v); u != MarkedTrie::kNone; u = trie.lma(trie.parent(u))) {
      if (root_of[u] >= 0) {
        if (sums[root_of[u]].contains(static_cast<std::size_t>(sx(i) - base))) report(i);
        break;
      }
      std::size_t d = trie.depth(u);
      if (d <= i && i - d <= x && S.contains(i - d)) {
        report(i);
        break;
      }
    }
  }
}

template <class Report>
void dispatch(const InputString& text, const std::vector<Bucket>& buckets, const MatchStats& stats,
              std::size_t b, std::size_t x, const IndexSet& S, JumpMethod method, std::size_t m,
              Report&& report) {
  const Bucket& bk = buckets[b];
  bool q2 = method == JumpMethod::Q2 || (method == JumpMethod::Auto && prefer_q2(bk.q, m));
  if (q2)
    query_q2(text, bk, x, S, report);
  else
    query_sumset(text, bk, stats.node[b], x, S, report);
}

}  // namespace

std::size_t lambda_for(std::size_t q, std::size_t m) {
  double v = std::sqrt(static_cast<double>(m) / static_cast<double>(q) * log2_or_one(q));
  auto l = static_cast<std::size_t>(std::llround(v));
  return std::max<std::size_t>(l, 1);
}

bool prefer_q2(std::size_t q, std::size_t m) {
  double t = std::cbrt(static_cast<double>(m) * log2_or_one(q));
  return static_cast<double>(q) <= std::ceil(t);
}

std::vector<Bucket> split_buckets(const std::vector<InputString>& dict, std::size_t n,
                                  bool parallel, std::size_t lambda) {
  std::size_t m = dictionary_size(dict);
  std::vector<std::size_t> qs;
  for (std::size_t q = 1; q <= std::min(n, m); q *= 2) qs.push_back(q);
  std::vector<std::vector<InputString>> parts(qs.size());
  for (const auto& w : dict) {
    if (w.empty()) continue;
    auto k = static_cast<std::size_t>(std::bit_width(w.size()) - 1);
    if (k < parts.size()) parts[k].push_back(w);
  }
  std::vector<Bucket> built(qs.size());
  auto count = static_cast<std::int64_t>(qs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t k = 0; k < count; ++k) {
    auto uk = static_cast<std::size_t>(k);
    if (!parts[uk].empty()) built[uk] = build_bucket(qs[uk], std::move(parts[uk]), lambda ? lambda : lambda_for(qs[uk], m));
  }
  std::vector<Bucket> out;
  for (auto& b : built)
    if (b.q) out.push_back(std::move(b));
  return out;
}

MatchStats compute_match_stats(const InputString& text, const std::vector<Bucket>& buckets,
                               bool parallel, const std::vector<char>& wanted) {
  std::size_t n = text.size();
  MatchStats ms;
  ms.node.assign(buckets.size(), std::vector<std::int32_t>(n + 1, -1));
  if (buckets.empty() || n == 0) return ms;
  SuffixAutomaton sam(text);
  std::size_t N = sam.state_count();
  auto count = static_cast<std::int64_t>(buckets.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t bi = 0; bi < count; ++bi) {
    if (!wanted.empty() && !wanted[static_cast<std::size_t>(bi)]) continue;
    const auto& trie = buckets[static_cast<std::size_t>(bi)].trie;
    // deepest trie node whose locus lies on the edge into each state
    std::vector<std::int32_t> edge_best(N, -1);
    std::vector<std::pair<MarkedTrie::NodeId, SuffixAutomaton::Pos>> stack{{0, {}}};
    while (!stack.empty()) {
      auto [v, pos] = stack.back();
      stack.pop_back();
      if (v != 0) {
        auto& eb = edge_best[static_cast<std::size_t>(pos.node)];
        if (eb < 0 || trie.depth(eb) < trie.depth(v)) eb = v;
      }
      for (auto k = trie.kids_begin(v); k != trie.kids_end(v); ++k) {
        auto p = pos;
        if (sam.descend(p, k->c)) stack.push_back({k->v, p});
      }
    }
    std::vector<std::int32_t> best(N, -1);
    for (auto u : sam.by_len()) {
      if (u == 0) continue;
      auto uu = static_cast<std::size_t>(u);
      best[uu] = edge_best[uu] >= 0 ? edge_best[uu] : best[static_cast<std::size_t>(sam.link(u))];
    }
    auto& row = ms.node[static_cast<std::size_t>(bi)];
    for (std::size_t i = 1; i <= n; ++i) row[i] = best[static_cast<std::size_t>(sam.prefix_state(i))];
  }
  return ms;
}

IndexSet jump_query(const InputString& text, const std::vector<Bucket>& buckets,
                    const MatchStats& stats, std::size_t b, std::size_t x, const IndexSet& S,
                    JumpMethod method, std::size_t m) {
  IndexSet out(text.size() + 1);
  std::size_t q = buckets[b].q;
  std::size_t lo = x + 1 >= 2 * q ? x + 1 - 2 * q : 0;
  IndexSet clipped(text.size() + 1);
  for (std::size_t j = lo; j <= x && j <= text.size(); ++j)
    if (S.contains(j)) clipped.insert(j);
  dispatch(text, buckets, stats, b, x, clipped, method, m, [&](std::size_t i) { out.insert(i); });
  return out;
}

WordBreakResult wordbreak_fast(const WordBreakInstance& raw, const FastOptions& opt) {
  WordBreakInstance inst = normalize(raw);
  const auto& s = inst.text;
  std::size_t n = s.size();
  std::size_t m = dictionary_size(inst.dict);
  WordBreakResult res{false, IndexSet(n + 1)};
  res.T.insert(0);
  auto buckets = split_buckets(inst.dict, n, opt.parallel);
  // rows are needed only where the sumset method will run
  std::vector<char> wanted(buckets.size(), 0);
  for (std::size_t b = 0; b < buckets.size(); ++b)
    wanted[b] = opt.method == JumpMethod::Sumset ||
                (opt.method == JumpMethod::Auto && !prefer_q2(buckets[b].q, m));
  bool need_stats = std::find(wanted.begin(), wanted.end(), 1) != wanted.end();
  MatchStats stats =
      need_stats ? compute_match_stats(s, buckets, opt.parallel, wanted) : MatchStats{};
  if (!need_stats) stats.node.resize(buckets.size());
  auto report = [&](std::size_t i) { res.T.insert(i); };
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t low = x == 0 ? SIZE_MAX : (x & (~x + 1));
    for (std::size_t b = 0; b < buckets.size() && buckets[b].q <= low; ++b) {
      std::size_t q = buckets[b].q;
      std::size_t lo = x + 1 >= 2 * q ? x + 1 - 2 * q : 0;
      if (!res.T.any_in(lo, x + 1)) continue;
      dispatch(s, buckets, stats, b, x, res.T, opt.method, m, report);
    }
  }
  res.answer = res.T.contains(n);
  return res;
}

}  // namespace hre
