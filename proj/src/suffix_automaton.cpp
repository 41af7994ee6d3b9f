#include "hre/suffix_automaton.hpp"

#include <algorithm>

namespace hre {

SuffixAutomaton::SuffixAutomaton(const InputString& s) : s_(s) {
  std::size_t n = s.size();
  std::vector<std::map<Symbol, State>> next;
  next.reserve(2 * n + 1);
  len_.reserve(2 * n + 1);
  auto make = [&](std::int32_t l, std::int32_t lk, std::int32_t fp) {
    len_.push_back(l);
    link_.push_back(lk);
    firstpos_.push_back(fp);
    next.emplace_back();
    return static_cast<State>(len_.size() - 1);
  };
  make(0, kNone, -1);
  prefix_.assign(n + 1, 0);
  State last = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Symbol c = s[i];
    State cur = make(len_[last] + 1, 0, static_cast<std::int32_t>(i));
    State p = last;
    while (p != kNone && !next[p].count(c)) {
      next[p][c] = cur;
      p = link_[p];
    }
    if (p != kNone) {
      State q = next[p][c];
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        State clone = make(len_[p] + 1, link_[q], firstpos_[q]);
        next[clone] = next[q];
        while (p != kNone) {
          auto it = next[p].find(c);
          if (it == next[p].end() || it->second != q) break;
          it->second = clone;
          p = link_[p];
        }
        link_[q] = link_[cur] = clone;
      }
    }
    last = cur;
    prefix_[i + 1] = cur;
  }

  std::size_t N = len_.size();
  // counting sort by len
  std::vector<std::uint32_t> cnt(n + 2, 0);
  for (auto l : len_) ++cnt[static_cast<std::size_t>(l) + 1];
  for (std::size_t k = 1; k < cnt.size(); ++k) cnt[k] += cnt[k - 1];
  by_len_.resize(N);
  for (std::size_t u = 0; u < N; ++u)
    by_len_[cnt[static_cast<std::size_t>(len_[u])]++] = static_cast<State>(u);

  std::vector<std::pair<State, std::pair<Symbol, State>>> edges;
  edges.reserve(N);
  for (std::size_t w = 1; w < N; ++w) {
    State parent = link_[w];
    Symbol key = s[static_cast<std::size_t>(firstpos_[w] - len_[parent])];
    edges.push_back({parent, {key, static_cast<State>(w)}});
  }
  std::sort(edges.begin(), edges.end());
  kid_begin_.assign(N + 1, 0);
  for (auto& e : edges) ++kid_begin_[static_cast<std::size_t>(e.first) + 1];
  for (std::size_t u = 0; u < N; ++u) kid_begin_[u + 1] += kid_begin_[u];
  kids_.reserve(edges.size());
  for (auto& e : edges) kids_.push_back(e.second);
}

SuffixAutomaton::State SuffixAutomaton::tree_child(State u, Symbol c) const {
  auto b = kids_.begin() + kid_begin_[static_cast<std::size_t>(u)];
  auto e = kids_.begin() + kid_begin_[static_cast<std::size_t>(u) + 1];
  auto it = std::lower_bound(b, e, c, [](const auto& p, Symbol x) { return p.first < x; });
  return it != e && it->first == c ? it->second : kNone;
}

bool SuffixAutomaton::descend(Pos& p, Symbol c) const {
  if (p.depth < len(p.node)) {
    if (s_[firstpos(p.node) - p.depth] != c) return false;
    ++p.depth;
    return true;
  }
  State w = tree_child(p.node, c);
  if (w == kNone) return false;
  p.node = w;
  ++p.depth;
  return true;
}

}  // namespace hre
