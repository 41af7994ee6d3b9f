#include "hre/aho_corasick.hpp"

#include <algorithm>
#include <map>

namespace hre {

AhoCorasick::AhoCorasick(const std::vector<InputString>& words) {
  // Build the goto trie with ordered maps, then flatten to CSR in BFS order
  // so that every state's failure target precedes it.
  std::vector<std::map<Symbol, State>> go(1);
  std::vector<std::uint32_t> len(1, 0);
  for (const auto& w : words) {
    State u = 0;
    for (Symbol c : w) {
      auto it = go[u].find(c);
      if (it == go[u].end()) {
        go[u].emplace(c, static_cast<State>(go.size()));
        u = static_cast<State>(go.size());
        go.emplace_back();
        len.push_back(0);
      } else {
        u = it->second;
      }
    }
    if (!w.empty()) len[u] = static_cast<std::uint32_t>(w.size());
  }

  std::vector<State> order{0}, rename(go.size());
  rename[0] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (auto& [c, v] : go[order[h]]) {
      rename[v] = static_cast<State>(order.size());
      order.push_back(v);
    }

  std::size_t N = go.size();
  kid_begin_.assign(N + 1, 0);
  word_len_.assign(N, 0);
  for (std::size_t k = 0; k < N; ++k) {
    State u = order[k];
    kid_begin_[k + 1] = kid_begin_[k] + static_cast<std::uint32_t>(go[u].size());
    for (auto& [c, v] : go[u]) kids_.emplace_back(c, rename[v]);
    word_len_[k] = len[u];
  }

  fail_.assign(N, 0);
  out_.assign(N, kNone);
  for (State u = 0; u < N; ++u) {
    for (auto e = kid_begin_[u]; e < kid_begin_[u + 1]; ++e) {
      auto [c, v] = kids_[e];
      State f = 0;
      if (u != 0) f = step(fail_[u], c);
      fail_[v] = f;
      out_[v] = word_len_[f] ? f : out_[f];
    }
  }
}

AhoCorasick::State AhoCorasick::child(State u, Symbol c) const {
  auto b = kids_.begin() + kid_begin_[u], e = kids_.begin() + kid_begin_[u + 1];
  auto it = std::lower_bound(b, e, c, [](const auto& p, Symbol s) { return p.first < s; });
  return it != e && it->first == c ? it->second : kNone;
}

AhoCorasick::State AhoCorasick::step(State u, Symbol c) const {
  for (;;) {
    State v = child(u, c);
    if (v != kNone) return v;
    if (u == 0) return 0;
    u = fail_[u];
  }
}

std::vector<std::pair<std::size_t, std::size_t>> enumerate_window_matches(
    const AhoCorasick& ac, const InputString& text, std::size_t lo, std::size_t hi) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  ac.scan(text, lo, hi, [&](std::size_t end, std::size_t len) { out.emplace_back(end - len, end); });
  return out;
}

}  // namespace hre
