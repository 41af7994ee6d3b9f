#include "hre/trie.hpp"

#include <algorithm>
#include <map>

namespace hre {

MarkedTrie::MarkedTrie() {
  parent_.push_back(kNone);
  depth_.push_back(0);
  marked_.push_back(0);
  label_.push_back(0);
}

MarkedTrie::MarkedTrie(const std::vector<InputString>& words) : MarkedTrie() {
  std::map<std::pair<NodeId, Symbol>, NodeId> edge;
  for (const auto& w : words) {
    NodeId u = 0;
    for (Symbol c : w) {
      auto [it, fresh] = edge.try_emplace({u, c}, static_cast<NodeId>(size()));
      if (fresh) add_child(u, c, false);
      u = it->second;
    }
    marked_[u] = 1;
  }
  finalize();
}

MarkedTrie::NodeId MarkedTrie::add_child(NodeId parent, Symbol c, bool marked) {
  parent_.push_back(parent);
  depth_.push_back(depth_[parent] + 1);
  marked_.push_back(marked ? 1 : 0);
  label_.push_back(c);
  return static_cast<NodeId>(size() - 1);
}

void MarkedTrie::finalize() {
  std::size_t N = size();
  kid_begin_.assign(N + 1, 0);
  for (std::size_t v = 1; v < N; ++v) ++kid_begin_[parent_[v] + 1];
  for (std::size_t v = 0; v < N; ++v) kid_begin_[v + 1] += kid_begin_[v];
  kids_.assign(N > 0 ? N - 1 : 0, Child{0, 0});
  std::vector<std::uint32_t> fill(kid_begin_.begin(), kid_begin_.end() - 1);
  for (std::size_t v = 1; v < N; ++v)
    kids_[fill[parent_[v]]++] = Child{label_[v], static_cast<NodeId>(v)};
  for (std::size_t v = 0; v < N; ++v)
    std::sort(kids_.begin() + kid_begin_[v], kids_.begin() + kid_begin_[v + 1],
              [](const Child& a, const Child& b) { return a.c < b.c; });
  // parents are created before their children
  lma_.assign(N, kNone);
  for (std::size_t v = 0; v < N; ++v)
    lma_[v] = marked_[v] ? static_cast<NodeId>(v) : (v ? lma_[parent_[v]] : kNone);
}

MarkedTrie::NodeId MarkedTrie::child(NodeId v, Symbol c) const {
  auto b = kids_begin(v), e = kids_end(v);
  auto it = std::lower_bound(b, e, c, [](const Child& k, Symbol x) { return k.c < x; });
  return it != e && it->c == c ? it->v : kNone;
}

Packing lambda_packing(const MarkedTrie& trie, std::size_t lambda) {
  using NodeId = MarkedTrie::NodeId;
  Packing pk;
  pk.lambda = lambda;
  std::size_t N = trie.size();
  pk.block_of.assign(N, -1);
  pk.root_of.assign(N, -1);
  if (lambda == 0) return pk;
  std::vector<std::uint8_t> visited(N, 0);
  std::vector<NodeId> work{0};
  struct Frame {
    NodeId v;
    const MarkedTrie::Child* next;
    std::size_t marked;  // marked nodes on the path from the subroot to v
  };
  std::vector<Frame> stack;
  while (!work.empty()) {
    NodeId r = work.back();
    work.pop_back();
    stack.clear();
    visited[r] = 1;
    stack.push_back({r, trie.kids_begin(r), trie.marked(r) ? 1u : 0u});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.marked == lambda) {
        std::vector<NodeId> block;
        for (auto& f : stack)
          if (!block.empty() || trie.marked(f.v)) block.push_back(f.v);
        auto id = static_cast<std::int32_t>(pk.blocks.size());
        for (auto v : block) pk.block_of[v] = id;
        pk.root_of[block.front()] = id;
        pk.blocks.push_back(std::move(block));
        for (auto& f : stack)
          for (auto k = trie.kids_begin(f.v); k != trie.kids_end(f.v); ++k)
            if (!visited[k->v]) {
              visited[k->v] = 1;
              work.push_back(k->v);
            }
        break;
      }
      if (top.next == trie.kids_end(top.v)) {
        stack.pop_back();
        continue;
      }
      NodeId c = (top.next++)->v;
      visited[c] = 1;
      std::size_t m = top.marked + (trie.marked(c) ? 1 : 0);
      stack.push_back({c, trie.kids_begin(c), m});
    }
  }
  return pk;
}

}  // namespace hre
