#pragma once

#include <cstdint>
#include <vector>

#include "hre/regex.hpp"

namespace hre {

/// Trie with marked nodes. Node 0 is the root; children are stored after
/// construction in CSR form, in increasing symbol order.
class MarkedTrie {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNone = -1;

  MarkedTrie();
  /// Inserts every word (as given) and marks its end node.
  explicit MarkedTrie(const std::vector<InputString>& words);

  /// Incremental construction for tests: add a child of `parent`.
  NodeId add_child(NodeId parent, Symbol c, bool marked);
  /// Must be called after the last add_child.
  void finalize();

  std::size_t size() const { return parent_.size(); }
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::size_t depth(NodeId v) const { return depth_[v]; }
  bool marked(NodeId v) const { return marked_[v]; }
  Symbol label(NodeId v) const { return label_[v]; }
  /// Lowest marked ancestor of v, v itself included; kNone if none.
  NodeId lma(NodeId v) const { return lma_[v]; }

  struct Child {
    Symbol c;
    NodeId v;
  };
  const Child* kids_begin(NodeId v) const { return kids_.data() + kid_begin_[v]; }
  const Child* kids_end(NodeId v) const { return kids_.data() + kid_begin_[v + 1]; }
  NodeId child(NodeId v, Symbol c) const;

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint8_t> marked_;
  std::vector<Symbol> label_;
  std::vector<NodeId> lma_;
  std::vector<std::uint32_t> kid_begin_;
  std::vector<Child> kids_;
};

/// A family of disjoint downward paths, each holding exactly lambda marked
/// nodes with marked endpoints. Blocks list nodes from top to bottom.
struct Packing {
  std::size_t lambda = 0;
  std::vector<std::vector<MarkedTrie::NodeId>> blocks;
  std::vector<std::int32_t> block_of;  // per node, -1 if unpacked
  std::vector<std::int32_t> root_of;   // per node, block id if it is the block's top node, else -1
};

/// Maximal lambda-packing, built greedily by DFS in O(|trie|).
Packing lambda_packing(const MarkedTrie& trie, std::size_t lambda);

}  // namespace hre
