#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hre {

/// Alphabet symbol. Ids are opaque; ascii input maps each byte to its code.
using Symbol = std::uint32_t;
using InputString = std::vector<Symbol>;

enum class Op : std::uint8_t { Concat, Union, Star, Plus };

/// ascii spelling used by the type syntax: o | * +
char op_char(Op op);
/// Unicode spelling used in human-readable output: ∘ | ⋆ +
std::string_view op_glyph(Op op);

/// A homogeneous type: the operator carried by each inner level, top first.
class TypeSeq {
 public:
  TypeSeq() = default;
  explicit TypeSeq(std::vector<Op> ops) : ops_(std::move(ops)) {}

  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  Op operator[](std::size_t i) const { return ops_[i]; }
  const std::vector<Op>& ops() const { return ops_; }
  std::vector<Op>& ops() { return ops_; }

  std::string str() const;     // ascii form, e.g. "+|o"
  std::string pretty() const;  // glyph form, e.g. "+|∘"

  friend bool operator==(const TypeSeq&, const TypeSeq&) = default;
  friend auto operator<=>(const TypeSeq& a, const TypeSeq& b) { return a.ops_ <=> b.ops_; }

 private:
  std::vector<Op> ops_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class HeterogeneousLevel : public std::runtime_error {
 public:
  HeterogeneousLevel(std::size_t level, Op first, Op second);
  std::size_t level() const { return level_; }
  Op first() const { return first_; }
  Op second() const { return second_; }

 private:
  std::size_t level_;
  Op first_, second_;
};

/// Parses "o|*+" into a type. Throws ParseError on any other character.
TypeSeq parse_type(std::string_view text);

/// Operator tree with symbol leaves. Nodes live in an arena; ids are indices.
class Regex {
 public:
  using NodeId = std::uint32_t;

  struct Node {
    bool leaf = true;
    Op op = Op::Concat;  // meaningful for inner nodes only
    Symbol sym = 0;      // meaningful for leaves only
    std::vector<NodeId> kids;
  };

  NodeId add_leaf(Symbol s);
  /// Star and Plus take exactly one child, Concat and Union at least one.
  NodeId add_inner(Op op, std::vector<NodeId> kids);
  void set_root(NodeId id) { root_ = id; }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// Number of nodes reachable from the root.
  std::size_t size() const;
  /// Number of leaves reachable from the root.
  std::size_t leaf_count() const;
  /// Nodes reachable from the root, each level left to right (BFS order),
  /// paired with its level (root = 1).
  std::vector<std::pair<NodeId, std::size_t>> levels() const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

enum class SymbolMode { Ascii, Tokens };

/// Grammar:
///   union  := concat ('|' concat)*
///   concat := factor+
///   factor := atom ('*' | '+')?
///   atom   := symbol | '(' union ')'
/// Tokens mode writes symbols as <decimal-id>. Ascii mode takes any other
/// byte as a symbol; '\' escapes the next byte. Whitespace is ignored in
/// both modes.
Regex parse_regex(std::string_view text, SymbolMode mode = SymbolMode::Ascii);

/// Inverse of parse_regex for trees without degree-1 Concat/Union nodes.
std::string render(const Regex& r, SymbolMode mode = SymbolMode::Ascii);

/// Reads off the operator of every inner level. Throws HeterogeneousLevel.
TypeSeq infer_type(const Regex& r);

/// True iff the empty string is in L(r).
bool describes_empty(const Regex& r);

/// Structural equality of the trees below the roots.
bool isomorphic(const Regex& a, const Regex& b);

InputString ascii_symbols(std::string_view text);
/// Parses whitespace-separated decimal ids.
InputString parse_token_string(std::string_view text);
std::string symbols_to_string(const InputString& s, SymbolMode mode);

}  // namespace hre
