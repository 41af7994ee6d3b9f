#include "hre/regex.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <optional>

namespace hre {

char op_char(Op op) {
  switch (op) {
    case Op::Concat: return 'o';
    case Op::Union: return '|';
    case Op::Star: return '*';
    case Op::Plus: return '+';
  }
  return '?';
}

std::string_view op_glyph(Op op) {
  switch (op) {
    case Op::Concat: return "∘";
    case Op::Union: return "|";
    case Op::Star: return "⋆";
    case Op::Plus: return "+";
  }
  return "?";
}

std::string TypeSeq::str() const {
  std::string out;
  for (Op op : ops_) out.push_back(op_char(op));
  return out;
}

std::string TypeSeq::pretty() const {
  std::string out;
  for (Op op : ops_) out += op_glyph(op);
  return out;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

HeterogeneousLevel::HeterogeneousLevel(std::size_t level, Op first, Op second)
    : std::runtime_error("heterogeneous level " + std::to_string(level) + ": '" + op_char(first) +
                         "' and '" + op_char(second) + "'"),
      level_(level),
      first_(first),
      second_(second) {}

TypeSeq parse_type(std::string_view text) {
  std::vector<Op> ops;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'o': ops.push_back(Op::Concat); break;
      case '|': ops.push_back(Op::Union); break;
      case '*': ops.push_back(Op::Star); break;
      case '+': ops.push_back(Op::Plus); break;
      default: throw ParseError(std::string("invalid type character '") + text[i] + "'", i);
    }
  }
  return TypeSeq(std::move(ops));
}

Regex::NodeId Regex::add_leaf(Symbol s) {
  Node n;
  n.leaf = true;
  n.sym = s;
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

Regex::NodeId Regex::add_inner(Op op, std::vector<NodeId> kids) {
  if (kids.empty()) throw std::invalid_argument("inner node without children");
  if ((op == Op::Star || op == Op::Plus) && kids.size() != 1)
    throw std::invalid_argument("unary operator with more than one child");
  Node n;
  n.leaf = false;
  n.op = op;
  n.kids = std::move(kids);
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::vector<std::pair<Regex::NodeId, std::size_t>> Regex::levels() const {
  std::vector<std::pair<NodeId, std::size_t>> order;
  if (nodes_.empty()) return order;
  order.emplace_back(root_, 1);
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto [id, level] = order[head];
    for (NodeId k : nodes_[id].kids) order.emplace_back(k, level + 1);
  }
  return order;
}

std::size_t Regex::size() const { return levels().size(); }

std::size_t Regex::leaf_count() const {
  std::size_t count = 0;
  for (auto [id, level] : levels()) count += nodes_[id].leaf ? 1 : 0;
  return count;
}

namespace {

enum class Tok { Sym, LParen, RParen, Bar, Star, Plus, End };

struct Token {
  Tok kind;
  Symbol sym = 0;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view text, SymbolMode mode) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    switch (c) {
      case '(': toks.push_back({Tok::LParen, 0, pos}); ++i; continue;
      case ')': toks.push_back({Tok::RParen, 0, pos}); ++i; continue;
      case '|': toks.push_back({Tok::Bar, 0, pos}); ++i; continue;
      case '*': toks.push_back({Tok::Star, 0, pos}); ++i; continue;
      case '+': toks.push_back({Tok::Plus, 0, pos}); ++i; continue;
      default: break;
    }
    if (mode == SymbolMode::Ascii) {
      if (c == '\\') {
        if (i + 1 >= text.size()) throw ParseError("dangling escape", pos);
        toks.push_back({Tok::Sym, static_cast<unsigned char>(text[i + 1]), pos});
        i += 2;
      } else {
        toks.push_back({Tok::Sym, c, pos});
        ++i;
      }
      continue;
    }
    if (c != '<') throw ParseError(std::string("unexpected character '") + text[i] + "'", pos);
    std::size_t close = text.find('>', i);
    if (close == std::string_view::npos) throw ParseError("unterminated symbol token", pos);
    std::uint64_t value = 0;
    auto digits = text.substr(i + 1, close - i - 1);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() ||
        value > std::numeric_limits<Symbol>::max())
      throw ParseError("invalid symbol id", pos);
    toks.push_back({Tok::Sym, static_cast<Symbol>(value), pos});
    i = close + 1;
  }
  toks.push_back({Tok::End, 0, text.size()});
  return toks;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Regex& out) : toks_(std::move(toks)), out_(out) {}

  Regex::NodeId parse_union() {
    std::vector<Regex::NodeId> alts{parse_concat()};
    while (peek().kind == Tok::Bar) {
      ++at_;
      alts.push_back(parse_concat());
    }
    return alts.size() == 1 ? alts.front() : out_.add_inner(Op::Union, std::move(alts));
  }

  const Token& peek() const { return toks_[at_]; }

 private:
  Regex::NodeId parse_concat() {
    std::vector<Regex::NodeId> factors;
    while (peek().kind == Tok::Sym || peek().kind == Tok::LParen) factors.push_back(parse_factor());
    if (factors.empty()) throw ParseError("expected symbol or '('", peek().pos);
    return factors.size() == 1 ? factors.front() : out_.add_inner(Op::Concat, std::move(factors));
  }

  Regex::NodeId parse_factor() {
    Regex::NodeId atom = parse_atom();
    if (peek().kind == Tok::Star || peek().kind == Tok::Plus) {
      Op op = peek().kind == Tok::Star ? Op::Star : Op::Plus;
      ++at_;
      atom = out_.add_inner(op, {atom});
      if (peek().kind == Tok::Star || peek().kind == Tok::Plus)
        throw ParseError("repeated postfix operator; parenthesize the operand", peek().pos);
    }
    return atom;
  }

  Regex::NodeId parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Sym) {
      ++at_;
      return out_.add_leaf(t.sym);
    }
    // caller guarantees LParen
    ++at_;
    Regex::NodeId inner = parse_union();
    if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
    ++at_;
    return inner;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  Regex& out_;
};

void render_symbol(std::string& out, Symbol s, SymbolMode mode) {
  if (mode == SymbolMode::Tokens) {
    out += '<';
    out += std::to_string(s);
    out += '>';
    return;
  }
  char c = static_cast<char>(s);
  if (std::string_view("()|*+\\").find(c) != std::string_view::npos ||
      std::isspace(static_cast<unsigned char>(c)))
    out += '\\';
  out += c;
}

void render_node(const Regex& r, Regex::NodeId id, SymbolMode mode, std::string& out) {
  const auto& n = r.node(id);
  if (n.leaf) {
    render_symbol(out, n.sym, mode);
    return;
  }
  auto child = [&](Regex::NodeId k, bool wrap) {
    if (wrap) out += '(';
    render_node(r, k, mode, out);
    if (wrap) out += ')';
  };
  auto is_op = [&](Regex::NodeId k, std::initializer_list<Op> ops) {
    const auto& c = r.node(k);
    return !c.leaf && std::find(ops.begin(), ops.end(), c.op) != ops.end();
  };
  switch (n.op) {
    case Op::Union:
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) out += '|';
        child(n.kids[i], is_op(n.kids[i], {Op::Union}));
      }
      break;
    case Op::Concat:
      for (Regex::NodeId k : n.kids) child(k, is_op(k, {Op::Union, Op::Concat}));
      break;
    case Op::Star:
    case Op::Plus:
      child(n.kids[0], is_op(n.kids[0], {Op::Union, Op::Concat, Op::Star, Op::Plus}));
      out += n.op == Op::Star ? '*' : '+';
      break;
  }
}

bool describes_empty_at(const Regex& r, Regex::NodeId id) {
  const auto& n = r.node(id);
  if (n.leaf) return false;
  switch (n.op) {
    case Op::Star: return true;
    case Op::Plus: return describes_empty_at(r, n.kids[0]);
    case Op::Union:
      return std::any_of(n.kids.begin(), n.kids.end(),
                         [&](Regex::NodeId k) { return describes_empty_at(r, k); });
    case Op::Concat:
      return std::all_of(n.kids.begin(), n.kids.end(),
                         [&](Regex::NodeId k) { return describes_empty_at(r, k); });
  }
  return false;
}

bool isomorphic_at(const Regex& a, Regex::NodeId x, const Regex& b, Regex::NodeId y) {
  const auto& p = a.node(x);
  const auto& q = b.node(y);
  if (p.leaf != q.leaf) return false;
  if (p.leaf) return p.sym == q.sym;
  if (p.op != q.op || p.kids.size() != q.kids.size()) return false;
  for (std::size_t i = 0; i < p.kids.size(); ++i)
    if (!isomorphic_at(a, p.kids[i], b, q.kids[i])) return false;
  return true;
}

}  // namespace

Regex parse_regex(std::string_view text, SymbolMode mode) {
  auto toks = tokenize(text, mode);
  if (toks.size() == 1) throw ParseError("empty regular expression", 0);
  Regex r;
  Parser p(std::move(toks), r);
  r.set_root(p.parse_union());
  if (p.peek().kind != Tok::End) throw ParseError("unexpected trailing input", p.peek().pos);
  return r;
}

std::string render(const Regex& r, SymbolMode mode) {
  std::string out;
  if (!r.empty()) render_node(r, r.root(), mode, out);
  return out;
}

TypeSeq infer_type(const Regex& r) {
  std::vector<Op> ops;
  for (auto [id, level] : r.levels()) {
    const auto& n = r.node(id);
    if (n.leaf) continue;
    // BFS visits levels in order, so the first inner node of a level is seen
    // before any deeper one.
    if (ops.size() < level) {
      ops.push_back(n.op);
    } else if (ops[level - 1] != n.op) {
      throw HeterogeneousLevel(level, ops[level - 1], n.op);
    }
  }
  return TypeSeq(std::move(ops));
}

bool describes_empty(const Regex& r) { return !r.empty() && describes_empty_at(r, r.root()); }

bool isomorphic(const Regex& a, const Regex& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return isomorphic_at(a, a.root(), b, b.root());
}

InputString ascii_symbols(std::string_view text) {
  InputString out;
  out.reserve(text.size());
  for (char c : text) out.push_back(static_cast<unsigned char>(c));
  return out;
}

InputString parse_token_string(std::string_view text) {
  InputString out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value > std::numeric_limits<Symbol>::max())
      throw ParseError("invalid symbol id", i);
    std::size_t next = static_cast<std::size_t>(end - text.data());
    if (next < text.size() && !std::isspace(static_cast<unsigned char>(text[next])))
      throw ParseError("invalid symbol id", i);
    out.push_back(static_cast<Symbol>(value));
    i = next;
  }
  return out;
}

std::string symbols_to_string(const InputString& s, SymbolMode mode) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (mode == SymbolMode::Ascii) {
      out += static_cast<char>(s[i]);
    } else {
      if (i) out += ' ';
      out += std::to_string(s[i]);
    }
  }
  return out;
}

}  // namespace hre
