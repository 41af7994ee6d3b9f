#include "hre/nfa.hpp"

#include <utility>

namespace hre {

namespace {

class Builder {
 public:
  explicit Builder(const Regex& r) : r_(r) {}

  std::pair<Nfa::State, Nfa::State> build(Regex::NodeId id) {
    const auto& n = r_.node(id);
    if (n.leaf) {
      auto a = fresh(), b = fresh();
      label_[a] = n.sym;
      next_[a] = b;
      return {a, b};
    }
    switch (n.op) {
      case Op::Concat: {
        auto [first_in, cur_out] = build(n.kids[0]);
        for (std::size_t k = 1; k < n.kids.size(); ++k) {
          auto [in, out] = build(n.kids[k]);
          eps(cur_out, in);
          cur_out = out;
        }
        return {first_in, cur_out};
      }
      case Op::Union: {
        auto a = fresh(), b = fresh();
        for (auto k : n.kids) {
          auto [in, out] = build(k);
          eps(a, in);
          eps(out, b);
        }
        return {a, b};
      }
      case Op::Star:
      case Op::Plus: {
        auto a = fresh(), b = fresh();
        auto [in, out] = build(n.kids[0]);
        eps(a, in);
        eps(out, b);
        eps(out, in);
        if (n.op == Op::Star) eps(a, b);
        return {a, b};
      }
    }
    return {0, 0};
  }

  Nfa finish(Nfa::State start, Nfa::State accept) {
    Nfa nfa;
    nfa.states = label_.size();
    nfa.start = start;
    nfa.accept = accept;
    nfa.label = std::move(label_);
    nfa.next = std::move(next_);
    nfa.eps_begin.assign(nfa.states + 1, 0);
    for (auto& e : eps_) ++nfa.eps_begin[e.first + 1];
    for (std::size_t s = 0; s < nfa.states; ++s) nfa.eps_begin[s + 1] += nfa.eps_begin[s];
    nfa.eps_to.resize(eps_.size());
    std::vector<std::uint32_t> fill(nfa.eps_begin.begin(), nfa.eps_begin.end() - 1);
    for (auto& e : eps_) nfa.eps_to[fill[e.first]++] = e.second;
    return nfa;
  }

 private:
  Nfa::State fresh() {
    label_.push_back(0);
    next_.push_back(Nfa::kNone);
    return static_cast<Nfa::State>(label_.size() - 1);
  }
  void eps(Nfa::State a, Nfa::State b) { eps_.emplace_back(a, b); }

  const Regex& r_;
  std::vector<Symbol> label_;
  std::vector<Nfa::State> next_;
  std::vector<std::pair<Nfa::State, Nfa::State>> eps_;
};

// Adds the ε-closure of s to `set`, using mark[] == gen as the membership test.
void close(const Nfa& nfa, Nfa::State s, std::vector<std::uint32_t>& mark, std::uint32_t gen,
           std::vector<Nfa::State>& set, std::vector<Nfa::State>& stack) {
  if (mark[s] == gen) return;
  mark[s] = gen;
  stack.push_back(s);
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    set.push_back(u);
    for (auto e = nfa.eps_begin[u]; e < nfa.eps_begin[u + 1]; ++e) {
      auto v = nfa.eps_to[e];
      if (mark[v] != gen) {
        mark[v] = gen;
        stack.push_back(v);
      }
    }
  }
}

}  // namespace

std::size_t Nfa::edge_count() const {
  std::size_t labeled = 0;
  for (auto n : next) labeled += n != kNone;
  return labeled + eps_to.size();
}

Nfa thompson_compile(const Regex& r) {
  Builder b(r);
  auto [in, out] = b.build(r.root());
  return b.finish(in, out);
}

bool nfa_match(const Nfa& nfa, const InputString& s) {
  std::vector<std::uint32_t> mark(nfa.states, 0);
  std::vector<Nfa::State> cur, nxt, stack;
  std::uint32_t gen = 1;
  close(nfa, nfa.start, mark, gen, cur, stack);
  for (Symbol c : s) {
    ++gen;
    nxt.clear();
    for (auto u : cur)
      if (nfa.next[u] != Nfa::kNone && nfa.label[u] == c)
        close(nfa, nfa.next[u], mark, gen, nxt, stack);
    std::swap(cur, nxt);
    if (cur.empty()) return false;
  }
  return mark[nfa.accept] == gen;
}

bool nfa_match(const Regex& r, const InputString& s) { return nfa_match(thompson_compile(r), s); }

}  // namespace hre
