#include "hre/generators.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hre {

InputString encode_units(const std::vector<InputString>& units, int offset) {
  InputString out;
  for (const auto& u : units) {
    if (offset == 0) out.push_back(sym::kAlpha);
    out.insert(out.end(), u.begin(), u.end());
    out.push_back(sym::kBeta);
    if (offset != 0) out.push_back(sym::kAlpha);
  }
  return out;
}

InputString encode_wrapped(const InputString& seq, int offset) {
  std::vector<InputString> units;
  for (Symbol c : seq) units.push_back({c});
  return encode_units(units, offset);
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i == j || i == 0 || j == 0 || i > n || j > n) return;
  if (i > j) std::swap(i, j);
  auto e = std::make_pair(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) edges.insert(it, e);
}

std::vector<std::vector<bool>> Graph::adjacency() const {
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (auto [i, j] : edges) adj[i][j] = adj[j][i] = true;
  return adj;
}

Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g;
  g.n = n;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (unit_draw(rng) < edge_prob) g.edges.emplace_back(i, j);
  return g;
}

Graph complete_graph(std::size_t n) { return random_graph(n, 2.0, 0); }

Graph read_edge_list(std::istream& in) {
  Graph g;
  bool have_n = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      std::string tag;
      if (!(ls >> tag >> g.n) || tag != "n")
        throw std::runtime_error("edge list line " + std::to_string(lineno) + ": expected 'n <count>'");
      have_n = true;
      continue;
    }
    std::size_t i = 0, j = 0;
    if (!(ls >> i >> j) || i == 0 || j == 0 || i > g.n || j > g.n)
      throw std::runtime_error("edge list line " + std::to_string(lineno) + ": bad edge");
    g.add_edge(i, j);
  }
  if (!have_n) throw std::runtime_error("edge list: missing 'n <count>' header");
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n << '\n';
  for (auto [i, j] : g.edges) out << i << ' ' << j << '\n';
}

std::vector<std::vector<std::size_t>> list_cliques(const Graph& g, std::size_t k) {
  auto adj = g.adjacency();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = from; v <= g.n; ++v) {
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return adj[u][v]; })) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

InputString range(std::size_t from, std::size_t to) {  // node symbols from..to inclusive
  InputString s;
  for (std::size_t v = from; v <= to; ++v) s.push_back(sym::node(v));
  return s;
}

InputString cat(std::initializer_list<InputString> parts) {
  InputString s;
  for (const auto& p : parts) s.insert(s.end(), p.begin(), p.end());
  return s;
}

}  // namespace

std::size_t clique_text_length(std::size_t n, std::size_t k, std::size_t cliques) {
  std::size_t ts = 2 + n + (k - 2) * (n + 3);
  return cliques * 3 * (3 + 2 * ts) + 2;
}

WordBreakInstance gen_clique_wordbreak(const Graph& g, std::size_t k) {
  if (k < 4) throw std::invalid_argument("clique reduction needs k >= 4");
  std::size_t n = g.n;
  const InputString dollar{sym::kDollar}, hash{sym::kHash}, gamma{sym::kGamma};
  WordBreakInstance inst;
  auto& D = inst.dict;
  for (std::size_t i = 1; i <= n; ++i) {
    D.push_back(encode_wrapped(cat({dollar, range(1, i - 1)}), 1));
    D.push_back(encode_wrapped(range(i, n), 1));
  }
  auto adj = g.adjacency();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (!adj[i][j]) continue;
      D.push_back(encode_wrapped(cat({range(i, n), hash, {sym::node(j)}, hash, range(1, i - 1)}), 1));
      D.push_back(encode_wrapped(cat({range(i, n), dollar, gamma, dollar, range(1, j - 1)}), 1));
    }
  InputString skip_syms = range(1, n);
  for (Symbol c : {sym::kDollar, sym::kHash, sym::kGamma, sym::kMu}) skip_syms.push_back(c);
  for (Symbol c : skip_syms) {
    D.push_back({sym::kAlpha, c, sym::kBeta});
    D.push_back({sym::kBeta, sym::kAlpha, c});
  }
  D.push_back({sym::kAlpha, sym::kMu, sym::kBeta, sym::kAlpha});
  D.push_back({sym::kDollar, sym::kBeta, sym::kAlpha, sym::kMu});
  D.push_back({sym::kBeta, sym::kMu, sym::kMu});

  for (const auto& S : list_cliques(g, k - 2)) {
    InputString ts = cat({dollar, range(1, n)});
    for (std::size_t v : S) ts = cat({ts, hash, {sym::node(v)}, hash, range(1, n)});
    ts.push_back(sym::kDollar);
    InputString block = cat({{sym::kMu}, ts, gamma, ts, {sym::kMu}});
    auto enc = encode_wrapped(block, 0);
    inst.text.insert(inst.text.end(), enc.begin(), enc.end());
  }
  inst.text.push_back(sym::kMu);
  inst.text.push_back(sym::kMu);
  return inst;
}

bool brute_force_clique(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  if (g.n > 30) throw std::invalid_argument("brute-force clique search limited to 30 nodes");
  std::vector<std::uint32_t> nbr(g.n, 0);
  for (auto [i, j] : g.edges) {
    nbr[i - 1] |= 1u << (j - 1);
    nbr[j - 1] |= 1u << (i - 1);
  }
  std::uint64_t limit = std::uint64_t{1} << g.n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    bool ok = true;
    for (std::size_t v = 0; v < g.n && ok; ++v)
      if (mask >> v & 1) ok = ((nbr[v] | (1u << v)) & mask) == mask;
    if (ok) return true;
  }
  return false;
}

OvInstance random_ov(std::size_t na, std::size_t nb, std::size_t d, double p_one,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OvInstance inst;
  inst.d = d;
  auto vec = [&] {
    std::vector<std::uint8_t> v(d);
    for (auto& x : v) x = unit_draw(rng) < p_one ? 1 : 0;
    return v;
  };
  for (std::size_t i = 0; i < na; ++i) inst.A.push_back(vec());
  for (std::size_t i = 0; i < nb; ++i) inst.B.push_back(vec());
  return inst;
}

TypeSeq variant_type(OvVariant v) {
  switch (v) {
    case OvVariant::PipePipe: return parse_type("+|o|");
    case OvVariant::PipePlus: return parse_type("+|o+");
    case OvVariant::Outer: return parse_type("|+|o");
  }
  return {};
}

const char* to_string(OvVariant v) {
  switch (v) {
    case OvVariant::PipePipe: return "pipe-pipe";
    case OvVariant::PipePlus: return "pipe-plus";
    case OvVariant::Outer: return "outer";
  }
  return "?";
}

namespace {

Symbol bit(std::uint8_t b) { return b ? sym::kOne : sym::kZero; }

// Appends the offset-1 wrapping of a sequence of factor groups to `kids`:
// each group's factors, then beta, alpha.
void push_wrapped_factors(Regex& r, std::vector<Regex::NodeId>& kids,
                          const std::vector<std::vector<Regex::NodeId>>& groups) {
  for (const auto& g : groups) {
    kids.insert(kids.end(), g.begin(), g.end());
    kids.push_back(r.add_leaf(sym::kBeta));
    kids.push_back(r.add_leaf(sym::kAlpha));
  }
}

Regex::NodeId word(Regex& r, const InputString& w) {
  std::vector<Regex::NodeId> leaves;
  for (Symbol c : w) leaves.push_back(r.add_leaf(c));
  return r.add_inner(Op::Concat, std::move(leaves));
}

// Skip and control words shared by every variant; `skip_syms` are the
// symbols that may be skipped one at a time.
void push_offset_words(Regex& r, std::vector<Regex::NodeId>& alts, const InputString& skip_syms) {
  for (Symbol c : skip_syms) {
    alts.push_back(word(r, {sym::kAlpha, c, sym::kBeta}));
    alts.push_back(word(r, {sym::kBeta, sym::kAlpha, c}));
  }
  alts.push_back(word(r, {sym::kAlpha, sym::kMu, sym::kBeta, sym::kAlpha}));
  alts.push_back(word(r, {sym::kDollar, sym::kBeta, sym::kAlpha, sym::kMu}));
  alts.push_back(word(r, {sym::kBeta, sym::kMu, sym::kMu}));
}

InputString vector_text(const std::vector<std::vector<std::uint8_t>>& A,
                        const std::function<std::vector<InputString>(const std::vector<std::uint8_t>&)>& units) {
  InputString text;
  for (const auto& a : A) {
    std::vector<InputString> u{{sym::kMu}};
    auto mid = units(a);
    u.insert(u.end(), mid.begin(), mid.end());
    u.push_back({sym::kDollar});
    u.push_back({sym::kMu});
    auto enc = encode_units(u, 0);
    text.insert(text.end(), enc.begin(), enc.end());
  }
  text.push_back(sym::kMu);
  text.push_back(sym::kMu);
  return text;
}

}  // namespace

OvReduction gen_ov_instance(const OvInstance& inst, OvVariant variant) {
  OvReduction out;
  Regex& r = out.regex;
  std::size_t d = inst.d;
  if (d == 0) throw std::invalid_argument("vectors of dimension 0");
  auto check_dim = [d](const auto& vs) {
    for (const auto& v : vs)
      if (v.size() != d) throw std::invalid_argument("vectors of mixed dimension");
  };
  check_dim(inst.A);
  check_dim(inst.B);

  switch (variant) {
    case OvVariant::PipePipe: {
      out.text = vector_text(inst.A, [](const auto& a) {
        std::vector<InputString> u;
        for (auto b : a) u.push_back({bit(b)});
        return u;
      });
      std::vector<Regex::NodeId> alts;
      for (const auto& b : inst.B) {
        std::vector<std::vector<Regex::NodeId>> groups;
        for (auto x : b) {
          if (x)
            groups.push_back({r.add_leaf(sym::kZero)});
          else
            groups.push_back({r.add_inner(Op::Union, {r.add_leaf(sym::kZero), r.add_leaf(sym::kOne)})});
        }
        std::vector<Regex::NodeId> kids;
        push_wrapped_factors(r, kids, groups);
        alts.push_back(r.add_inner(Op::Concat, std::move(kids)));
      }
      // bits are skipped through a (0|1) factor so the fourth level always exists
      auto either = [&] { return r.add_inner(Op::Union, {r.add_leaf(sym::kZero), r.add_leaf(sym::kOne)}); };
      alts.push_back(r.add_inner(Op::Concat, {r.add_leaf(sym::kAlpha), either(), r.add_leaf(sym::kBeta)}));
      alts.push_back(r.add_inner(Op::Concat, {r.add_leaf(sym::kBeta), r.add_leaf(sym::kAlpha), either()}));
      push_offset_words(r, alts, {sym::kDollar, sym::kMu});
      r.set_root(r.add_inner(Op::Plus, {r.add_inner(Op::Union, std::move(alts))}));
      break;
    }
    case OvVariant::PipePlus: {
      out.text = vector_text(inst.A, [](const auto& a) {
        std::vector<InputString> u;
        for (auto b : a)
          u.push_back(b ? InputString{sym::kZero, sym::kOne}
                        : InputString{sym::kZero, sym::kZero, sym::kOne});
        return u;
      });
      auto zeros_one = [&] {
        return std::vector<Regex::NodeId>{r.add_inner(Op::Plus, {r.add_leaf(sym::kZero)}),
                                          r.add_leaf(sym::kOne)};
      };
      std::vector<Regex::NodeId> alts;
      for (const auto& b : inst.B) {
        std::vector<std::vector<Regex::NodeId>> groups;
        for (auto x : b) {
          if (x)
            groups.push_back({r.add_leaf(sym::kZero), r.add_leaf(sym::kZero), r.add_leaf(sym::kOne)});
          else
            groups.push_back(zeros_one());
        }
        std::vector<Regex::NodeId> kids;
        push_wrapped_factors(r, kids, groups);
        alts.push_back(r.add_inner(Op::Concat, std::move(kids)));
      }
      // a bit gadget is skipped as one unit; 0+1 covers both gadgets
      {
        std::vector<Regex::NodeId> k1{r.add_leaf(sym::kAlpha)};
        for (auto id : zeros_one()) k1.push_back(id);
        k1.push_back(r.add_leaf(sym::kBeta));
        alts.push_back(r.add_inner(Op::Concat, std::move(k1)));
        std::vector<Regex::NodeId> k2{r.add_leaf(sym::kBeta), r.add_leaf(sym::kAlpha)};
        for (auto id : zeros_one()) k2.push_back(id);
        alts.push_back(r.add_inner(Op::Concat, std::move(k2)));
      }
      push_offset_words(r, alts, {sym::kDollar, sym::kMu});
      r.set_root(r.add_inner(Op::Plus, {r.add_inner(Op::Union, std::move(alts))}));
      break;
    }
    case OvVariant::Outer: {
      out.text = vector_text(inst.A, [](const auto& a) {
        std::vector<InputString> u;
        for (std::size_t i = 0; i < a.size(); ++i) {
          u.push_back({sym::node(i + 1)});
          u.push_back({bit(a[i])});
        }
        return u;
      });
      InputString skip{sym::kZero, sym::kOne, sym::kDollar, sym::kMu};
      for (std::size_t i = 1; i <= d; ++i) skip.push_back(sym::node(i));
      std::vector<Regex::NodeId> per_b;
      for (const auto& b : inst.B) {
        std::vector<Regex::NodeId> alts;
        for (std::size_t i = 0; i < d; ++i) {
          alts.push_back(word(r, encode_wrapped({sym::node(i + 1), sym::kZero}, 1)));
          if (!b[i]) alts.push_back(word(r, encode_wrapped({sym::node(i + 1), sym::kOne}, 1)));
        }
        push_offset_words(r, alts, skip);
        per_b.push_back(r.add_inner(Op::Plus, {r.add_inner(Op::Union, std::move(alts))}));
      }
      if (per_b.empty()) throw std::invalid_argument("outer-union reduction needs a non-empty B");
      r.set_root(r.add_inner(Op::Union, std::move(per_b)));
      break;
    }
  }
  return out;
}

bool brute_force_ov(const OvInstance& inst) {
  for (const auto& a : inst.A)
    for (const auto& b : inst.B) {
      bool orth = true;
      for (std::size_t i = 0; i < inst.d && orth; ++i) orth = !(a[i] && b[i]);
      if (orth) return true;
    }
  return false;
}

}  // namespace hre
