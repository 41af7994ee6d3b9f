#include <doctest.h>

#include <random>

#include "hre/divisor_tree.hpp"
#include "hre/nfa.hpp"
#include "hre/rle.hpp"
#include "hre/setword.hpp"
#include "hre/structure.hpp"
#include "support/oracle.hpp"

using namespace hre;

namespace {
InputString A(const char* s) { return ascii_symbols(s); }
Symbol ch(char c) { return static_cast<Symbol>(c); }
std::vector<Symbol> set(const char* s) {
  std::vector<Symbol> v;
  for (; *s; ++s) v.push_back(ch(*s));
  return v;
}
}  // namespace

TEST_CASE("setword groups") {
  auto g = compile_setword_groups(parse_regex("(ab)+|c"));
  REQUIRE(g.groups.size() == 1);
  CHECK(g.groups[0].repeat);
  CHECK(g.groups[0].blocks == std::vector<std::vector<Symbol>>{set("a"), set("b")});
  CHECK(g.singles == set("c"));

  auto h = compile_setword_groups(parse_regex("(a|b)c"));
  REQUIRE(h.groups.size() == 1);
  CHECK_FALSE(h.groups[0].repeat);
  CHECK(h.groups[0].blocks == std::vector<std::vector<Symbol>>{set("ab"), set("c")});

  auto k = compile_setword_groups(parse_regex("(a|b)+|c+"));
  REQUIRE(k.groups.size() == 2);
  CHECK(k.groups[0].blocks == std::vector<std::vector<Symbol>>{set("ab")});
  CHECK(k.groups[1].blocks == std::vector<std::vector<Symbol>>{set("c")});

  CHECK_THROWS_AS(compile_setword_groups(parse_regex("(a+b)+")), std::invalid_argument);
}

TEST_CASE("setword matching") {
  auto g = compile_setword_groups(parse_regex("(ab)+"));
  CHECK(match_setword_groups(g, A("abab")));
  CHECK_FALSE(match_setword_groups(g, A("aba")));
  auto h = compile_setword_groups(parse_regex("((a|b)a)+"));
  CHECK(match_setword_groups(h, A("aaba")));
  CHECK(match_setword_groups(h, A("aaba"), SetLookup::Sorted));
  CHECK_FALSE(match_setword_groups(h, A("aab")));
}

TEST_CASE("run-length encodings") {
  CHECK(rle_encode_text(A("aabbb")) == std::vector<Run>{{ch('a'), 2}, {ch('b'), 3}});
  CHECK(rle_encode_text(A("a")) == std::vector<Run>{{ch('a'), 1}});
  std::mt19937_64 rng(6);
  for (int it = 0; it < 100; ++it) {
    auto s = oracle::random_string(1 + rng() % 30, 2, rng);
    CHECK(rle_expand(rle_encode_text(s)) == s);
  }
  using F = Structure::Factor;
  CHECK(rle_encode_pattern({F{set("a"), false}, F{set("a"), true}, F{set("b"), false}}) ==
        PatternRle{{ch('a'), true, 2}, {ch('b'), false, 1}});
  CHECK(rle_encode_pattern({F{set("a"), true}}) == PatternRle{{ch('a'), true, 1}});
  CHECK(rle_encode_pattern({F{set("a"), false}, F{set("b"), false}, F{set("b"), false}, F{set("a"), false}}) ==
        PatternRle{{ch('a'), false, 1}, {ch('b'), false, 2}, {ch('a'), false, 1}});
}

TEST_CASE("rotation") {
  PatternRle p{{ch('a'), false, 1}, {ch('b'), false, 1}, {ch('a'), true, 1}};
  auto r = normalize_rotation(p, rle_encode_text(A("abaa")));
  REQUIRE(std::holds_alternative<Rotated>(r));
  const auto& rot = std::get<Rotated>(r);
  CHECK(rot.text == std::vector<Run>{{ch('a'), 3}, {ch('b'), 1}});
  CHECK(rot.pattern == PatternRle{{ch('a'), true, 2}, {ch('b'), false, 1}});

  PatternRle uni{{ch('a'), true, 2}};
  auto u = normalize_rotation(uni, rle_encode_text(A("aaa")));
  REQUIRE(std::holds_alternative<TrivialAnswer>(u));
  CHECK(std::get<TrivialAnswer>(u).matched);

  CHECK(std::holds_alternative<Reject>(normalize_rotation(p, rle_encode_text(A("baa")))));
}

TEST_CASE("divisor tree") {
  auto t = divisors_tree(12);
  CHECK(t.divisors.size() == 6);
  auto par = [&](std::size_t d) { return t.divisors[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(t.index_of(d))])]; };
  CHECK(par(6) == 12);
  CHECK(par(4) == 12);
  CHECK(par(3) == 6);
  CHECK(par(2) == 4);
  CHECK(par(1) == 2);
  CHECK(divisors_tree(1).divisors == std::vector<std::size_t>{1});
  auto e = divisors_tree(8);
  CHECK(e.divisors == std::vector<std::size_t>{8, 4, 2, 1});
  for (std::size_t N = 1; N <= 500; ++N) {
    auto tr = divisors_tree(N);
    std::size_t d = 0;
    for (std::size_t k = 1; k <= N; ++k) d += N % k == 0;
    CHECK(tr.divisors.size() == d);
    for (std::size_t i = 1; i < tr.divisors.size(); ++i)
      CHECK(static_cast<std::size_t>(tr.parent[i]) < i);
  }
  CHECK(factorize(360) == std::vector<std::pair<std::size_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("residue tables") {
  std::vector<Run> runs{{ch('a'), 2}, {ch('b'), 3}, {ch('a'), 1}, {ch('b'), 4}};
  auto tree = divisors_tree(4);
  auto tabs = alpha_beta_tables(runs, tree);
  const auto& s2 = tabs[static_cast<std::size_t>(tree.index_of(2))];
  CHECK(s2.alpha == std::vector<std::size_t>{1, 3});
  CHECK(s2.beta == std::vector<std::size_t>{2, 4});
  CHECK_FALSE(s2.clash);
  CHECK(tabs[static_cast<std::size_t>(tree.index_of(1))].clash);
  const auto& s4 = tabs[static_cast<std::size_t>(tree.index_of(4))];
  CHECK(s4.alpha == std::vector<std::size_t>{2, 3, 1, 4});
  CHECK(s4.beta == s4.alpha);

  std::mt19937_64 rng(8);
  for (std::size_t N = 1; N <= 500; N += 1 + rng() % 7) {
    std::vector<Run> rs(N);
    for (auto& r : rs) r = {static_cast<Symbol>(1 + rng() % 2), 1 + rng() % 5};
    auto tr = divisors_tree(N);
    auto tb = alpha_beta_tables(rs, tr);
    for (std::size_t k = 0; k < tr.divisors.size(); ++k) {
      std::size_t s = tr.divisors[k];
      bool clash = false;
      for (std::size_t j = 0; j < s; ++j) {
        std::size_t lo = SIZE_MAX, hi = 0;
        for (std::size_t p = j; p < N; p += s) {
          lo = std::min(lo, rs[p].count);
          hi = std::max(hi, rs[p].count);
          clash = clash || rs[p].sym != rs[j].sym;
        }
        CHECK(tb[k].alpha[j] == lo);
        CHECK(tb[k].beta[j] == hi);
      }
      CHECK(tb[k].clash == clash);
    }
  }
}

TEST_CASE("rle matching") {
  CHECK(match_rle_groups(compile_rle_groups(parse_regex("(a+b)+")), A("aabab")));
  CHECK_FALSE(match_rle_groups(compile_rle_groups(parse_regex("(ab)+")), A("abb")));
  CHECK(match_rle_groups(compile_rle_groups(parse_regex("a+")), A("aaaa")));
  CHECK(match_rle_groups(compile_rle_groups(parse_regex("(aba+)+")), A("abaab")) ==
        nfa_match(parse_regex("(aba+)+"), A("abaab")));
  CHECK_THROWS_AS(compile_rle_groups(parse_regex("((a|b)c)+")), std::invalid_argument);
}

TEST_CASE("rotation preserves matches on random same-endpoint patterns") {
  std::mt19937_64 rng(12);
  std::size_t decided = 0;
  for (int it = 0; it < 2000; ++it) {
    std::string body = "a";
    std::size_t len = 1 + rng() % 4;
    for (std::size_t k = 0; k < len; ++k) {
      body += static_cast<char>('a' + rng() % 2);
      if (rng() % 3 == 0) body += '+';
    }
    body += rng() % 2 ? "a+" : "a";
    auto r = parse_regex("(" + body + ")+");
    auto g = compile_rle_groups(r);
    auto s = oracle::sample_member(r, rng);
    if (rng() % 2) s[rng() % s.size()] ^= 1;
    for (auto& c : s)
      if (c != ch('a') && c != ch('b')) c = ch('b');
    CHECK(match_rle_groups(g, s) == nfa_match(r, s));
    ++decided;
  }
  CHECK(decided == 2000);
}
