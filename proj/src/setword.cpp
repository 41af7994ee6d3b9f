#include "hre/setword.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "hre/classifier.hpp"
#include "hre/structure.hpp"

namespace hre {

namespace {

void sort_unique(std::vector<Symbol>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Distinct symbols of s at positions congruent to j mod L, for each j.
std::vector<std::vector<Symbol>> position_classes(const InputString& s, std::size_t L) {
  std::vector<std::vector<Symbol>> cls(L);
  for (std::size_t p = 0; p < s.size(); ++p) cls[p % L].push_back(s[p]);
  for (auto& c : cls) sort_unique(c);
  return cls;
}

}  // namespace

SetWordGroups compile_setword_groups(const Regex& r) {
  Structure st = extract_structure(r, setword_type());
  SetWordGroups g;
  g.singles = st.singles;
  sort_unique(g.singles);
  for (auto& b : st.branches) {
    SetWordGroups::Group grp;
    grp.repeat = b.repeat;
    for (auto& f : b.factors) {
      if (f.plus) throw std::invalid_argument("inner + in a set-word regex");
      sort_unique(f.syms);
      grp.blocks.push_back(std::move(f.syms));
    }
    g.groups.push_back(std::move(grp));
  }
  return g;
}

bool match_setword_groups(const SetWordGroups& g, const InputString& s, SetLookup lookup) {
  std::size_t n = s.size();
  if (n == 0) return false;
  if (n == 1 && std::binary_search(g.singles.begin(), g.singles.end(), s[0])) return true;

  std::map<std::size_t, std::vector<const SetWordGroups::Group*>> by_len;
  for (const auto& grp : g.groups) {
    std::size_t L = grp.blocks.size();
    if (L == n || (grp.repeat && n % L == 0)) by_len[L].push_back(&grp);
  }
  for (const auto& [L, groups] : by_len) {
    auto cls = position_classes(s, L);
    std::vector<std::unordered_set<Symbol>> hashed;
    if (lookup == SetLookup::Hash)
      for (const auto& c : cls) hashed.emplace_back(c.begin(), c.end());
    auto in_class = [&](std::size_t j, Symbol c) {
      if (lookup == SetLookup::Hash) return hashed[j].count(c) > 0;
      return std::binary_search(cls[j].begin(), cls[j].end(), c);
    };
    for (const auto* grp : groups) {
      bool ok = true;
      // T_j is inside S_j iff |T_j & S_j| = |T_j|; count over S_j
      for (std::size_t j = 0; j < L && ok; ++j) {
        std::size_t hits = 0;
        for (Symbol c : grp->blocks[j]) hits += in_class(j, c) ? 1 : 0;
        ok = hits == cls[j].size();
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace hre
