#include "hre/divisor_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace hre {

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::int32_t DivisorTree::index_of(std::size_t d) const {
  for (std::size_t k = 0; k < divisors.size(); ++k)
    if (divisors[k] == d) return static_cast<std::int32_t>(k);
  return -1;
}

DivisorTree divisors_tree(std::size_t N) {
  if (N == 0) throw std::invalid_argument("divisor tree of 0");
  auto f = factorize(N);
  DivisorTree t;
  t.N = N;
  // BFS from N: a child of s is s / p for a prime p at or below the smallest
  // prime where s still has a deficit, keeping the parent rule consistent.
  std::vector<std::vector<unsigned>> expo{{}};
  for (auto& [p, e] : f) expo[0].push_back(e);
  t.divisors.push_back(N);
  t.parent.push_back(-1);
  for (std::size_t h = 0; h < t.divisors.size(); ++h) {
    std::size_t s = t.divisors[h];
    const auto ex = expo[h];
    // first prime index where s's exponent is below N's
    std::size_t first_deficit = f.size();
    for (std::size_t k = 0; k < f.size(); ++k)
      if (ex[k] < f[k].second) {
        first_deficit = k;
        break;
      }
    // dividing by prime k gives deficit at k; the parent of s/p_k is s iff k
    // is the smallest deficit index of s/p_k, i.e. k <= first_deficit
    for (std::size_t k = 0; k < f.size() && k <= first_deficit; ++k) {
      if (ex[k] == 0) continue;
      auto child = ex;
      --child[k];
      t.divisors.push_back(s / f[k].first);
      t.parent.push_back(static_cast<std::int32_t>(h));
      expo.push_back(std::move(child));
    }
  }
  return t;
}

std::vector<ResidueTable> alpha_beta_tables(const std::vector<Run>& runs, const DivisorTree& tree) {
  if (runs.size() != tree.N) throw std::invalid_argument("run count differs from tree root");
  std::vector<ResidueTable> tab(tree.divisors.size());
  auto& root = tab[0];
  for (const auto& r : runs) {
    root.alpha.push_back(r.count);
    root.beta.push_back(r.count);
    root.sym.push_back(r.sym);
  }
  for (std::size_t k = 1; k < tree.divisors.size(); ++k) {
    const auto& par = tab[static_cast<std::size_t>(tree.parent[k])];
    std::size_t s = tree.divisors[k];
    std::size_t t = tree.divisors[static_cast<std::size_t>(tree.parent[k])];
    auto& cur = tab[k];
    cur.alpha.assign(par.alpha.begin(), par.alpha.begin() + static_cast<std::ptrdiff_t>(s));
    cur.beta.assign(par.beta.begin(), par.beta.begin() + static_cast<std::ptrdiff_t>(s));
    cur.sym.assign(par.sym.begin(), par.sym.begin() + static_cast<std::ptrdiff_t>(s));
    cur.clash = par.clash;
    for (std::size_t h = s; h < t; h += s)
      for (std::size_t j = 0; j < s; ++j) {
        cur.alpha[j] = std::min(cur.alpha[j], par.alpha[h + j]);
        cur.beta[j] = std::max(cur.beta[j], par.beta[h + j]);
        if (cur.sym[j] != par.sym[h + j]) cur.clash = true;
      }
  }
  return tab;
}

}  // namespace hre
