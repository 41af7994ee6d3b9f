#include "hre/rle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hre/classifier.hpp"

namespace hre {

std::vector<Run> rle_encode_text(const InputString& s) {
  std::vector<Run> runs;
  for (Symbol c : s) {
    if (!runs.empty() && runs.back().sym == c)
      ++runs.back().count;
    else
      runs.push_back({c, 1});
  }
  return runs;
}

InputString rle_expand(const std::vector<Run>& runs) {
  InputString s;
  for (const auto& r : runs) s.insert(s.end(), r.count, r.sym);
  return s;
}

PatternRle rle_encode_pattern(const std::vector<Structure::Factor>& factors) {
  PatternRle out;
  for (const auto& f : factors) {
    if (f.syms.size() != 1) throw std::invalid_argument("run-length factor with a symbol set");
    Symbol c = f.syms[0];
    if (!out.empty() && out.back().sym == c) {
      ++out.back().count;
      out.back().at_least = out.back().at_least || f.plus;
    } else {
      out.push_back({c, f.plus, 1});
    }
  }
  return out;
}

RleGroups compile_rle_groups(const Regex& r) {
  Structure st = extract_structure(r, rle_type());
  RleGroups g;
  g.singles = st.singles;
  std::sort(g.singles.begin(), g.singles.end());
  g.singles.erase(std::unique(g.singles.begin(), g.singles.end()), g.singles.end());
  for (const auto& b : st.branches) g.groups.push_back({b.repeat, rle_encode_pattern(b.factors)});
  return g;
}

namespace {

bool run_fits(const PatternRun& p, const Run& r) {
  return p.sym == r.sym && (p.at_least ? r.count >= p.count : r.count == p.count);
}

// Tables over one run sequence, built on first use.
class Tables {
 public:
  explicit Tables(const std::vector<Run>& runs) : runs_(runs) {}

  const ResidueTable& at(std::size_t s) {
    if (!built_) {
      tree_ = divisors_tree(runs_.size());
      tabs_ = alpha_beta_tables(runs_, tree_);
      slot_.assign(runs_.size() + 1, -1);
      for (std::size_t k = 0; k < tree_.divisors.size(); ++k)
        slot_[tree_.divisors[k]] = static_cast<std::int32_t>(k);
      built_ = true;
    }
    return tabs_[static_cast<std::size_t>(slot_[s])];
  }

 private:
  const std::vector<Run>& runs_;
  bool built_ = false;
  DivisorTree tree_;
  std::vector<ResidueTable> tabs_;
  std::vector<std::int32_t> slot_;
};

bool fits_periodic(const PatternRle& p, const ResidueTable& tb) {
  if (tb.clash) return false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (tb.sym[j] != p[j].sym) return false;
    if (p[j].at_least ? p[j].count > tb.alpha[j]
                      : (tb.alpha[j] != p[j].count || tb.beta[j] != p[j].count))
      return false;
  }
  return true;
}

}  // namespace

std::variant<Rotated, Reject, TrivialAnswer> normalize_rotation(const PatternRle& pattern,
                                                                const std::vector<Run>& text) {
  const auto& first = pattern.front();
  const auto& last = pattern.back();
  if (first.sym != last.sym) throw std::invalid_argument("pattern endpoints differ");
  if (pattern.size() == 1) {
    if (text.size() != 1 || text[0].sym != first.sym) return TrivialAnswer{false};
    std::size_t n = text[0].count;
    return TrivialAnswer{first.at_least ? n >= first.count : n % first.count == 0};
  }
  std::size_t N = text.size();
  if (N < 2 || text.front().sym != first.sym || text.back().sym != first.sym) return Reject{};
  if (!run_fits(first, text.front()) || !run_fits(last, text.back())) return Reject{};
  Rotated out;
  out.text.push_back({first.sym, text.back().count + text.front().count});
  out.text.insert(out.text.end(), text.begin() + 1, text.end() - 1);
  out.pattern.push_back({first.sym, first.at_least || last.at_least, first.count + last.count});
  out.pattern.insert(out.pattern.end(), pattern.begin() + 1, pattern.end() - 1);
  return out;
}

bool match_rle_groups(const RleGroups& g, const InputString& s) {
  std::size_t n = s.size();
  if (n == 0) return false;
  if (n == 1 && std::binary_search(g.singles.begin(), g.singles.end(), s[0])) return true;
  auto runs = rle_encode_text(s);
  std::size_t N = runs.size();
  Tables plain(runs);
  std::optional<std::vector<Run>> rot_runs;
  std::optional<Tables> rotated;

  for (const auto& grp : g.groups) {
    const auto& p = grp.pattern;
    std::size_t k = p.size();
    if (!grp.repeat) {
      if (k != N) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = run_fits(p[j], runs[j]);
      if (ok) return true;
      continue;
    }
    if (p.front().sym != p.back().sym) {
      if (N % k == 0 && fits_periodic(p, plain.at(k))) return true;
      continue;
    }
    auto norm = normalize_rotation(p, runs);
    if (auto* t = std::get_if<TrivialAnswer>(&norm)) {
      if (t->matched) return true;
      continue;
    }
    if (std::holds_alternative<Reject>(norm)) continue;
    auto& r = std::get<Rotated>(norm);
    if (!rotated) {
      // the rotated text is the same for every group that gets here
      rot_runs = std::move(r.text);
      rotated.emplace(*rot_runs);
    }
    std::size_t k2 = r.pattern.size();
    if ((N - 1) % k2 == 0 && fits_periodic(r.pattern, rotated->at(k2))) return true;
  }
  return false;
}

}  // namespace hre
