#include "hre/wordbreak.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hre {

WordBreakInstance normalize(WordBreakInstance inst) {
  auto& d = inst.dict;
  std::size_t n = inst.text.size();
  d.erase(std::remove_if(d.begin(), d.end(),
                         [n](const InputString& w) { return w.empty() || w.size() > n; }),
          d.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return inst;
}

std::size_t dictionary_size(const std::vector<InputString>& dict) {
  std::size_t m = 0;
  for (const auto& w : dict) m += w.size();
  return m;
}

WordBreakResult wordbreak_dp(const WordBreakInstance& inst) {
  const auto& s = inst.text;
  std::size_t n = s.size();
  WordBreakResult res{false, IndexSet(n + 1)};
  res.T.insert(0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto& w : inst.dict) {
      std::size_t L = w.size();
      if (L == 0 || L > i || !res.T.contains(i - L)) continue;
      if (std::equal(w.begin(), w.end(), s.begin() + static_cast<std::ptrdiff_t>(i - L))) {
        res.T.insert(i);
        break;
      }
    }
  }
  res.answer = res.T.contains(n);
  return res;
}

std::vector<InputString> bucket_words(const std::vector<InputString>& dict, std::size_t q) {
  std::vector<InputString> out;
  for (const auto& w : dict)
    if (w.size() >= q && w.size() < 2 * q) out.push_back(w);
  return out;
}

IndexSet jump_bruteforce(const WordBreakInstance& inst, std::size_t q, std::size_t x,
                         const IndexSet& S) {
  const auto& s = inst.text;
  std::size_t n = s.size();
  IndexSet out(n + 1);
  auto words = bucket_words(inst.dict, q);
  std::size_t hi = std::min(x + 2 * q, n);
  for (std::size_t i = x + 1; i <= hi; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!S.contains(j)) continue;
      for (const auto& w : words) {
        if (w.size() == i - j &&
            std::equal(w.begin(), w.end(), s.begin() + static_cast<std::ptrdiff_t>(j))) {
          out.insert(i);
          break;
        }
      }
    }
  }
  return out;
}

Regex dictionary_regex(const std::vector<InputString>& dict) {
  if (dict.empty()) throw std::invalid_argument("empty dictionary");
  Regex r;
  std::vector<Regex::NodeId> alts;
  for (const auto& w : dict) {
    if (w.empty()) throw std::invalid_argument("empty dictionary word");
    if (w.size() == 1) {
      alts.push_back(r.add_leaf(w[0]));
      continue;
    }
    std::vector<Regex::NodeId> leaves;
    for (Symbol c : w) leaves.push_back(r.add_leaf(c));
    alts.push_back(r.add_inner(Op::Concat, std::move(leaves)));
  }
  r.set_root(r.add_inner(Op::Plus, {r.add_inner(Op::Union, std::move(alts))}));
  return r;
}

std::optional<std::vector<InputString>> extract_dictionary(const Regex& r) {
  if (r.empty()) return std::nullopt;
  const auto& root = r.node(r.root());
  if (root.leaf || root.op != Op::Plus) return std::nullopt;
  const auto& u = r.node(root.kids[0]);
  if (u.leaf || u.op != Op::Union) return std::nullopt;
  std::vector<InputString> dict;
  for (auto k : u.kids) {
    const auto& c = r.node(k);
    if (c.leaf) {
      dict.push_back({c.sym});
      continue;
    }
    if (c.op != Op::Concat) return std::nullopt;
    InputString w;
    for (auto g : c.kids) {
      if (!r.node(g).leaf) return std::nullopt;
      w.push_back(r.node(g).sym);
    }
    dict.push_back(std::move(w));
  }
  return dict;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

InputString parse_field(const std::string& raw, std::size_t line) {
  std::string v = trim(raw);
  if (v.empty() || v[0] != '"') return parse_token_string(v);
  InputString out;
  std::size_t i = 1;
  for (; i < v.size() && v[i] != '"'; ++i) {
    if (v[i] == '\\') {
      if (++i == v.size()) break;
    }
    out.push_back(static_cast<unsigned char>(v[i]));
  }
  if (i >= v.size() || i + 1 != v.size())
    throw std::runtime_error("wbi line " + std::to_string(line) + ": bad quoted string");
  return out;
}

std::string format_field(const InputString& s) {
  bool printable = std::all_of(s.begin(), s.end(), [](Symbol c) { return c >= 32 && c < 127; });
  if (s.empty() || printable) {
    std::string out = "\"";
    for (Symbol c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += static_cast<char>(c);
    }
    return out + "\"";
  }
  return symbols_to_string(s, SymbolMode::Tokens);
}

}  // namespace

WordBreakInstance read_wbi(std::istream& in) {
  WordBreakInstance inst;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false, have_text = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t != "wbi 1") throw std::runtime_error("wbi: expected header 'wbi 1'");
      have_header = true;
      continue;
    }
    auto colon = t.find(':');
    std::string key = colon == std::string::npos ? t : t.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : t.substr(colon + 1);
    try {
      if (key == "text" && !have_text) {
        inst.text = parse_field(rest, lineno);
        have_text = true;
      } else if (key == "word" && have_text) {
        inst.dict.push_back(parse_field(rest, lineno));
      } else {
        throw std::runtime_error("unexpected '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw std::runtime_error("wbi line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::runtime_error& e) {
      std::string msg = e.what();
      if (msg.rfind("wbi", 0) == 0) throw;
      throw std::runtime_error("wbi line " + std::to_string(lineno) + ": " + msg);
    }
  }
  if (!have_header) throw std::runtime_error("wbi: empty file");
  if (!have_text) throw std::runtime_error("wbi: missing text line");
  return inst;
}

WordBreakInstance read_wbi_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_wbi(f);
}

void write_wbi(std::ostream& out, const WordBreakInstance& inst) {
  out << "wbi 1\n";
  out << "text: " << format_field(inst.text) << '\n';
  for (const auto& w : inst.dict) out << "word: " << format_field(w) << '\n';
}

}  // namespace hre
