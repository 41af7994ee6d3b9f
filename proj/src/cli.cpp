#include "hre/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hre/bench.hpp"
#include "hre/classifier.hpp"
#include "hre/generators.hpp"
#include "hre/match.hpp"
#include "hre/wordbreak.hpp"
#include "hre/wordbreak_fast.hpp"

namespace hre {

namespace {

constexpr int kTrue = 0, kFalse = 1, kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << body;
}

// Accepts both the ascii spelling and the glyphs used in output.
std::string ascii_type(std::string t) {
  for (auto [from, to] : {std::pair<std::string, std::string>{"∘", "o"}, {"⋆", "*"}}) {
    for (auto p = t.find(from); p != std::string::npos; p = t.find(from)) t.replace(p, from.size(), to);
  }
  return t;
}

std::string trail_text(const std::vector<RuleStep>& trail) {
  if (trail.empty()) return "-";
  std::string s;
  for (const auto& st : trail) s += (s.empty() ? "" : ", ") + describe(st);
  return s;
}

std::string pm_trail_text(const std::vector<PmRuleStep>& trail) {
  if (trail.empty()) return "-";
  std::string s;
  for (const auto& st : trail) {
    if (!s.empty()) s += ", ";
    switch (st.rule) {
      case PmRule::CollapseRepeat: s += "pp->p @" + std::to_string(st.pos + 1); break;
      case PmRule::DropPrefixPlus: s += "drop prefix +"; break;
      case PmRule::UnionPlusPrefix: s += "prefix |+ -> |"; break;
    }
  }
  return s;
}

std::string chain_text(const HardnessWitness& w) {
  std::string s = w.core.pretty();
  for (const auto& st : w.chain) s += " -> " + st.to.pretty();
  return s;
}

std::string membership_summary(const Classification& c) {
  switch (c.verdict) {
    case Verdict::Trivial: return "Trivial; O(nm) baseline suffices (degenerate type)";
    case Verdict::AlmostLinear:
      return "AlmostLinear; (n+m)^{1+o(1)} via the " + to_string(c.engine) + " engine";
    case Verdict::WordBreak: return "WordBreak; Θ-bound n·m^{1/3} (combinatorial, conditional)";
    case Verdict::Hard: {
      std::string s = "Hard; (nm)^{1-o(1)} unless SETH fails";
      if (c.witness) s += " (core " + c.witness->core.pretty() + ")";
      return s;
    }
  }
  return "";
}

std::string pm_summary(const PmClassification& c) {
  switch (c.verdict) {
    case PmVerdict::Linear: return "Linear; O(n+m)";
    case PmVerdict::NearLinear: return "NearLinear; (n+m)^{1+o(1)} via " + to_string(c.algorithm);
    case PmVerdict::Hard: {
      std::string s = "Hard; (nm)^{1-o(1)} unless SETH fails";
      if (c.witness) s += " (core " + c.witness->core.pretty() + ")";
      return s;
    }
  }
  return "";
}

int cmd_classify(const std::string& type_text, bool pm, const std::string& format, std::ostream& out) {
  TypeSeq t = parse_type(ascii_type(type_text));
  bool tsv = format == "tsv";
  if (!pm) {
    auto c = classify_membership(t);
    std::string core = c.witness ? c.witness->core.str() : "-";
    if (tsv) {
      out << "type\ttrail\tsimplified\tverdict\tengine\tcore\n";
      out << t.str() << '\t' << trail_text(c.trail) << '\t' << c.simplified.str() << '\t'
          << to_string(c.verdict) << '\t' << to_string(c.engine) << '\t' << core << '\n';
      return kTrue;
    }
    out << membership_summary(c) << '\n';
    out << "type        " << t.pretty() << '\n';
    out << "trail       " << trail_text(c.trail) << '\n';
    out << "simplified  " << c.simplified.pretty() << '\n';
    out << "verdict     " << to_string(c.verdict) << '\n';
    out << "engine      " << to_string(c.engine) << '\n';
    if (c.witness) {
      out << "core        " << c.witness->core.pretty() << '\n';
      out << "reduction   " << chain_text(*c.witness) << '\n';
    }
    return kTrue;
  }
  auto c = classify_pattern_matching(t);
  std::string core = c.witness ? c.witness->core.str() : "-";
  if (tsv) {
    out << "type\ttrail\tsimplified\tverdict\talgorithm\tcore\n";
    out << t.str() << '\t' << pm_trail_text(c.trail) << '\t' << c.simplified.str() << '\t'
        << to_string(c.verdict) << '\t' << to_string(c.algorithm) << '\t' << core << '\n';
    return kTrue;
  }
  out << pm_summary(c) << '\n';
  out << "type        " << t.pretty() << '\n';
  out << "trail       " << pm_trail_text(c.trail) << '\n';
  out << "simplified  " << c.simplified.pretty() << '\n';
  out << "verdict     " << to_string(c.verdict) << '\n';
  if (c.algorithm != PmAlgorithm::None) out << "algorithm   " << to_string(c.algorithm) << '\n';
  if (c.witness) {
    out << "core        " << c.witness->core.pretty() << '\n';
    out << "reduction   " << chain_text(*c.witness) << '\n';
  }
  return kTrue;
}

InputString read_text(const std::string& path, SymbolMode mode) {
  std::string body = read_file(path);
  if (mode == SymbolMode::Tokens) return parse_token_string(body);
  if (!body.empty() && body.back() == '\n') body.pop_back();
  if (!body.empty() && body.back() == '\r') body.pop_back();
  return ascii_symbols(body);
}

int cmd_match(const std::string& regex_path, const std::string& text_path, const std::string& engine,
              const std::string& mode_name, const std::string& format, std::ostream& out,
              std::ostream& err) {
  SymbolMode mode = mode_name == "tokens" ? SymbolMode::Tokens : SymbolMode::Ascii;
  Regex r = parse_regex(read_file(regex_path), mode);
  InputString s = read_text(text_path, mode);
  auto res = match_regex(r, s, parse_engine_choice(engine));
  const auto& c = res.classification;
  if (c.verdict == Verdict::Hard && res.engine == Engine::Nfa)
    err << "warning: type " << c.simplified.pretty()
        << " is Hard: (nm)^{1-o(1)} unless SETH fails; answering with the O(nm) NFA\n";
  if (format == "tsv") {
    out << "matched\tengine\tverdict\tn\n";
    out << (res.matched ? 1 : 0) << '\t' << to_string(res.engine) << '\t' << to_string(c.verdict)
        << '\t' << s.size() << '\n';
  } else {
    out << (res.matched ? "match" : "no match") << " (engine " << to_string(res.engine)
        << (res.decided_by_empty ? ", empty input" : "") << ")\n";
  }
  return res.matched ? kTrue : kFalse;
}

int cmd_wordbreak(const std::string& path, const std::string& algo, bool emit_t, bool serial,
                  const std::string& format, std::ostream& out) {
  auto inst = read_wbi_file(path);
  WordBreakResult res;
  if (algo == "dp") {
    res = wordbreak_dp(normalize(inst));
  } else {
    FastOptions opt;
    opt.parallel = !serial;
    if (algo == "q2")
      opt.method = JumpMethod::Q2;
    else if (algo == "sumset")
      opt.method = JumpMethod::Sumset;
    else if (algo == "auto")
      opt.method = JumpMethod::Auto;
    else
      throw std::invalid_argument("unknown algorithm '" + algo + "' (dp|q2|sumset|auto)");
    res = wordbreak_fast(inst, opt);
  }
  if (format == "tsv") {
    out << "answer\talgo\tn\tm\n";
    out << (res.answer ? "true" : "false") << '\t' << algo << '\t' << inst.text.size() << '\t'
        << dictionary_size(normalize(inst).dict) << '\n';
  } else {
    out << (res.answer ? "true" : "false") << '\n';
  }
  if (emit_t) {
    out << "T:";
    res.T.for_each([&](std::size_t i) { out << ' ' << i; });
    out << '\n';
  }
  return res.answer ? kTrue : kFalse;
}

OvVariant parse_variant(const std::string& v) {
  if (v == "pipe-pipe") return OvVariant::PipePipe;
  if (v == "pipe-plus") return OvVariant::PipePlus;
  if (v == "outer") return OvVariant::Outer;
  throw std::invalid_argument("unknown variant '" + v + "' (pipe-pipe|pipe-plus|outer)");
}

struct BenchArgs {
  std::size_t n = 1 << 17;
  std::size_t m_min = 1 << 10;
  std::size_t m_max = 1 << 19;
  std::size_t period = 8;
  std::size_t reps = 3;
  std::string algos = "auto,sumset";
  bool serial = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> algos;
  std::stringstream ss(a.algos);
  for (std::string x; std::getline(ss, x, ',');)
    if (!x.empty()) algos.push_back(x);
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> series;
  out << "algo\tn\tm\tseconds\tanswer\n";
  bool agree = true;
  for (std::size_t m = a.m_min; m <= a.m_max; m *= 2) {
    auto inst = scaling_instance(a.n, m, a.period);
    std::size_t mm = dictionary_size(inst.dict);
    int first = -1;
    for (const auto& algo : algos) {
      bool answer = false;
      double secs = 0;
      if (algo == "dp") {
        secs = median_seconds(a.reps, [&] { answer = wordbreak_dp(inst).answer; });
      } else {
        FastOptions opt;
        opt.parallel = !a.serial;
        opt.method = algo == "q2"       ? JumpMethod::Q2
                     : algo == "sumset" ? JumpMethod::Sumset
                     : algo == "auto"   ? JumpMethod::Auto
                                        : throw std::invalid_argument("unknown bench algorithm '" + algo + "'");
        secs = median_seconds(a.reps, [&] { answer = wordbreak_fast(inst, opt).answer; });
      }
      if (first < 0) first = answer;
      agree = agree && first == static_cast<int>(answer);
      out << algo << '\t' << a.n << '\t' << mm << '\t' << secs << '\t' << (answer ? "true" : "false")
          << '\n';
      series[algo].first.push_back(static_cast<double>(mm));
      series[algo].second.push_back(std::max(secs, 1e-9));
    }
  }
  for (const auto& algo : algos) {
    const auto& [xs, ys] = series[algo];
    if (xs.size() >= 2) out << "slope\t" << algo << '\t' << loglog_slope(xs, ys) << '\n';
  }
  if (!agree) {
    err << "error: algorithms disagree\n";
    return kError;
  }
  return kTrue;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneous regular expression membership: classifier, engines, generators"};
  app.name(args.empty() ? "hre" : args[0]);
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  };

  auto* classify = app.add_subcommand("classify", "Classify a type such as \"+|o\"");
  std::string type_text;
  bool pm = false;
  classify->add_option("type", type_text, "Type over o | * +")->required();
  classify->add_flag("--pattern-matching", pm, "Use the pattern-matching dichotomy");
  add_format(classify);

  auto* match = app.add_subcommand("match", "Decide whether a text matches a regex");
  std::string regex_path, text_path, engine = "auto", mode = "ascii";
  match->add_option("-r,--regex", regex_path, "Regex file")->required();
  match->add_option("-s,--string", text_path, "Text file")->required();
  match->add_option("--engine", engine, "auto|setword|rle|nfa")
      ->check(CLI::IsMember({"auto", "setword", "rle", "nfa"}));
  match->add_option("--mode", mode, "Symbol syntax")->check(CLI::IsMember({"ascii", "tokens"}));
  add_format(match);

  auto* wb = app.add_subcommand("wordbreak", "Solve a Word Break instance (.wbi)");
  std::string wbi_path, algo = "auto";
  bool emit_t = false, serial = false;
  wb->add_option("-d,--dict", wbi_path, "Instance file")->required();
  wb->add_option("--algo", algo, "dp|q2|sumset|auto")->check(CLI::IsMember({"dp", "q2", "sumset", "auto"}));
  wb->add_flag("--emit-T", emit_t, "Print the partitionable prefixes");
  wb->add_flag("--serial", serial, "Build buckets without threads");
  add_format(wb);

  auto* gen = app.add_subcommand("gen", "Generate reduction instances");
  gen->require_subcommand(1);
  auto* gen_wb = gen->add_subcommand("clique-wb", "k-Clique to Word Break");
  std::size_t gn = 8, gk = 4;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
  std::string out_path, graph_path, graph_out;
  gen_wb->add_option("--n", gn, "Nodes of the random graph");
  gen_wb->add_option("--k", gk, "Clique size (>= 4)");
  gen_wb->add_option("--edge-prob", edge_prob, "Edge probability");
  gen_wb->add_option("--seed", seed, "Random seed");
  gen_wb->add_option("--graph", graph_path, "Read the graph from an edge list instead");
  gen_wb->add_option("--write-graph", graph_out, "Also write the graph as an edge list");
  gen_wb->add_option("-o,--output", out_path, "Output .wbi")->required();

  auto* gen_ov = gen->add_subcommand("ov", "Orthogonal Vectors to membership");
  std::size_t na = 8, nb = 8, dim = 6;
  double p_one = 0.5;
  std::string variant = "pipe-pipe";
  gen_ov->add_option("--na", na, "|A|");
  gen_ov->add_option("--nb", nb, "|B|");
  gen_ov->add_option("--d", dim, "Dimension");
  gen_ov->add_option("--p-one", p_one, "Probability of a one bit");
  gen_ov->add_option("--variant", variant, "pipe-pipe|pipe-plus|outer")
      ->check(CLI::IsMember({"pipe-pipe", "pipe-plus", "outer"}));
  gen_ov->add_option("--seed", seed, "Random seed");
  gen_ov->add_option("-o,--output", out_path, "Output prefix (.regex and .txt are appended)")->required();

  auto* bench = app.add_subcommand("bench", "Sweep m at fixed n and fit log-log slopes");
  BenchArgs ba;
  bench->add_option("--n", ba.n, "Text length");
  bench->add_option("--m-min", ba.m_min, "Smallest dictionary size");
  bench->add_option("--m-max", ba.m_max, "Largest dictionary size");
  bench->add_option("--period", ba.period, "Word length step of the scaling dictionary");
  bench->add_option("--reps", ba.reps, "Repetitions per point (median)");
  bench->add_option("--algos", ba.algos, "Comma list of dp,q2,sumset,auto");
  bench->add_flag("--serial", ba.serial, "Build buckets without threads");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (classify->parsed()) return cmd_classify(type_text, pm, format, out);
    if (match->parsed()) return cmd_match(regex_path, text_path, engine, mode, format, out, err);
    if (wb->parsed()) return cmd_wordbreak(wbi_path, algo, emit_t, serial, format, out);
    if (gen_wb->parsed()) {
      Graph g = graph_path.empty() ? random_graph(gn, edge_prob, seed) : [&] {
        std::ifstream f(graph_path);
        if (!f) throw std::runtime_error("cannot open " + graph_path);
        return read_edge_list(f);
      }();
      auto inst = gen_clique_wordbreak(g, gk);
      std::ostringstream body;
      write_wbi(body, inst);
      write_file(out_path, body.str());
      if (!graph_out.empty()) {
        std::ostringstream gs;
        write_edge_list(gs, g);
        write_file(graph_out, gs.str());
      }
      out << "wrote " << out_path << ": n=" << inst.text.size()
          << " m=" << dictionary_size(inst.dict) << " words=" << inst.dict.size() << '\n';
      return kTrue;
    }
    if (gen_ov->parsed()) {
      auto inst = random_ov(na, nb, dim, p_one, seed);
      auto red = gen_ov_instance(inst, parse_variant(variant));
      write_file(out_path + ".regex", render(red.regex, SymbolMode::Tokens) + "\n");
      write_file(out_path + ".txt", symbols_to_string(red.text, SymbolMode::Tokens) + "\n");
      out << "wrote " << out_path << ".regex and " << out_path << ".txt: type "
          << infer_type(red.regex).pretty() << ", n=" << red.text.size()
          << ", orthogonal pair: " << (brute_force_ov(inst) ? "yes" : "no") << '\n';
      return kTrue;
    }
    if (bench->parsed()) return cmd_bench(ba, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace hre
