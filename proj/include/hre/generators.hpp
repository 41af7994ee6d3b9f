#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "hre/regex.hpp"
#include "hre/wordbreak.hpp"

namespace hre {

/// Symbol ids shared by all reductions.
namespace sym {
inline constexpr Symbol kAlpha = 1;
inline constexpr Symbol kBeta = 2;
inline constexpr Symbol kGamma = 3;
inline constexpr Symbol kMu = 4;
inline constexpr Symbol kHash = 5;
inline constexpr Symbol kDollar = 6;
inline constexpr Symbol kZero = 7;
inline constexpr Symbol kOne = 8;
/// Graph node i (1-based), or the position marker #_i in the outer-union
/// OV construction.
inline constexpr Symbol node(std::size_t i) { return static_cast<Symbol>(8 + i); }
}  // namespace sym

/// Uniform double in [0, 1) from the top 53 bits; stable across standard
/// libraries, unlike std::uniform_real_distribution.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// offset 0: a t1 b a t2 b ... a tm b.  offset 1: t1 b a t2 b a ... tm b a.
InputString encode_wrapped(const InputString& seq, int offset);
/// Same, with each unit wrapped as a whole instead of each symbol.
InputString encode_units(const std::vector<InputString>& units, int offset);

/// Simple undirected graph on nodes 1..n; edges stored with i < j, sorted.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void add_edge(std::size_t i, std::size_t j);  // ignores self-loops and duplicates
  std::vector<std::vector<bool>> adjacency() const;  // (n+1) x (n+1)
};

Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed);
Graph complete_graph(std::size_t n);

/// "n <count>" header, then one "i j" pair per line (1-based). Lines starting
/// with '#' are comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// All k-subsets forming cliques, as sorted tuples in lexicographic order.
std::vector<std::vector<std::size_t>> list_cliques(const Graph& g, std::size_t k);

/// Word Break instance that is breakable iff g has a k-clique. Requires k >= 4.
WordBreakInstance gen_clique_wordbreak(const Graph& g, std::size_t k);

/// Text length of the instance above for `cliques` (k-2)-cliques.
std::size_t clique_text_length(std::size_t n, std::size_t k, std::size_t cliques);

bool brute_force_clique(const Graph& g, std::size_t k);

struct OvInstance {
  std::size_t d = 0;
  std::vector<std::vector<std::uint8_t>> A, B;
};

OvInstance random_ov(std::size_t na, std::size_t nb, std::size_t d, double p_one,
                     std::uint64_t seed);

enum class OvVariant { PipePipe, PipePlus, Outer };

/// "+|o|", "+|o+", "|+|o".
TypeSeq variant_type(OvVariant v);
const char* to_string(OvVariant v);

struct OvReduction {
  Regex regex;
  InputString text;
};

/// The regex matches the text iff some a in A and b in B are orthogonal.
OvReduction gen_ov_instance(const OvInstance& inst, OvVariant variant);

bool brute_force_ov(const OvInstance& inst);

}  // namespace hre
