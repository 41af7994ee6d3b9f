#include "hre/index_set.hpp"

namespace hre {

void or_shifted(IndexSet& dst, const IndexSet& src, std::size_t shift) {
  auto& out = dst.words();
  const auto& in = src.words();
  std::size_t ws = shift >> 6, bs = shift & 63;
  for (std::size_t k = 0; k < in.size(); ++k) {
    std::uint64_t w = in[k];
    if (!w) continue;
    std::size_t at = k + ws;
    if (at >= out.size()) break;
    out[at] |= w << bs;
    if (bs && at + 1 < out.size()) out[at + 1] |= w >> (64 - bs);
  }
  dst.trim();
}

IndexSet bool_sumset(const IndexSet& a, const IndexSet& b) {
  IndexSet out(a.universe() + b.universe());
  const IndexSet& small = a.count() <= b.count() ? a : b;
  const IndexSet& large = &small == &a ? b : a;
  small.for_each([&](std::size_t s) { or_shifted(out, large, s); });
  return out;
}

}  // namespace hre
